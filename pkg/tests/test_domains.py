from fractions import Fraction

import pytest

from utmv.domains import COMPLEX, GF2, INT, RAT, REAL, DomainKind, ScalarDomain


def test_parse_round_trip():
    for text in ["gf2", "gfp:7", "int", "rat", "real", "complex", "real:1e-06"]:
        assert str(ScalarDomain.parse(text)) == text


def test_gfp_requires_prime():
    with pytest.raises(ValueError):
        ScalarDomain.gfp(9)
    with pytest.raises(ValueError):
        ScalarDomain.gfp(1)
    assert ScalarDomain.gfp(2).modulus == 2


def test_exact_kinds_take_no_tolerance():
    with pytest.raises(ValueError):
        ScalarDomain(DomainKind.INT, tolerance=1e-3)
    assert REAL.tolerance == 1e-9


def test_scalar_reduction_and_equality():
    f7 = ScalarDomain.gfp(7)
    assert f7.scalar(9) == 2
    assert f7.scalar(-1) == 6
    assert GF2.scalar(3) == 1
    assert RAT.scalar("3/6") == Fraction(1, 2)
    assert INT.equal(3, 3) and not INT.equal(3, 4)
    assert REAL.equal(1.0, 1.0 + 1e-12)
    assert not REAL.equal(1.0, 1.0 + 1e-6)
    assert COMPLEX.equal(1j, 1j + 1e-12)


def test_properties():
    assert GF2.is_finite_field and GF2.is_exact and not GF2.is_approx
    assert INT.counts_exactly and RAT.counts_exactly
    assert not GF2.counts_exactly and not REAL.counts_exactly
    assert REAL.is_approx and COMPLEX.is_approx

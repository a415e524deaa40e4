import numpy as np
import pytest

from utmv.domains import GF2, INT, RAT, REAL
from utmv.gadgets import is_permutation, is_unitary
from utmv.instances import generate_instance


def test_permutation_instance():
    a = generate_instance("permutation", 4, 1).raw
    assert is_permutation(a)


def test_star_degrees():
    a = generate_instance("star", 4, 0).raw
    assert a.sum(axis=0).tolist() == [3, 1, 1, 1]


def test_hadamard_unitary():
    a = generate_instance("hadamard_unitary", 4, 0).raw
    assert np.allclose(a.T @ a, np.eye(4), atol=1e-12)
    with pytest.raises(ValueError):
        generate_instance("hadamard_unitary", 6, 0)


@pytest.mark.parametrize("seed", range(10))
def test_families(seed):
    n = 12
    assert np.count_nonzero(generate_instance("diagonal", n, seed).raw - np.diag(np.diag(generate_instance("diagonal", n, seed).raw))) == 0
    near = generate_instance("near_diagonal", n, seed, domain=GF2).raw
    assert np.count_nonzero(near - np.diag(np.diag(near))) == 1
    assert generate_instance("symmetric", n, seed).is_symmetric()
    assert not generate_instance("asymmetric", n, seed).is_symmetric()
    np_ = generate_instance("near_permutation", n, seed).raw
    assert np_.sum() == n and sorted(np_.sum(axis=0))[:1] == [0] and max(np_.sum(axis=0)) == 2
    assert np_.sum(axis=1).tolist() == [1] * n
    ds = generate_instance("doubly_stochastic", n, seed).to_array()
    assert all(sum(row) == 1 for row in ds) and all(sum(col) == 1 for col in ds.T)
    assert (generate_instance("nonnegative", n, seed).raw >= 0).all()
    assert (generate_instance("planted_negative", n, seed).raw < 0).sum() == 1
    ones_col = generate_instance("all_ones_column", n, seed).raw
    assert any((ones_col[:, j] == 1).all() for j in range(n))
    dc = generate_instance("distinct_columns", n, seed, domain=GF2).raw
    assert len({tuple(c) for c in dc.T}) == n
    ic = generate_instance("identical_columns", n, seed, domain=GF2).raw
    assert len({tuple(c) for c in ic.T}) < n


def test_graph_families_are_simple():
    for kind in ("star", "path", "random_graph"):
        g = generate_instance(kind, 9, 3)
        assert g.is_binary() and g.is_symmetric() and g.is_hollow()
    assert generate_instance("path", 5, 0).raw.sum() == 8


def test_reproducible():
    for kind in ("random", "near_permutation", "doubly_stochastic", "random_graph"):
        assert generate_instance(kind, 7, 42) == generate_instance(kind, 7, 42)


def test_domains_respected():
    assert generate_instance("random", 4, 0, domain=RAT).domain == RAT
    assert generate_instance("random", 4, 0, domain=REAL).domain == REAL
    assert generate_instance("star", 4, 0).domain == INT
    with pytest.raises(ValueError):
        generate_instance("nope", 4, 0)

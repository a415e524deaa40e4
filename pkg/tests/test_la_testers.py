import math

import numpy as np
import pytest

from utmv import la_testers as la
from utmv.domains import COMPLEX, GF2, INT, RAT, REAL, ScalarDomain
from utmv.gadgets import build_gadget, hadamard
from utmv.instances import generate_instance
from utmv.matrix import DenseMatrix
from utmv.oracle import BilinearOracle


def oracle(a, dom=INT):
    return BilinearOracle(DenseMatrix(a, dom))


def test_amplification_rounds():
    assert la.AmplificationPlan(0.01, 1 / 16).rounds == math.ceil(math.log(100) / -math.log(15 / 16))
    assert la.AmplificationPlan(0.5, 0.9).rounds == 1
    with pytest.raises(ValueError):
        la.AmplificationPlan(0.0, 0.5)


def test_diagonal_examples():
    assert la.test_diagonal(oracle(np.diag([1, 2, 3])), 0.01, seed=1).accepted
    assert la.test_diagonal(oracle(np.zeros((4, 4), dtype=int)), 0.01, seed=1).accepted


def test_diagonal_budget():
    o = oracle(np.diag([1, 2, 3, 4]))
    r = la.test_diagonal(o, 0.01, seed=3)
    assert r.queries_charged == o.ledger.total == la.AmplificationPlan(0.01, la.DIAGONAL_DELTA).rounds
    assert la.test_diagonal(oracle(np.eye(5, dtype=int)), rounds=7, seed=0).queries_charged == 7


def test_diagonal_single_off_entry_gf2():
    a = np.zeros((8, 8), dtype=int)
    a[1, 2] = 1
    rejects = sum(la.test_diagonal(oracle(a, GF2), rounds=1, seed=s).rejected for s in range(4000))
    assert rejects / 4000 >= 1 / 16 - 3 * math.sqrt((1 / 16) * (15 / 16) / 4000)


def test_symmetric_examples():
    sym = generate_instance("symmetric", 6, 2)
    assert la.test_symmetric(BilinearOracle(sym), 0.01, seed=1).accepted
    a = np.zeros((2, 2), dtype=int)
    a[0, 1] = 1
    rejects = sum(la.test_symmetric(oracle(a), 1e-6, seed=s).rejected for s in range(1000))
    assert rejects >= 999
    assert la.test_symmetric(oracle([[5]]), 0.01, seed=0).accepted


def test_symmetric_budget_and_detection():
    assert la.symmetric_detection(GF2) == la.GF2_BILINEAR_DELTA
    assert la.symmetric_detection(ScalarDomain.gfp(5)) == la.FINITE_FIELD_DELTA
    assert la.symmetric_detection(INT) == la.symmetric_detection(REAL) == la.SZ_BILINEAR_DELTA
    o = BilinearOracle(generate_instance("symmetric", 8, 0, domain=GF2))
    r = la.test_symmetric(o, 0.01, seed=0)
    assert r.queries_charged == o.ledger.total == 2 * la.AmplificationPlan(0.01, 3 / 8).rounds


def test_gf2_symmetric_single_round_rate():
    # rank-2 antisymmetric difference is the worst case: detection exactly 3/8
    a = np.zeros((6, 6), dtype=int)
    a[0, 1] = 1
    rejects = sum(la.test_symmetric(oracle(a, GF2), rounds=1, seed=s).rejected for s in range(8000))
    sigma = math.sqrt(3 / 8 * 5 / 8 / 8000)
    assert abs(rejects / 8000 - 3 / 8) < 4 * sigma


@pytest.mark.parametrize("dom", [RAT, REAL, COMPLEX, ScalarDomain.gfp(7)])
def test_symmetric_all_domains(dom):
    assert la.test_symmetric(BilinearOracle(generate_instance("symmetric", 6, 1, domain=dom)), 0.01, seed=2).accepted
    assert la.test_symmetric(BilinearOracle(generate_instance("asymmetric", 6, 1, domain=dom)), 0.01, seed=2).rejected


def test_unitary_examples():
    g8 = hadamard(3).normalized()
    o = oracle(g8, REAL)
    r = la.test_unitary(o, 3, seed=0)
    assert r.accepted and r.queries_charged == 24 == o.ledger.total
    bad = np.eye(4)
    bad[0, 0] = 2
    assert la.test_unitary(oracle(bad, REAL), 1, seed=0).rejected
    gadget = build_gadget("unitary_rand", [1, 1, 0, 0, 0, 0, 0, 0], [1, 0, 1, 0, 0, 0, 0, 0])
    assert la.test_unitary(BilinearOracle(gadget.matrix), 1, seed=0).rejected


def test_unitary_complex_and_refusal():
    rng = np.random.default_rng(0)
    q, _ = np.linalg.qr(rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6)))
    assert la.test_unitary(oracle(q, COMPLEX), 2, seed=1).accepted
    with pytest.raises(ValueError):
        la.test_unitary(oracle(np.eye(2, dtype=int)), 1)


def test_exact_trace():
    assert la.exact_trace(oracle(np.eye(5, dtype=int))) == 5
    o = oracle(np.diag([0, 1, 2, 3]))
    assert la.exact_trace(o) == 6 and o.ledger.total == 4
    assert la.exact_trace(BilinearOracle(generate_instance("random_graph", 10, 1))) == 0


@pytest.mark.parametrize("dom", [GF2, ScalarDomain.gfp(11), INT, RAT, REAL, COMPLEX])
def test_exact_trace_matches_unmetered(dom):
    for seed in range(20):
        m = generate_instance("random", 7, seed, domain=dom)
        want = sum(m[i, i] for i in range(7))
        if dom.is_finite_field:
            want %= dom.modulus
        got = la.exact_trace(BilinearOracle(m))
        assert dom.equal(got, want)

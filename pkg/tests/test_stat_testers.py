import math

import numpy as np
import pytest

from utmv import stat_testers as stt
from utmv.domains import GF2, INT, RAT, REAL
from utmv.gadgets import build_gadget
from utmv.instances import generate_instance
from utmv.matrix import DenseMatrix
from utmv.oracle import BilinearOracle


def oracle(a, dom=INT):
    return BilinearOracle(DenseMatrix(a, dom))


def test_all_ones_column():
    rng = np.random.default_rng(0)
    a = (rng.random((6, 6)) < 0.3).astype(int)
    a[0] = 0
    a[:, 3] = 1
    o = oracle(a)
    r = stt.find_all_ones_column(o, seed=1)
    assert r.rejected and r.witness == 3 and o.ledger.total == 6
    assert stt.find_all_ones_column(oracle(np.zeros((4, 4), dtype=int)), seed=0).accepted
    r = stt.find_all_ones_column(oracle(np.ones((4, 4), dtype=int)), seed=0)
    assert r.witness == 0 and r.detail["matches"] == [0, 1, 2, 3]


def test_identical_columns_planted():
    rng = np.random.default_rng(5)
    for s in range(20):
        a = rng.integers(0, 2, size=(8, 8))
        a[:, 5] = a[:, 2]
        r = stt.find_identical_columns(oracle(a, GF2), 0.01, seed=s)
        assert r.rejected and any({2, 5} <= set(g) for g in r.detail["groups"])


def test_identical_budget_gf2():
    o = oracle(np.eye(16, dtype=int), GF2)
    r = stt.find_identical_columns(o, 0.01, seed=0)
    assert o.ledger.total == 16 * math.ceil(math.log2(256 / 0.01)) == r.queries_charged


def test_identity_has_no_identical_columns():
    accepted = sum(stt.find_identical_columns(oracle(np.eye(10, dtype=int), GF2), 0.01, seed=s).accepted
                   for s in range(300))
    assert accepted >= 297


def test_identical_int_mode():
    a = np.array([[1, 0], [1, 0]])
    o = oracle(a)
    assert stt.find_identical_columns(o, seed=0).accepted and o.ledger.total == 2
    with pytest.raises(ValueError):
        stt.find_identical_columns(oracle(np.eye(2), REAL))


def test_majority():
    assert stt.column_majority_exact(oracle(np.eye(4, dtype=int), GF2)).tolist() == [0, 0, 0, 0]
    o = oracle(np.ones((4, 4), dtype=int), GF2)
    assert stt.column_majority_exact(o).tolist() == [1, 1, 1, 1]
    assert o.ledger.total == 16
    x = [[1, 1, 0, 0, 0, 0, 0, 0]] + [[0, 0, 1, 1, 0, 0, 0, 0]] * 7
    y = [[0, 1, 1, 0, 0, 0, 0, 0]] + [[1, 1, 0, 0, 0, 0, 0, 0]] * 7
    g = build_gadget("majority", x, y)
    bits = stt.column_majority_exact(BilinearOracle(g.matrix))
    assert bits[0] == 0 and tuple(bits) == g.predicted


def test_permutation_tester():
    for s in range(30):
        o = BilinearOracle(generate_instance("permutation", 9, s))
        r = stt.test_permutation(o, 8, seed=s)
        assert r.accepted and r.queries_charged == 17 == o.ledger.total
    a = np.eye(5, dtype=int)
    a[4, 4] = 0
    o = oracle(a)
    r = stt.test_permutation(o, 8, seed=0)
    assert r.rejected and o.ledger.total == 1 and r.rounds == 0
    rejects = sum(stt.test_permutation(BilinearOracle(generate_instance("near_permutation", 64, s)), 64, seed=s).rejected
                  for s in range(200))
    assert rejects >= 195


def test_doubly_stochastic_tester():
    assert stt.test_doubly_stochastic(oracle(np.eye(4, dtype=int), RAT), 8, seed=0).accepted
    assert stt.test_doubly_stochastic(oracle(np.full((5, 5), 0.2), REAL), 8, seed=0).accepted
    from fractions import Fraction
    assert stt.test_doubly_stochastic(oracle([[Fraction(1, 3)] * 3] * 3, RAT), 8, seed=0).accepted
    bad = np.diag([2, 0, 1, 1])
    rejects = sum(stt.test_doubly_stochastic(oracle(bad, RAT), 64, seed=s).rejected for s in range(100))
    assert rejects >= 99


def test_negative_scan():
    x = [1, 0, 0, 0]
    g = build_gadget("negative", x, x)
    r = stt.scan_negative_entry(BilinearOracle(g.matrix))
    assert r.rejected and r.witness == (0, 0)
    assert stt.scan_negative_entry(oracle(np.ones((3, 3), dtype=int))).accepted
    a = np.zeros((5, 5), dtype=int)
    a[3, 1] = -1
    o = oracle(a)
    assert stt.scan_negative_entry(o).witness == (3, 1) and o.ledger.total == 25

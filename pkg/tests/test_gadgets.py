import itertools
import math

import numpy as np
import pytest

from utmv import gadgets as gd


def test_hadamard_small():
    assert gd.hadamard(0).entries.tolist() == [[1]]
    assert gd.hadamard(1).entries.tolist() == [[1, 1], [1, -1]]
    g4 = gd.hadamard(2).normalized()
    assert np.allclose(g4.T @ g4, np.eye(4), atol=1e-12)


@pytest.mark.parametrize("k", range(1, 7))
def test_hadamard_sign_counts(k):
    # (n^2 - n)/2 minus signs for a Sylvester matrix of order n = 2^k
    h = gd.hadamard(k)
    n = h.n
    assert h.minus_count == (n * n - n) // 2 and h.plus_count == (n * n + n) // 2


def test_hadamard_count_k3():
    h = gd.hadamard(3)
    assert (h.minus_count, h.plus_count) == (28, 36)


def test_perm_blocks():
    assert gd.perm_array([0], [0]).tolist() == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    assert gd.perm_array([1], [1]).tolist() == [[1, 1, 1]] * 3
    g = gd.build_gadget("perm", [0, 1], [0, 0])
    assert g.matrix[0, 2] == 1 and g.predicted and g.consistent()


def test_negative_entry_arithmetic():
    a = gd.negative_array([1, 0, 0, 0], [1, 0, 0, 0])
    assert a[0, 0] == -1 and gd.has_negative(a)
    assert not gd.has_negative(gd.negative_array([1, 0, 0, 0], [0, 1, 0, 0]))


@pytest.mark.parametrize("kind,n,pairs", [("perm", 4, 256), ("majority", 4, 65536), ("unitary_rand", 8, 784)])
def test_exhaustive_small(kind, n, pairs):
    rep = gd.verify_gadget_iff(kind, n)
    assert rep.passed and rep.checked == pairs


def test_unitary_rand_variants():
    x = [1, 1, 0, 0, 0, 0, 0, 0]
    y = [0, 0, 1, 1, 0, 0, 0, 0]
    for a, b in itertools.product((1, 2), repeat=2):
        assert gd.is_unitary(gd.build_gadget("unitary_rand", x, y, variant=(a, b)).matrix.raw)
    y = [0, 1, 1, 0, 0, 0, 0, 0]
    mats = [gd.unitary_rand_array(x, y, (a, b)) for a, b in itertools.product((1, 2), repeat=2)]
    assert any(np.diag(m).min() < -1 for m in mats)
    assert not all(gd.is_unitary(m) for m in mats)


def test_unitary_det_disjoint():
    x = [1] * 5 + [0] * 5
    y = [0] * 5 + [1] * 5
    assert gd.is_unitary(gd.build_gadget("unitary_det", x, y).matrix.raw)
    assert not gd.is_unitary(gd.build_gadget("unitary_det", x, x).matrix.raw)


@pytest.mark.parametrize("kind,n", [("identical", 8), ("identical", 12), ("negative", 4), ("majority", 8),
                                    ("unitary_rand", 16), ("unitary_det", 8), ("perm", 9)])
def test_sampled_larger(kind, n):
    rep = gd.verify_gadget_iff(kind, n, mode="sampled", trials=300, seed=1)
    assert rep.passed and rep.checked == 300


def test_identical_collision_rate_below_bound():
    rep = gd.verify_gadget_iff("identical", 12, mode="sampled", trials=2000, seed=2)
    assert rep.passed
    rate = rep.notes["disjoint_collisions"] / rep.notes["disjoint_pairs"]
    assert rate <= rep.notes["pair_bound"] + 0.05


def test_builder_rejects_bad_shapes():
    with pytest.raises(ValueError):
        gd.unitary_rand_array([1, 0, 0], [0, 1, 0])
    with pytest.raises(ValueError):
        gd.majority_array([[1, 0, 0]], [[0, 1, 0]])
    with pytest.raises(ValueError):
        gd.build_gadget("nope", [0], [0])


def test_exhaustive_limit():
    with pytest.raises(ValueError):
        gd.verify_gadget_iff("negative", 5)

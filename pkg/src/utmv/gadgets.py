"""Reduction gadgets from two-party bit strings, and brute-force checks of their claims.

Every gadget turns Alice's string ``x`` and Bob's string ``y`` into a matrix
whose target property is decided by whether ``x`` and ``y`` intersect.
``verify_gadget_iff`` builds the gadget for every (or a sample of) input
pairs and compares the property, read off the matrix directly, with the
intersection pattern.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .domains import GF2, INT, ScalarDomain
from .matrix import DenseMatrix
from .rng import make_rng

UNITARY_TOL = 1e-9
EXHAUSTIVE_LIMIT = 2**24
GADGET_KINDS = ("perm", "majority", "identical", "negative", "unitary_rand", "unitary_det")


@dataclass(frozen=True)
class HadamardMatrix:
    """Sylvester Hadamard matrix of order 2**k with +-1 integer entries."""

    k: int
    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def normalized(self) -> np.ndarray:
        return self.entries / math.sqrt(self.n)

    @property
    def minus_count(self) -> int:
        return int(np.sum(self.entries == -1))

    @property
    def plus_count(self) -> int:
        return int(np.sum(self.entries == 1))


def hadamard(k: int) -> HadamardMatrix:
    if k < 0:
        raise ValueError("hadamard order exponent must be >= 0")
    h = np.ones((1, 1), dtype=np.int64)
    for _ in range(k):
        h = np.block([[h, h], [h, -h]])
    h.flags.writeable = False
    return HadamardMatrix(k, h)


# -- property predicates (unmetered, direct inspection) -------------------

def is_permutation(a: np.ndarray) -> bool:
    return bool(np.all((a == 0) | (a == 1)) and np.all(a.sum(axis=0) == 1) and np.all(a.sum(axis=1) == 1))


def column_majority(a: np.ndarray) -> tuple[int, ...]:
    n = a.shape[0]
    return tuple(int(c >= (n + 1) // 2) for c in a.sum(axis=0))


def has_identical_columns(a: np.ndarray) -> bool:
    cols = [a[:, j].tobytes() for j in range(a.shape[1])]
    return len(set(cols)) < len(cols)


def has_negative(a: np.ndarray) -> bool:
    return bool(np.any(a < 0))


def unitarity_defect(a: np.ndarray) -> float:
    """max |(A* A - I)_ij|."""
    return float(np.abs(a.conj().T @ a - np.eye(a.shape[0])).max())


def is_unitary(a: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    return unitarity_defect(a) <= tol


def intersects(x, y) -> bool:
    return bool(np.any(np.logical_and(x, y)))


# -- raw constructions -----------------------------------------------------

_PERM_A0 = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=np.int64)
_PERM_A1 = np.eye(3, dtype=np.int64)
_PERM_B1 = np.ones((3, 3), dtype=np.int64) - np.eye(3, dtype=np.int64)


def _bits(s, length=None, name="input") -> np.ndarray:
    arr = np.asarray(s, dtype=np.int64).reshape(-1)
    if not np.all((arr == 0) | (arr == 1)):
        raise ValueError(f"{name} must be a 0/1 string")
    if length is not None and arr.shape[0] != length:
        raise ValueError(f"{name} must have length {length}, got {arr.shape[0]}")
    return arr


def _pow2(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def perm_array(x, y) -> np.ndarray:
    x = _bits(x, name="x")
    y = _bits(y, len(x), "y")
    n = len(x)
    m = np.zeros((3 * n, 3 * n), dtype=np.int64)
    for i in range(n):
        block = (_PERM_A1 if x[i] else _PERM_A0) + (_PERM_B1 if y[i] else 0)
        m[3 * i:3 * i + 3, 3 * i:3 * i + 3] = block % 2
    return m


def _string_columns(strings, name) -> np.ndarray:
    cols = np.asarray(strings, dtype=np.int64)
    if cols.ndim != 2 or cols.shape[0] != cols.shape[1]:
        raise ValueError(f"{name} must be n strings of length n")
    n = cols.shape[0]
    if n % 4:
        raise ValueError("majority gadget needs n divisible by 4")
    _bits(cols, name=name)
    if np.any(cols.sum(axis=1) != n // 4):
        raise ValueError(f"every string of {name} must have exactly n/4 ones")
    return cols.T  # string i becomes column i


def majority_array(x, y) -> np.ndarray:
    return (_string_columns(x, "x") + _string_columns(y, "y")) % 2


def identical_array(x, y, rng: np.random.Generator) -> np.ndarray:
    x = _bits(x, name="x")
    y = _bits(y, len(x), "y")
    n = len(x) + 1
    if n % 2 or n < 2:
        raise ValueError("identical-columns gadget needs strings of odd length n-1 (n even)")

    def half(s):
        block = np.ones((n // 2, n), dtype=np.int64)
        block[0, :-1] = s
        free = rng.integers(0, 2, size=(n // 2 - 1, n - 1))
        block[1:, :-1] = np.where(s == 1, 1, free)
        return block

    return np.vstack([half(x), half(y)])


def negative_array(x, y) -> np.ndarray:
    x = _bits(x, name="x")
    y = _bits(y, len(x), "y")
    n = math.isqrt(len(x))
    if n * n != len(x):
        raise ValueError("negative-entry gadget needs strings of length n^2")
    return (1 - x).reshape(n, n) - y.reshape(n, n)


def _support(s) -> np.ndarray:
    return np.flatnonzero(s)


def unitary_rand_array(x, y, variant=(1, 1)) -> np.ndarray:
    """``X_a + Y_b + I`` where variant (a, b) picks the +G or -G fill per side."""
    x = _bits(x, name="x")
    y = _bits(y, len(x), "y")
    n = len(x)
    if not _pow2(n) or n < 4:
        raise ValueError("randomized unitary gadget needs n a power of two, n >= 4")
    q = n // 4
    if x.sum() != q or y.sum() != q:
        raise ValueError("randomized unitary gadget needs strings with exactly n/4 ones")
    g = hadamard(q.bit_length() - 1).normalized()

    def fill(s, sign):
        out = np.zeros((n, n))
        pos = _support(s)
        out[np.ix_(pos, pos)] = sign * g - np.eye(q)
        return out

    signs = {1: 1.0, 2: -1.0}
    a, b = variant
    return fill(x, signs[a]) + fill(y, signs[b]) + np.eye(n)


def plus_positions(n: int) -> np.ndarray:
    """Row-major flat indices of the +1 entries of H_n."""
    h = hadamard(n.bit_length() - 1).entries
    return np.flatnonzero(h.reshape(-1) == 1)


def unitary_det_array(x, y) -> np.ndarray:
    x = _bits(x, name="x")
    n = 1
    while n * (n + 1) // 2 < len(x):
        n *= 2
    n_plus = n * (n + 1) // 2
    if not _pow2(n) or n_plus != len(x):
        raise ValueError("deterministic unitary gadget needs strings of length n(n+1)/2, n a power of two")
    y = _bits(y, n_plus, "y")
    if x.sum() * 2 != n_plus or y.sum() * 2 != n_plus:
        raise ValueError("deterministic unitary gadget needs strings with exactly n(n+1)/4 ones")
    h = hadamard(n.bit_length() - 1).entries
    flat = np.where(h.reshape(-1) == -1, -1, 0).astype(float)
    pos = plus_positions(n)
    flat[pos] += x + y
    return flat.reshape(n, n) / math.sqrt(n)


# -- gadget instances ------------------------------------------------------

@dataclass
class GadgetInstance:
    """A reduction matrix with the property value its iff-claim predicts."""

    kind: str
    alice_input: Any
    bob_input: Any
    matrix: DenseMatrix
    property_name: str
    predicted: Any
    one_sided: bool = False
    params: dict = field(default_factory=dict)

    def observed(self):
        return _PROPERTY[self.kind](self.matrix.raw)

    def consistent(self) -> bool:
        obs = self.observed()
        if self.one_sided:
            # only "intersecting => property" is certain
            return obs or not self.predicted
        return obs == self.predicted


def _domain(kind: str) -> ScalarDomain:
    if kind in ("perm", "majority", "identical"):
        return GF2
    if kind == "negative":
        return INT
    return ScalarDomain.reals(UNITARY_TOL)


_PROPERTY = {
    "perm": is_permutation,
    "majority": column_majority,
    "identical": has_identical_columns,
    "negative": has_negative,
    "unitary_rand": is_unitary,
    "unitary_det": is_unitary,
}

_PROPERTY_NAME = {
    "perm": "is a permutation matrix",
    "majority": "column-wise majority bits",
    "identical": "has two identical columns",
    "negative": "has a negative entry",
    "unitary_rand": "is unitary",
    "unitary_det": "is unitary",
}


def _predict(kind: str, x, y):
    if kind == "majority":
        return tuple(int(not intersects(xi, yi)) for xi, yi in zip(x, y))
    meet = intersects(np.asarray(x), np.asarray(y))
    if kind in ("perm", "unitary_rand", "unitary_det"):
        return not meet
    return meet


def _raw(kind, x, y, rng, variant):
    if kind == "perm":
        return perm_array(x, y)
    if kind == "majority":
        return majority_array(x, y)
    if kind == "identical":
        return identical_array(x, y, rng)
    if kind == "negative":
        return negative_array(x, y)
    if kind == "unitary_rand":
        return unitary_rand_array(x, y, variant)
    if kind == "unitary_det":
        return unitary_det_array(x, y)
    raise ValueError(f"unknown gadget kind {kind!r}")


def build_gadget(kind: str, x, y, seed: int = 0, variant=(1, 1)) -> GadgetInstance:
    """Build the reduction matrix of ``kind`` from Alice's ``x`` and Bob's ``y``.

    ``seed`` feeds only the free cells of the identical-columns gadget;
    ``variant`` picks which of the four matrices ``X_a + Y_b + I`` the
    randomized unitary gadget returns.
    """
    rng = make_rng(seed) if kind == "identical" else None
    arr = _raw(kind, x, y, rng, variant)
    return GadgetInstance(
        kind=kind,
        alice_input=np.asarray(x).copy(),
        bob_input=np.asarray(y).copy(),
        matrix=DenseMatrix(arr, _domain(kind)),
        property_name=_PROPERTY_NAME[kind],
        predicted=_predict(kind, x, y),
        one_sided=kind == "identical",
        params={"variant": variant} if kind == "unitary_rand" else {},
    )


# -- verification ----------------------------------------------------------

@dataclass
class GadgetVerification:
    kind: str
    n: int
    mode: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def _weight_strings(length: int, weight: int):
    for ones in itertools.combinations(range(length), weight):
        s = np.zeros(length, dtype=np.int64)
        s[list(ones)] = 1
        yield s


def _all_strings(length: int):
    for bits in itertools.product((0, 1), repeat=length):
        yield np.array(bits, dtype=np.int64)


def _input_space(kind: str, n: int):
    """(side generator factory, size of one side) for exhaustive enumeration."""
    if kind == "perm":
        return (lambda: _all_strings(n)), 2**n
    if kind == "negative":
        return (lambda: _all_strings(n * n)), 2 ** (n * n)
    if kind == "identical":
        return (lambda: _all_strings(n - 1)), 2 ** (n - 1)
    if kind == "majority":
        if n % 4:
            raise ValueError("majority gadget needs n divisible by 4")
        singles = list(_weight_strings(n, n // 4))
        return (lambda: (np.stack(c) for c in itertools.product(singles, repeat=n))), len(singles) ** n
    if kind == "unitary_rand":
        return (lambda: _weight_strings(n, n // 4)), math.comb(n, n // 4)
    if kind == "unitary_det":
        n_plus = n * (n + 1) // 2
        return (lambda: _weight_strings(n_plus, n_plus // 2)), math.comb(n_plus, n_plus // 2)
    raise ValueError(f"unknown gadget kind {kind!r}")


def _sample_side(kind: str, n: int, rng: np.random.Generator):
    if kind == "perm":
        return rng.integers(0, 2, n)
    if kind == "negative":
        return rng.integers(0, 2, n * n)
    if kind == "identical":
        return rng.integers(0, 2, n - 1)

    def weighted(length, weight):
        s = np.zeros(length, dtype=np.int64)
        s[rng.choice(length, weight, replace=False)] = 1
        return s

    if kind == "majority":
        return np.stack([weighted(n, n // 4) for _ in range(n)])
    if kind == "unitary_rand":
        return weighted(n, n // 4)
    n_plus = n * (n + 1) // 2
    return weighted(n_plus, n_plus // 2)


def _check_pair(kind, x, y, rng, report: GadgetVerification, max_kept: int):
    """Check one input pair; returns True when the claim holds."""
    if kind == "unitary_rand":
        defects = {v: unitarity_defect(unitary_rand_array(x, y, v)) for v in itertools.product((1, 2), repeat=2)}
        all_unitary = all(d <= UNITARY_TOL for d in defects.values())
        ok = all_unitary == (not intersects(x, y))
        if ok and not all_unitary:
            # the witness named by the construction: a diagonal entry below -1
            low = min(float(np.diag(unitary_rand_array(x, y, v)).min()) for v in defects)
            ok = low < -1
        report.checked += 1
    else:
        arr = _raw(kind, x, y, rng, None)
        obs = _PROPERTY[kind](arr)
        pred = _predict(kind, x, y)
        report.checked += 1
        if kind == "identical":
            ok = obs or not pred
            if not pred:
                report.notes["disjoint_pairs"] = report.notes.get("disjoint_pairs", 0) + 1
                report.notes["disjoint_collisions"] = report.notes.get("disjoint_collisions", 0) + int(obs)
        else:
            ok = obs == pred
    if not ok and len(report.counterexamples) < max_kept:
        report.counterexamples.append((np.asarray(x).tolist(), np.asarray(y).tolist()))
    elif not ok:
        report.notes["unlisted_counterexamples"] = report.notes.get("unlisted_counterexamples", 0) + 1
    return ok


def verify_gadget_iff(kind: str, n: int, mode: str = "exhaustive", trials: int = 1000,
                      seed: int = 0, max_kept: int = 10) -> GadgetVerification:
    """Check a gadget's iff-claim over all (``exhaustive``) or ``trials`` random input pairs.

    For ``identical`` only "intersecting => two identical columns" is
    certain; collisions on disjoint inputs are tallied in ``notes`` next to
    the union bound C(n, 2) * 2**(1 - n/2).
    """
    if kind not in GADGET_KINDS:
        raise ValueError(f"unknown gadget kind {kind!r}")
    rng = make_rng(seed)
    report = GadgetVerification(kind, n, mode)
    if mode == "exhaustive":
        sides, size = _input_space(kind, n)
        if size * size > EXHAUSTIVE_LIMIT:
            raise ValueError(f"{kind} at n={n} has {size * size} input pairs, over the exhaustive limit")
        for x in sides():
            for y in sides():
                _check_pair(kind, x, y, rng, report, max_kept)
    elif mode == "sampled":
        for _ in range(trials):
            _check_pair(kind, _sample_side(kind, n, rng), _sample_side(kind, n, rng), rng, report, max_kept)
    else:
        raise ValueError("mode must be 'exhaustive' or 'sampled'")
    if kind == "identical":
        report.notes["pair_bound"] = math.comb(n, 2) * 2.0 ** (1 - n / 2)
    return report

"""Planted positive and negative instances for every tester.

Each generator is a deterministic function of ``(kind, n, seed, domain,
params)`` and satisfies (or violates) its named property by construction.
"""

from __future__ import annotations

import numpy as np

from .domains import DomainKind, INT, RAT, REAL, ScalarDomain
from .matrix import DenseMatrix
from .rng import make_rng

_RAT_DEN = 2520  # lcm(1..9)


def _random_values(domain: ScalarDomain, rng: np.random.Generator, shape) -> DenseMatrix | np.ndarray:
    k = domain.kind
    if k in (DomainKind.GF2, DomainKind.GFP):
        return rng.integers(0, domain.modulus, size=shape)
    if k is DomainKind.INT:
        return rng.integers(-9, 10, size=shape)
    if k is DomainKind.RAT:
        a = rng.integers(-9, 10, size=shape)
        b = rng.integers(1, 10, size=shape)
        return a * (_RAT_DEN // b)
    if k is DomainKind.REAL:
        return rng.standard_normal(shape)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _nonzero_value(domain: ScalarDomain, rng: np.random.Generator):
    k = domain.kind
    if k is DomainKind.GF2:
        return 1
    if k is DomainKind.GFP:
        return int(rng.integers(1, domain.modulus))
    if k is DomainKind.INT:
        return int(rng.choice([-1, 1]) * rng.integers(1, 10))
    if k is DomainKind.RAT:
        return int(rng.choice([-1, 1]) * rng.integers(1, 10)) * (_RAT_DEN // int(rng.integers(1, 10)))
    if k is DomainKind.REAL:
        return float(rng.choice([-1.0, 1.0]) * (0.5 + rng.random()))
    return complex((0.5 + rng.random()) * np.exp(2j * np.pi * rng.random()))


def _wrap(arr, domain: ScalarDomain) -> DenseMatrix:
    """Wrap generator output; rationals arrive as numerators over ``_RAT_DEN``."""
    if domain.kind is DomainKind.RAT:
        return DenseMatrix._from_raw(np.asarray(arr, dtype=np.int64), domain, _RAT_DEN)
    return DenseMatrix(arr, domain)


def _binary(arr, domain: ScalarDomain) -> DenseMatrix:
    return DenseMatrix(np.asarray(arr, dtype=np.int64), domain)


def _pick_pair(rng, n):
    i, j = rng.choice(n, size=2, replace=False)
    return int(i), int(j)


def _graph_domain(domain):
    if domain is not None and domain.kind is not DomainKind.INT:
        raise ValueError("graph instances live in the integer domain")
    return INT


def _diagonal(n, rng, domain, **_):
    arr = np.zeros((n, n), dtype=_random_values(domain, rng, 1).dtype)
    np.fill_diagonal(arr, _random_values(domain, rng, n))
    return arr


def _near_diagonal(n, rng, domain, **_):
    if n < 2:
        raise ValueError("near_diagonal needs n >= 2")
    arr = _diagonal(n, rng, domain)
    k, l = _pick_pair(rng, n)
    arr[k, l] = _nonzero_value(domain, rng)
    return arr


def _symmetric(n, rng, domain, **_):
    r = _random_values(domain, rng, (n, n))
    return np.triu(r) + np.triu(r, 1).T


def _asymmetric(n, rng, domain, **_):
    if n < 2:
        raise ValueError("asymmetric needs n >= 2")
    arr = _symmetric(n, rng, domain)
    k, l = _pick_pair(rng, n)
    arr[k, l] = arr[l, k] + _nonzero_value(domain, rng)
    if domain.is_finite_field:
        arr = arr % domain.modulus
    return arr


def _perm_array(n, rng):
    arr = np.zeros((n, n), dtype=np.int64)
    arr[np.arange(n), rng.permutation(n)] = 1
    return arr


def _near_permutation(n, rng):
    """Permutation with one 1 moved sideways: one empty and one doubled column."""
    if n < 2:
        raise ValueError("near_permutation needs n >= 2")
    arr = _perm_array(n, rng)
    r = int(rng.integers(n))
    c = int(np.flatnonzero(arr[r])[0])
    c2 = int(rng.choice([x for x in range(n) if x != c]))
    arr[r, c] = 0
    arr[r, c2] = 1
    return arr


def _doubly_stochastic(n, rng, domain, components=3):
    if domain.kind not in (DomainKind.RAT, DomainKind.REAL):
        raise ValueError("doubly_stochastic instances need a rat or real domain")
    weights = rng.integers(1, 10, size=components)
    total = int(weights.sum())
    acc = np.zeros((n, n), dtype=np.int64)
    for w in weights:
        acc += int(w) * _perm_array(n, rng)
    if domain.kind is DomainKind.RAT:
        return DenseMatrix._from_raw(acc, domain, total)
    return DenseMatrix(acc / total, domain)


def _star(n, center=0):
    if not 0 <= center < n:
        raise ValueError("star center outside [0, n)")
    arr = np.zeros((n, n), dtype=np.int64)
    arr[center, :] = 1
    arr[:, center] = 1
    arr[center, center] = 0
    return arr


def _path(n):
    arr = np.zeros((n, n), dtype=np.int64)
    idx = np.arange(n - 1)
    arr[idx, idx + 1] = 1
    arr[idx + 1, idx] = 1
    return arr


def _random_graph(n, rng, density=0.5):
    upper = np.triu(rng.random((n, n)) < density, 1).astype(np.int64)
    return upper + upper.T


def _distinct_columns(n, rng, density=0.5, max_tries=1000):
    for _ in range(max_tries):
        arr = (rng.random((n, n)) < density).astype(np.int64)
        if len({arr[:, j].tobytes() for j in range(n)}) == n:
            return arr
    raise RuntimeError("could not draw a matrix with distinct columns")


def generate_instance(kind: str, n: int, seed: int, *, domain: ScalarDomain | None = None, **params) -> DenseMatrix:
    """Build a planted instance of ``kind``.

    Kinds: diagonal, near_diagonal, symmetric, asymmetric, random,
    permutation, near_permutation, doubly_stochastic, star, path,
    random_graph, all_ones_column, identical_columns, distinct_columns,
    random_binary, nonnegative, planted_negative, hadamard_unitary.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = make_rng(seed)

    if kind in ("diagonal", "near_diagonal", "symmetric", "asymmetric", "random"):
        domain = domain or INT
        if kind == "random":
            return _wrap(_random_values(domain, rng, (n, n)), domain)
        builder = {"diagonal": _diagonal, "near_diagonal": _near_diagonal,
                   "symmetric": _symmetric, "asymmetric": _asymmetric}[kind]
        return _wrap(builder(n, rng, domain), domain)

    if kind == "permutation":
        return _binary(_perm_array(n, rng), domain or INT)
    if kind == "near_permutation":
        return _binary(_near_permutation(n, rng), domain or INT)
    if kind == "doubly_stochastic":
        return _doubly_stochastic(n, rng, domain or RAT, **params)

    if kind == "star":
        return _binary(_star(n, **params), _graph_domain(domain))
    if kind == "path":
        return _binary(_path(n), _graph_domain(domain))
    if kind == "random_graph":
        return _binary(_random_graph(n, rng, **params), _graph_domain(domain))

    if kind == "random_binary":
        density = params.get("density", 0.5)
        return _binary(rng.random((n, n)) < density, domain or INT)
    if kind == "all_ones_column":
        col = params.get("col")
        col = int(rng.integers(n)) if col is None else col
        arr = (rng.random((n, n)) < params.get("density", 0.5)).astype(np.int64)
        arr[:, col] = 1
        return _binary(arr, domain or INT)
    if kind == "identical_columns":
        if n < 2:
            raise ValueError("identical_columns needs n >= 2")
        pair = params.get("pair")
        i, j = _pick_pair(rng, n) if pair is None else pair
        if i == j:
            raise ValueError("planted pair must be two distinct columns")
        arr = (rng.random((n, n)) < params.get("density", 0.5)).astype(np.int64)
        arr[:, j] = arr[:, i]
        return _binary(arr, domain or INT)
    if kind == "distinct_columns":
        return _binary(_distinct_columns(n, rng, **params), domain or INT)

    if kind in ("nonnegative", "planted_negative"):
        domain = domain or INT
        if domain.kind not in (DomainKind.INT, DomainKind.RAT, DomainKind.REAL):
            raise ValueError("sign-based instances need an int, rat or real domain")
        arr = rng.integers(0, 10, size=(n, n))
        if kind == "planted_negative":
            cell = params.get("cell")
            i, j = (int(rng.integers(n)), int(rng.integers(n))) if cell is None else cell
            arr[i, j] = -1
        return DenseMatrix(arr, domain)

    if kind == "hadamard_unitary":
        from .gadgets import hadamard

        domain = domain or REAL
        if not domain.is_approx:
            raise ValueError("hadamard_unitary lives in the real or complex domain")
        if n & (n - 1):
            raise ValueError(f"hadamard_unitary needs n a power of two, got {n}")
        return DenseMatrix(hadamard(n.bit_length() - 1).normalized(), domain)

    raise ValueError(f"unknown instance kind {kind!r}")

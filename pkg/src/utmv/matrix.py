"""Dense n x n matrices and probe vectors over a :class:`ScalarDomain`.

Exact domains are stored as integer arrays (``int64`` when every value fits,
Python-int ``object`` arrays otherwise). Rationals keep integer numerators over
one common denominator so bilinear forms reduce to integer arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .domains import DomainKind, ScalarDomain, _as_int

_INT64_SAFE = 2**62


def _shrink(obj: np.ndarray) -> np.ndarray:
    """Return an int64 copy of an object array of ints when every value fits."""
    if obj.size == 0:
        return obj.astype(np.int64)
    lo, hi = min(obj.flat), max(obj.flat)
    if -_INT64_SAFE < lo and hi < _INT64_SAFE:
        return obj.astype(np.int64)
    return obj


def _int_array(values) -> np.ndarray:
    arr = np.asarray(values)
    if arr.dtype.kind in "biu":
        if arr.dtype.kind == "u" and arr.size and arr.max() >= _INT64_SAFE:
            return _shrink(arr.astype(object))
        return arr.astype(np.int64)
    if arr.dtype.kind == "f":
        if not np.all(np.isfinite(arr)) or not np.all(arr == np.round(arr)):
            raise ValueError("non-integer entry in integer domain")
        if arr.size and np.abs(arr).max() >= 2**53:
            raise ValueError("float entries too large to be exact integers")
        return arr.astype(np.int64)
    obj = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        obj[idx] = _as_int(x)
    return _shrink(obj)


def _rational_array(values) -> tuple[np.ndarray, int]:
    arr = np.asarray(values)
    if arr.dtype.kind in "biu":
        return _int_array(arr), 1
    fracs = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        if isinstance(x, (float, np.floating)) and not math.isfinite(x):
            raise ValueError(f"{x!r} is not a rational")
        if isinstance(x, str):
            x = Fraction(x)
        fracs[idx] = Fraction(x)
    den = 1
    for f in fracs.flat:
        den = math.lcm(den, f.denominator)
    nums = np.empty(arr.shape, dtype=object)
    for idx, f in np.ndenumerate(fracs):
        nums[idx] = f.numerator * (den // f.denominator)
    return _shrink(nums), den


def coerce_exact(domain: ScalarDomain, values, shape=None) -> tuple[np.ndarray, int]:
    """Validate ``values`` for an exact domain; return (integers, denominator).

    Matrix entries in GF(p) are reduced mod p; use :func:`coerce_vector` for
    probe vectors, which must already be field elements.
    """
    if domain.kind is DomainKind.RAT:
        data, den = _rational_array(values)
    else:
        data, den = _int_array(values), 1
    if shape is not None and data.shape != shape:
        raise ValueError(f"expected shape {shape}, got {data.shape}")
    if domain.is_finite_field:
        data = data % domain.modulus
        if data.dtype == object:
            data = _shrink(data)
    return data, den


def coerce_approx(domain: ScalarDomain, values, shape=None) -> np.ndarray:
    arr = np.asarray(values)
    if arr.dtype == object:
        arr = np.array([domain.scalar(x) for x in arr.flat]).reshape(arr.shape)
    if domain.kind is DomainKind.REAL:
        if arr.dtype.kind == "c":
            if np.any(arr.imag != 0):
                raise ValueError("complex entry in real domain")
            arr = arr.real
        arr = arr.astype(np.float64)
    else:
        arr = arr.astype(np.complex128)
    if shape is not None and arr.shape != shape:
        raise ValueError(f"expected shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite entry")
    return arr


def coerce_vector(domain: ScalarDomain, v, n: int):
    """Validate a probe vector of length ``n``.

    Returns ``(ints, denominator)`` for exact domains and a float/complex
    array for approximate ones. Finite-field entries must lie in [0, p).
    """
    if domain.is_exact:
        arr = np.asarray(v)
        if arr.ndim != 1 or arr.shape[0] != n:
            raise ValueError(f"probe vector must have length {n}, got shape {arr.shape}")
        if domain.kind is DomainKind.RAT:
            return _rational_array(arr)
        data = _int_array(arr)
        if domain.is_finite_field and data.size:
            if min(data.flat) < 0 or max(data.flat) >= domain.modulus:
                raise ValueError(f"vector entry outside {domain}")
        return data, 1
    arr = coerce_approx(domain, v)
    if arr.ndim != 1 or arr.shape[0] != n:
        raise ValueError(f"probe vector must have length {n}, got shape {arr.shape}")
    return arr


def int_matvec(a: np.ndarray, x: np.ndarray, a_max: int) -> np.ndarray:
    """``a @ x`` for integer arrays without silent int64 overflow."""
    x_max = int(np.abs(x).max()) if x.size else 0
    if (
        a.dtype != object
        and x.dtype != object
        and a_max * x_max * max(1, x.shape[0]) < _INT64_SAFE
    ):
        return a @ x
    return a.astype(object) @ x.astype(object)


class DenseMatrix:
    """Immutable row-major n x n matrix over a scalar domain."""

    __slots__ = ("domain", "_data", "_den", "_max_abs", "_object")

    def __init__(self, entries, domain: ScalarDomain):
        self.domain = domain
        if domain.is_exact:
            data, den = coerce_exact(domain, entries)
        else:
            data, den = coerce_approx(domain, entries), 1
        if data.ndim != 2 or data.shape[0] != data.shape[1]:
            raise ValueError(f"matrix must be square, got shape {data.shape}")
        self._set(data, den)

    @classmethod
    def _from_raw(cls, data: np.ndarray, domain: ScalarDomain, den: int = 1) -> DenseMatrix:
        self = object.__new__(cls)
        self.domain = domain
        self._set(data, den)
        return self

    def _set(self, data: np.ndarray, den: int):
        if den != 1 and data.size:
            g = math.gcd(den, *(int(x) for x in np.unique(data.astype(object))))
            if g > 1:
                data = data // g
                den //= g
        data = data.copy()
        data.flags.writeable = False
        self._data = data
        self._den = den
        self._max_abs = None
        self._object = None

    # -- shape & raw access (unmetered; for oracles and fixtures only) ----

    @property
    def n(self) -> int:
        return self._data.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape

    @property
    def raw(self) -> np.ndarray:
        """Stored array: integers (numerators for rationals) or floats."""
        return self._data

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def max_abs(self) -> int:
        if self._max_abs is None:
            self._max_abs = int(np.abs(self._data).max()) if self._data.size else 0
        return self._max_abs

    def as_object(self) -> np.ndarray:
        if self._object is None:
            self._object = self._data.astype(object)
        return self._object

    def to_array(self) -> np.ndarray:
        """Entries as domain scalars (``Fraction`` objects for rationals)."""
        if self.domain.kind is DomainKind.RAT:
            out = np.empty(self.shape, dtype=object)
            for idx, x in np.ndenumerate(self._data):
                out[idx] = Fraction(int(x), self._den)
            return out
        return self._data.copy()

    def __getitem__(self, ij):
        i, j = ij
        x = self._data[i, j]
        if self.domain.kind is DomainKind.RAT:
            return Fraction(int(x), self._den)
        if self.domain.is_exact:
            return int(x)
        return self.domain.scalar(x)

    # -- unmetered structural predicates (fixtures / ground truth) --------

    def is_binary(self) -> bool:
        if self.domain.kind is DomainKind.RAT and self._den != 1:
            return bool(np.all((self._data == 0) | (self._data == self._den)))
        return bool(np.all((self._data == 0) | (self._data == 1)))

    def is_symmetric(self) -> bool:
        if self.domain.is_exact:
            return bool(np.all(self._data == self._data.T))
        return bool(np.allclose(self._data, self._data.T, rtol=0, atol=self.domain.tolerance))

    def is_hollow(self) -> bool:
        return bool(np.all(np.diag(self._data) == 0))

    def transpose(self) -> DenseMatrix:
        return DenseMatrix._from_raw(self._data.T, self.domain, self._den)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (
            self.domain == other.domain
            and self._den == other._den
            and self.shape == other.shape
            and bool(np.all(self._data == other._data))
        )

    __hash__ = None

    def __repr__(self):
        return f"DenseMatrix(n={self.n}, domain={self.domain})"


def basis(n: int, i: int) -> np.ndarray:
    e = np.zeros(n, dtype=np.int64)
    e[i] = 1
    return e


def ones(n: int) -> np.ndarray:
    return np.ones(n, dtype=np.int64)


def indicator(n: int, index) -> np.ndarray:
    """0/1 vector with ones on ``index`` (iterable of ints, slice, or bool mask)."""
    e = np.zeros(n, dtype=np.int64)
    if isinstance(index, slice):
        e[index] = 1
    else:
        idx = np.asarray(list(index) if not isinstance(index, np.ndarray) else index)
        if idx.size:
            if idx.dtype == bool:
                e[idx] = 1
            else:
                if idx.min() < 0 or idx.max() >= n:
                    raise IndexError("index outside [0, n)")
                e[idx.astype(np.int64)] = 1
    return e

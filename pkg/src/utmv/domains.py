"""Scalar domains: the arithmetic world a hidden matrix lives in."""

from __future__ import annotations

import enum
import numbers
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

DEFAULT_TOLERANCE = 1e-9


class DomainKind(str, enum.Enum):
    GF2 = "gf2"
    GFP = "gfp"
    INT = "int"
    RAT = "rat"
    REAL = "real"
    COMPLEX = "complex"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class ScalarDomain:
    """Which field (or ring) a matrix and its probe vectors are drawn from.

    Exact kinds never consult ``tolerance``. Approximate kinds compare
    ``a == b`` as ``|a - b| <= tolerance * max(1, |a|, |b|)``.
    """

    kind: DomainKind
    modulus: int | None = None
    tolerance: float | None = None

    def __post_init__(self):
        kind = DomainKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is DomainKind.GFP:
            if self.modulus is None or not _is_prime(int(self.modulus)):
                raise ValueError(f"GF(p) needs a prime modulus, got {self.modulus!r}")
            object.__setattr__(self, "modulus", int(self.modulus))
        elif kind is DomainKind.GF2:
            if self.modulus not in (None, 2):
                raise ValueError("GF(2) has modulus 2")
            object.__setattr__(self, "modulus", 2)
        elif self.modulus is not None:
            raise ValueError(f"{kind.value} domain takes no modulus")

        if kind in (DomainKind.REAL, DomainKind.COMPLEX):
            tol = DEFAULT_TOLERANCE if self.tolerance is None else float(self.tolerance)
            if not tol > 0:
                raise ValueError("approximate domains need tolerance > 0")
            object.__setattr__(self, "tolerance", tol)
        elif self.tolerance is not None:
            raise ValueError(f"exact domain {kind.value} takes no tolerance")

    # -- constructors -----------------------------------------------------

    @classmethod
    def gf2(cls) -> ScalarDomain:
        return cls(DomainKind.GF2)

    @classmethod
    def gfp(cls, p: int) -> ScalarDomain:
        return cls(DomainKind.GFP, modulus=p)

    @classmethod
    def integers(cls) -> ScalarDomain:
        return cls(DomainKind.INT)

    @classmethod
    def rationals(cls) -> ScalarDomain:
        return cls(DomainKind.RAT)

    @classmethod
    def reals(cls, tolerance: float = DEFAULT_TOLERANCE) -> ScalarDomain:
        return cls(DomainKind.REAL, tolerance=tolerance)

    @classmethod
    def complexes(cls, tolerance: float = DEFAULT_TOLERANCE) -> ScalarDomain:
        return cls(DomainKind.COMPLEX, tolerance=tolerance)

    @classmethod
    def parse(cls, text: str) -> ScalarDomain:
        """Parse ``gf2``, ``gfp:7``, ``int``, ``rat``, ``real[:tol]``, ``complex[:tol]``."""
        name, _, arg = text.strip().lower().partition(":")
        kind = DomainKind(name)
        if kind is DomainKind.GFP:
            if not arg:
                raise ValueError("gfp domain needs a modulus, e.g. gfp:7")
            return cls.gfp(int(arg))
        if kind in (DomainKind.REAL, DomainKind.COMPLEX):
            return cls(kind, tolerance=float(arg) if arg else None)
        if arg:
            raise ValueError(f"unexpected argument for {kind.value}: {arg}")
        return cls(kind)

    def __str__(self) -> str:
        if self.kind is DomainKind.GFP:
            return f"gfp:{self.modulus}"
        if self.is_approx and self.tolerance != DEFAULT_TOLERANCE:
            return f"{self.kind.value}:{self.tolerance!r}"
        return self.kind.value

    # -- classification ---------------------------------------------------

    @property
    def is_finite_field(self) -> bool:
        return self.kind in (DomainKind.GF2, DomainKind.GFP)

    @property
    def is_exact(self) -> bool:
        return not self.is_approx

    @property
    def is_approx(self) -> bool:
        return self.kind in (DomainKind.REAL, DomainKind.COMPLEX)

    @property
    def counts_exactly(self) -> bool:
        """True when sums of 0/1 entries do not wrap (integers, rationals)."""
        return self.kind in (DomainKind.INT, DomainKind.RAT)

    # -- scalars ----------------------------------------------------------

    def zero(self):
        return self.scalar(0)

    def one(self):
        return self.scalar(1)

    def scalar(self, x):
        """Coerce ``x`` to a domain scalar, reducing mod p in finite fields."""
        if self.is_finite_field:
            return _as_int(x) % self.modulus
        if self.kind is DomainKind.INT:
            return _as_int(x)
        if self.kind is DomainKind.RAT:
            if isinstance(x, (float, np.floating)) and not np.isfinite(x):
                raise ValueError(f"{x!r} is not a rational")
            return Fraction(x)
        if self.kind is DomainKind.REAL:
            if isinstance(x, numbers.Complex) and not isinstance(x, numbers.Real):
                if complex(x).imag != 0:
                    raise ValueError(f"{x!r} is not real")
                x = complex(x).real
            return float(x)
        return complex(x)

    def equal(self, a, b) -> bool:
        if self.is_exact:
            return a == b
        return abs(a - b) <= self.tolerance * max(1.0, abs(a), abs(b))

    def is_zero(self, x) -> bool:
        return self.equal(x, 0)


def _as_int(x) -> int:
    if isinstance(x, (bool, np.bool_)):
        return int(x)
    if isinstance(x, numbers.Integral):
        return int(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if isinstance(x, (float, np.floating)) and float(x).is_integer():
        return int(x)
    raise ValueError(f"{x!r} is not an integer")


GF2 = ScalarDomain.gf2()
INT = ScalarDomain.integers()
RAT = ScalarDomain.rationals()
REAL = ScalarDomain.reals()
COMPLEX = ScalarDomain.complexes()

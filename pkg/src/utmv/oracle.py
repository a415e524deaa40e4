"""The metered bilinear-form oracle and the reports testers return."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .domains import DomainKind
from .matrix import DenseMatrix, _INT64_SAFE, coerce_vector, indicator, int_matvec


class QueryLedger:
    """Counts every uTMv evaluation, broken down by caller tag."""

    def __init__(self):
        self.by_category: Counter[str] = Counter()
        self.utmv_count = 0

    def charge(self, tag: str, k: int = 1):
        if k < 0:
            raise ValueError("cannot refund queries")
        self.by_category[tag] += k
        self.utmv_count += k

    @property
    def total(self) -> int:
        return self.utmv_count

    def snapshot(self) -> dict[str, int]:
        return dict(self.by_category)

    def __repr__(self):
        return f"QueryLedger(total={self.utmv_count}, by_category={dict(self.by_category)})"


def _int_dot(a: np.ndarray, b: np.ndarray) -> int:
    if a.size == 0:
        return 0
    bound = int(np.abs(a).max()) * int(np.abs(b).max()) * a.shape[0]
    if a.dtype != object and b.dtype != object and bound < _INT64_SAFE:
        return int(a @ b)
    return int(a.astype(object) @ b.astype(object))


class BilinearOracle:
    """Sole sanctioned access path to a hidden matrix.

    Every method that reveals information about the matrix charges the
    ledger. ``unmetered_matrix`` exists for test-suite ground truth only.
    A single oracle must not be queried from several threads at once.
    """

    def __init__(self, matrix: DenseMatrix, ledger: QueryLedger | None = None):
        self._matrix = matrix
        self.ledger = ledger if ledger is not None else QueryLedger()

    @property
    def n(self) -> int:
        return self._matrix.n

    @property
    def domain(self):
        return self._matrix.domain

    @property
    def unmetered_matrix(self) -> DenseMatrix:
        """Direct access bypassing the ledger. Test oracles only."""
        return self._matrix

    def _finish(self, value: int, den: int):
        dom = self.domain
        if dom.is_finite_field:
            return value % dom.modulus
        if dom.kind is DomainKind.RAT:
            return Fraction(value, den)
        return value

    def query(self, u, v, tag: str = "query"):
        """Return ``u^T M v`` in the oracle's domain; charges one query."""
        m = self._matrix
        if self.domain.is_exact:
            ui, du = coerce_vector(self.domain, u, m.n)
            vi, dv = coerce_vector(self.domain, v, m.n)
            self.ledger.charge(tag)
            mv = int_matvec(m.raw, vi, m.max_abs)
            return self._finish(_int_dot(ui, mv), du * dv * m.denominator)
        ua = coerce_vector(self.domain, u, m.n)
        va = coerce_vector(self.domain, v, m.n)
        self.ledger.charge(tag)
        return self.domain.scalar(ua @ (m.raw @ va))

    def entry_query(self, i: int, j: int, tag: str = "entry"):
        """``M_ij`` as the probe ``e_i^T M e_j``; charges one query."""
        n = self.n
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"entry ({i}, {j}) outside {n}x{n} matrix")
        self.ledger.charge(tag)
        return self._matrix[i, j]

    def probe_columns(self, u, tag: str = "columns") -> np.ndarray:
        """The n probes ``u^T M e_j`` for every column j, charged as n queries."""
        m = self._matrix
        if self.domain.is_exact:
            ui, du = coerce_vector(self.domain, u, m.n)
            self.ledger.charge(tag, m.n)
            out = int_matvec(m.raw.T, ui, m.max_abs)
            return self._finish_vector(out, du * m.denominator)
        ua = coerce_vector(self.domain, u, m.n)
        self.ledger.charge(tag, m.n)
        return ua @ m.raw

    def probe_rows(self, v, tag: str = "rows") -> np.ndarray:
        """The n probes ``e_i^T M v`` for every row i, charged as n queries."""
        m = self._matrix
        if self.domain.is_exact:
            vi, dv = coerce_vector(self.domain, v, m.n)
            self.ledger.charge(tag, m.n)
            out = int_matvec(m.raw, vi, m.max_abs)
            return self._finish_vector(out, dv * m.denominator)
        va = coerce_vector(self.domain, v, m.n)
        self.ledger.charge(tag, m.n)
        return m.raw @ va

    def _finish_vector(self, out: np.ndarray, den: int) -> np.ndarray:
        dom = self.domain
        if dom.is_finite_field:
            return (out % dom.modulus).astype(np.int64)
        if dom.kind is DomainKind.RAT:
            return np.array([Fraction(int(x), den) for x in out], dtype=object)
        return out

    def fork(self) -> BilinearOracle:
        """A fresh oracle over the same (immutable) matrix with its own ledger."""
        return BilinearOracle(self._matrix)

    def __repr__(self):
        return f"BilinearOracle(n={self.n}, domain={self.domain}, queries={self.ledger.total})"


def ones_in_submatrix(oracle: BilinearOracle, rows, cols, tag: str = "submatrix") -> int:
    """Sum of a 0/1 matrix over ``rows x cols`` with a single indicator query."""
    if not oracle.domain.counts_exactly:
        raise ValueError(f"counting ones needs an integer or rational domain, not {oracle.domain}")
    n = oracle.n
    value = oracle.query(indicator(n, rows), indicator(n, cols), tag)
    return int(value)


class Verdict(str, enum.Enum):
    ACCEPT = "accept"
    REJECT = "reject"


@dataclass
class TestReport:
    """Outcome of one tester call.

    ``queries_charged`` is the ledger delta of the call; ``detail`` holds
    tester-specific extras such as the stage a rejection happened at.
    """

    __test__ = False  # keep pytest from collecting this class

    verdict: Verdict
    witness: Any = None
    rounds: int = 0
    queries_charged: int = 0
    seed: int | None = None
    detail: dict = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.verdict is Verdict.ACCEPT

    @property
    def rejected(self) -> bool:
        return self.verdict is Verdict.REJECT


class _Meter:
    def __init__(self, oracle):
        self.ledger = oracle.ledger
        self.start = oracle.ledger.total

    @property
    def used(self) -> int:
        return self.ledger.total - self.start


def meter(oracle) -> _Meter:
    """Mark the ledger now; ``.used`` later gives the delta."""
    return _Meter(oracle)

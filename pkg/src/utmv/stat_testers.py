"""Column-statistics testers over binary (or nonnegative) matrices."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .domains import DomainKind
from .la_testers import SZ_RANGE
from .matrix import indicator, ones
from .oracle import BilinearOracle, TestReport, Verdict, meter
from .rng import resolve


@dataclass(frozen=True)
class ColumnSignature:
    """Inner products of one column with the probe vectors of every round."""

    column: int
    signature: tuple


def _require(oracle, kinds, what):
    if oracle.domain.kind not in kinds:
        names = ", ".join(k.value for k in kinds)
        raise ValueError(f"{what} needs one of [{names}], not {oracle.domain}")


_EXACT_COUNTING = (DomainKind.INT, DomainKind.RAT)


def find_all_ones_column(oracle: BilinearOracle, *, seed: int | None = None) -> TestReport:
    """Look for an all-ones column with n probes ``u^T M e_i``.

    ``u`` has entries uniform in {1, ..., 2**20}; a column matches when its
    probe equals ``sum(u)``, computed locally. A match rejects (the matrix
    has an all-ones column) and the first matching index is the witness.
    """
    _require(oracle, _EXACT_COUNTING, "all-ones column search")
    seed, rng = resolve(seed)
    m = meter(oracle)
    u = rng.integers(1, SZ_RANGE + 1, size=oracle.n)
    s = int(u.sum())
    probes = oracle.probe_columns(u, "all_ones")
    matches = [i for i, p in enumerate(probes) if p == s]
    if not matches:
        return TestReport(Verdict.ACCEPT, None, 1, m.used, seed)
    return TestReport(Verdict.REJECT, matches[0], 1, m.used, seed, {"matches": matches})


def identical_rounds(n: int, eps: float) -> int:
    """Rounds of random bit probes for the GF(2) identical-columns search."""
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    return math.ceil(math.log2(n * n / eps))


def find_identical_columns(oracle: BilinearOracle, eps: float = 0.01, *, seed: int | None = None) -> TestReport:
    """Group columns by signatures ``<u, c_i>`` and report a colliding pair.

    Over GF(2) each round uses uniform bits and ``ceil(log2(n^2/eps))``
    rounds are run; over the integers or rationals one round with entries in
    {1, ..., 2**20} suffices. Equal columns always collide.
    """
    dom = oracle.domain
    _require(oracle, (DomainKind.GF2,) + _EXACT_COUNTING, "identical-columns search")
    seed, rng = resolve(seed)
    m = meter(oracle)
    n = oracle.n
    if dom.kind is DomainKind.GF2:
        rounds = identical_rounds(n, eps)
        probes = [oracle.probe_columns(rng.integers(0, 2, size=n), "identical") for _ in range(rounds)]
    else:
        rounds = 1
        probes = [oracle.probe_columns(rng.integers(1, SZ_RANGE + 1, size=n), "identical")]
    table = np.array(probes, dtype=object).T
    groups = defaultdict(list)
    for i in range(n):
        groups[tuple(table[i])].append(i)
    collisions = sorted(g for g in groups.values() if len(g) > 1)
    if not collisions:
        return TestReport(Verdict.ACCEPT, None, rounds, m.used, seed)
    witness = (collisions[0][0], collisions[0][1])
    return TestReport(Verdict.REJECT, witness, rounds, m.used, seed, {"groups": collisions})


def column_signatures(oracle: BilinearOracle, probes) -> list[ColumnSignature]:
    """Signatures of every column against the given probe vectors (n queries each)."""
    rows = [oracle.probe_columns(u, "signature") for u in probes]
    return [ColumnSignature(i, tuple(r[i] for r in rows)) for i in range(oracle.n)]


def column_majority_exact(oracle: BilinearOracle) -> np.ndarray:
    """Read all n^2 entries; bit i is 1 iff column i has at least ceil(n/2) ones."""
    _require(oracle, (DomainKind.GF2,), "column majority")
    n = oracle.n
    counts = np.zeros(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            counts[j] += oracle.entry_query(i, j, "majority")
    return (counts >= (n + 1) // 2).astype(np.int64)


def _half_split_test(oracle, rounds, rng, tag, equal, target_total):
    """Shared body of the permutation and doubly-stochastic testers.

    One query checks the grand total; each round checks a random half of
    the columns and a random half of the rows against their size. The
    complementary half is implied by the total and costs no query.
    """
    n = oracle.n
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    all_ones = ones(n)
    total = oracle.query(all_ones, all_ones, tag)
    if not equal(total, target_total):
        return Verdict.REJECT, {"stage": "total", "total": total}, 0
    witness = None
    for r in range(rounds):
        cols = rng.permutation(n)[: n // 2]
        t_cols = oracle.query(all_ones, indicator(n, cols), tag)
        rows = rng.permutation(n)[: n // 2]
        t_rows = oracle.query(indicator(n, rows), all_ones, tag)
        if witness is None:
            if not equal(t_cols, len(cols)):
                witness = {"stage": "columns", "round": r, "subset": sorted(cols.tolist()), "sum": t_cols}
            elif not equal(t_rows, len(rows)):
                witness = {"stage": "rows", "round": r, "subset": sorted(rows.tolist()), "sum": t_rows}
    return (Verdict.ACCEPT if witness is None else Verdict.REJECT), witness, rounds


def test_permutation(oracle: BilinearOracle, rounds: int = 16, *, seed: int | None = None) -> TestReport:
    """Constant-query permutation test for 0/1 matrices over the integers.

    Charges 1 + 2*rounds queries, or 1 when the total number of ones is not n.
    The count with complement halves queried separately is reported in
    ``detail["nominal_queries"]``.
    """
    _require(oracle, _EXACT_COUNTING, "permutation test")
    seed, rng = resolve(seed)
    m = meter(oracle)
    verdict, witness, done = _half_split_test(oracle, rounds, rng, "permutation", lambda a, b: a == b, oracle.n)
    return TestReport(verdict, witness, done, m.used, seed, {"nominal_queries": 1 + 4 * done})


def test_doubly_stochastic(oracle: BilinearOracle, rounds: int = 16, *, seed: int | None = None) -> TestReport:
    """Half-split test of row and column sums for a nonnegative matrix.

    Negative entries are not detected here; see :func:`scan_negative_entry`.
    """
    _require(oracle, (DomainKind.RAT, DomainKind.REAL), "doubly stochastic test")
    seed, rng = resolve(seed)
    m = meter(oracle)
    verdict, witness, done = _half_split_test(oracle, rounds, rng, "doubly_stochastic", oracle.domain.equal, oracle.n)
    return TestReport(verdict, witness, done, m.used, seed, {"nominal_queries": 1 + 4 * done})


def scan_negative_entry(oracle: BilinearOracle) -> TestReport:
    """Read every entry in row-major order; the first negative one is the witness."""
    _require(oracle, (DomainKind.INT, DomainKind.RAT, DomainKind.REAL), "negative-entry scan")
    m = meter(oracle)
    n = oracle.n
    witness = None
    for i in range(n):
        for j in range(n):
            if oracle.entry_query(i, j, "negative") < 0 and witness is None:
                witness = (i, j)
    verdict = Verdict.ACCEPT if witness is None else Verdict.REJECT
    return TestReport(verdict, witness, 1, m.used, None)

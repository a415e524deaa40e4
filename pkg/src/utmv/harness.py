"""Seeded experiment runner: testers over planted ensembles, with budget checks."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import graph, la_testers, stat_testers
from .domains import ScalarDomain
from .instances import generate_instance
from .io import write_csv
from .oracle import BilinearOracle, TestReport, Verdict
from .rng import check_seed, child_seed


class BudgetViolation(AssertionError):
    """A tester charged a different number of queries than its formula says."""


@dataclass(frozen=True)
class TesterInfo:
    name: str
    run: Callable  # (oracle, n, params, seed) -> TestReport
    budget: Callable  # (n, domain, params, report) -> int
    domains: tuple[str, ...]
    default_domain: str
    certain_family: str
    certain_verdict: Verdict
    other_family: str
    graph: bool = False


def _diag_rounds(params):
    if params.get("rounds") is not None:
        return params["rounds"]
    return la_testers.AmplificationPlan(params["eps"], la_testers.DIAGONAL_DELTA).rounds


def _sym_rounds(domain, params):
    if params.get("rounds") is not None:
        return params["rounds"]
    return la_testers.AmplificationPlan(params["eps"], la_testers.symmetric_detection(domain)).rounds


def _value_report(value, used, detail_key="value"):
    return TestReport(Verdict.ACCEPT, None, 1, used, None, {detail_key: value})


def _run_trace(o, n, p, seed):
    start = o.ledger.total
    value = la_testers.exact_trace(o)
    return _value_report(value, o.ledger.total - start)


def _run_majority(o, n, p, seed):
    start = o.ledger.total
    bits = stat_testers.column_majority_exact(o)
    return _value_report(bits.tolist(), o.ledger.total - start, "majority")


def _split_budget(n, d, p, r):
    return 1 if r.rounds == 0 else 1 + 2 * p["rounds"]


def _star_budget(n, d, p, r):
    if r.rounds == 0 and r.detail.get("stage") != "exhaustive":
        return 1
    if n < graph.STAR_MIN_N:
        return 1 + n * n
    return 1 + p["rounds"]


def _identical_budget(n, d, p, r):
    if d.kind.value == "gf2":
        return n * math.ceil(math.log2(n * n / p["eps"]))
    return n


_ALL = ("gf2", "gfp", "int", "rat", "real", "complex")

TESTERS: dict[str, TesterInfo] = {
    t.name: t
    for t in [
        TesterInfo("diagonal",
                   lambda o, n, p, s: la_testers.test_diagonal(o, p["eps"], rounds=p.get("rounds"), seed=s),
                   lambda n, d, p, r: _diag_rounds(p),
                   _ALL, "int", "diagonal", Verdict.ACCEPT, "near_diagonal"),
        TesterInfo("symmetric",
                   lambda o, n, p, s: la_testers.test_symmetric(o, p["eps"], rounds=p.get("rounds"), seed=s),
                   lambda n, d, p, r: 2 * _sym_rounds(d, p),
                   _ALL, "int", "symmetric", Verdict.ACCEPT, "asymmetric"),
        TesterInfo("unitary",
                   lambda o, n, p, s: la_testers.test_unitary(o, p.get("rounds") or 1, seed=s),
                   lambda n, d, p, r: n * (p.get("rounds") or 1),
                   ("real", "complex"), "real", "hadamard_unitary", Verdict.ACCEPT, "random"),
        TesterInfo("trace", _run_trace, lambda n, d, p, r: n,
                   _ALL, "int", "random", Verdict.ACCEPT, "random"),
        TesterInfo("all_ones_column",
                   lambda o, n, p, s: stat_testers.find_all_ones_column(o, seed=s),
                   lambda n, d, p, r: n,
                   ("int", "rat"), "int", "all_ones_column", Verdict.REJECT, "random_binary"),
        TesterInfo("identical_columns",
                   lambda o, n, p, s: stat_testers.find_identical_columns(o, p["eps"], seed=s),
                   _identical_budget,
                   ("gf2", "int", "rat"), "gf2", "identical_columns", Verdict.REJECT, "distinct_columns"),
        TesterInfo("majority", _run_majority, lambda n, d, p, r: n * n,
                   ("gf2",), "gf2", "random_binary", Verdict.ACCEPT, "random_binary"),
        TesterInfo("permutation",
                   lambda o, n, p, s: stat_testers.test_permutation(o, p["rounds"], seed=s),
                   _split_budget,
                   ("int", "rat"), "int", "permutation", Verdict.ACCEPT, "near_permutation"),
        TesterInfo("doubly_stochastic",
                   lambda o, n, p, s: stat_testers.test_doubly_stochastic(o, p["rounds"], seed=s),
                   _split_budget,
                   ("rat", "real"), "rat", "doubly_stochastic", Verdict.ACCEPT, "nonnegative"),
        TesterInfo("negative_scan",
                   lambda o, n, p, s: stat_testers.scan_negative_entry(o),
                   lambda n, d, p, r: n * n,
                   ("int", "rat", "real"), "int", "planted_negative", Verdict.REJECT, "nonnegative"),
        TesterInfo("star",
                   lambda g, n, p, s: graph.test_star(g, p["rounds"], seed=s),
                   _star_budget,
                   ("int",), "int", "star", Verdict.ACCEPT, "path", graph=True),
    ]
}


@dataclass
class ExperimentSpec:
    tester: str
    n: int
    instance: str | None = None
    domain: str | None = None
    eps: float = 0.01
    rounds: int | None = None
    trials: int = 100
    seed: int = 0
    out: str | None = None
    workers: int = 1

    def info(self) -> TesterInfo:
        try:
            return TESTERS[self.tester]
        except KeyError:
            raise ValueError(f"unknown tester {self.tester!r}; choose from {sorted(TESTERS)}") from None

    def resolved_domain(self) -> ScalarDomain:
        info = self.info()
        dom = ScalarDomain.parse(self.domain or info.default_domain)
        if dom.kind.value not in info.domains:
            raise ValueError(f"tester {self.tester} does not run over {dom}; allowed: {', '.join(info.domains)}")
        return dom

    def params(self) -> dict:
        rounds = self.rounds
        if rounds is None and self.tester in ("permutation", "doubly_stochastic", "star"):
            rounds = 16
        return {"eps": self.eps, "rounds": rounds}

    def validate(self):
        self.info()
        self.resolved_domain()
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 < self.eps < 1:
            raise ValueError("eps must lie in (0, 1)")
        check_seed(self.seed)


@dataclass
class TrialRecord:
    tester: str
    n: int
    domain: str
    trial: int
    seed: int
    verdict: str
    queries: int
    us: int
    report: TestReport | None = field(default=None, repr=False, compare=False)


@dataclass
class ExperimentSummary:
    spec: ExperimentSpec
    records: list[TrialRecord]

    @property
    def accept_rate(self) -> float:
        return sum(r.verdict == "accept" for r in self.records) / len(self.records)

    @property
    def reject_rate(self) -> float:
        return 1.0 - self.accept_rate

    @property
    def mean_queries(self) -> float:
        return float(np.mean([r.queries for r in self.records]))

    @property
    def max_queries(self) -> int:
        return max(r.queries for r in self.records)

    def rows(self) -> list[dict]:
        return [{k: getattr(r, k) for k in ("tester", "n", "domain", "trial", "seed", "verdict", "queries", "us")}
                for r in self.records]


def run_trial(spec: ExperimentSpec, index: int) -> TrialRecord:
    info = spec.info()
    domain = spec.resolved_domain()
    params = spec.params()
    seed = child_seed(spec.seed, index)
    matrix = generate_instance(spec.instance or info.certain_family, spec.n, child_seed(seed, 0), domain=domain)
    oracle = BilinearOracle(matrix)
    target = graph.GraphOracle(oracle) if info.graph else oracle
    t0 = time.perf_counter_ns()
    report = info.run(target, spec.n, params, child_seed(seed, 1))
    us = (time.perf_counter_ns() - t0) // 1000
    if report.queries_charged != oracle.ledger.total:
        raise BudgetViolation(f"{spec.tester}: report says {report.queries_charged}, ledger {oracle.ledger.total}")
    expected = info.budget(spec.n, domain, params, report)
    if report.queries_charged != expected:
        raise BudgetViolation(f"{spec.tester} trial {index}: charged {report.queries_charged}, formula {expected}")
    return TrialRecord(spec.tester, spec.n, str(domain), index, seed, report.verdict.value,
                       report.queries_charged, us, report)


def _run_trial_no_report(args):
    rec = run_trial(*args)
    rec.report = None
    return rec


def run_experiment(spec: ExperimentSpec) -> ExperimentSummary:
    """Run ``spec.trials`` seeded trials; write the CSV when ``spec.out`` is set.

    Trial i uses child seed ``hash(seed, i)``; rows are ordered by trial
    index whatever the worker count.
    """
    spec.validate()
    if spec.workers > 1:
        with ProcessPoolExecutor(spec.workers) as pool:
            records = list(pool.map(_run_trial_no_report, [(spec, i) for i in range(spec.trials)], chunksize=16))
    else:
        records = [run_trial(spec, i) for i in range(spec.trials)]
    records.sort(key=lambda r: r.trial)
    summary = ExperimentSummary(spec, records)
    if spec.out:
        write_csv(summary.rows(), spec.out)
    return summary

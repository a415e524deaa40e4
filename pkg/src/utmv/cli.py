"""Command line: ``utmv {test,experiment,verify-gadgets,graph}``."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import graph
from .gadgets import verify_gadget_iff
from .harness import TESTERS, ExperimentSpec, run_experiment
from .io import parse_edge_list, parse_matrix_file
from .oracle import BilinearOracle
from .rng import fresh_seed

DEFAULT_GADGET_CHECKS = [
    ("perm", 4), ("negative", 3), ("majority", 4), ("unitary_rand", 8), ("unitary_det", 4),
]


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


def cmd_test(args) -> int:
    info = TESTERS[args.tester]
    matrix = parse_matrix_file(args.file)
    if matrix.domain.kind.value not in info.domains:
        print(f"error: {args.tester} does not run over {matrix.domain}", file=sys.stderr)
        return 2
    oracle = BilinearOracle(matrix)
    target = graph.GraphOracle(oracle) if info.graph else oracle
    seed = args.seed if args.seed is not None else fresh_seed()
    rounds = args.rounds
    if rounds is None and args.tester in ("permutation", "doubly_stochastic", "star"):
        rounds = 16
    report = info.run(target, matrix.n, {"eps": args.eps, "rounds": rounds}, seed)
    print(json.dumps(_jsonable({
        "tester": args.tester, "n": matrix.n, "domain": str(matrix.domain),
        "verdict": report.verdict.value, "witness": report.witness, "rounds": report.rounds,
        "queries": report.queries_charged, "seed": seed, "by_category": oracle.ledger.snapshot(),
        "detail": report.detail,
    }), indent=2))
    return 0


def cmd_experiment(args) -> int:
    spec = ExperimentSpec(
        tester=args.tester, n=args.n, instance=args.instance, domain=args.domain, eps=args.eps,
        rounds=args.rounds, trials=args.trials, seed=args.seed, out=args.out, workers=args.workers,
    )
    summary = run_experiment(spec)
    print(f"tester={spec.tester} instance={spec.instance or spec.info().certain_family} n={spec.n} "
          f"domain={spec.resolved_domain()} trials={spec.trials}")
    print(f"accept_rate={summary.accept_rate:.6f} reject_rate={summary.reject_rate:.6f} "
          f"mean_queries={summary.mean_queries:.2f} max_queries={summary.max_queries}")
    if spec.out:
        print(f"wrote {spec.out}")
    return 0


def cmd_verify(args) -> int:
    checks = [(args.kind, args.n)] if args.kind else DEFAULT_GADGET_CHECKS
    failed = 0
    print(f"{'kind':<14}{'n':>4}  {'mode':<11}{'checked':>9}  {'result':<6} seconds")
    for kind, n in checks:
        t0 = time.perf_counter()
        rep = verify_gadget_iff(kind, n, mode=args.mode, trials=args.trials, seed=args.seed)
        dt = time.perf_counter() - t0
        status = "PASS" if rep.passed else "FAIL"
        failed += not rep.passed
        print(f"{kind:<14}{n:>4}  {rep.mode:<11}{rep.checked:>9}  {status:<6} {dt:.2f}")
        for x, y in rep.counterexamples:
            print(f"    counterexample x={x} y={y}")
    return 1 if failed else 0


def cmd_graph(args) -> int:
    g = graph.GraphOracle(parse_edge_list(args.file))
    seed = args.seed if args.seed is not None else fresh_seed()
    print(f"n={g.n} edges={graph.edge_count(g)}")
    for i in range(g.n):
        print(f"vertex {i}: degree={graph.degree(g, i)} neighbors={graph.neighbors(g, i)}")
    if g.cached_edge_count:
        from .rng import make_rng

        rng = make_rng(seed)
        for _ in range(args.samples):
            trace = graph.sample_edge(g, rng=rng)
            print(f"sampled edge {trace.undirected} ({trace.queries_used} queries)")
    print(f"total queries={g.ledger.total} by_category={g.ledger.snapshot()}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="utmv", description="Vector-matrix-vector query laboratory")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("test", help="run one tester on a matrix file")
    t.add_argument("file")
    t.add_argument("--tester", required=True, choices=sorted(TESTERS))
    t.add_argument("--eps", type=float, default=0.01)
    t.add_argument("--rounds", type=int)
    t.add_argument("--seed", type=int)
    t.set_defaults(func=cmd_test)

    e = sub.add_parser("experiment", help="run a seeded ensemble and write CSV")
    e.add_argument("--tester", required=True, choices=sorted(TESTERS))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--instance")
    e.add_argument("--domain")
    e.add_argument("--eps", type=float, default=0.01)
    e.add_argument("--rounds", type=int)
    e.add_argument("--trials", type=int, default=100)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--out")
    e.add_argument("--workers", type=int, default=1)
    e.set_defaults(func=cmd_experiment)

    v = sub.add_parser("verify-gadgets", help="check every reduction gadget's iff-claim")
    v.add_argument("--kind", choices=["perm", "majority", "identical", "negative", "unitary_rand", "unitary_det"])
    v.add_argument("--n", type=int)
    v.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    gr = sub.add_parser("graph", help="local-query demo on an edge-list file")
    gr.add_argument("file")
    gr.add_argument("--samples", type=int, default=5)
    gr.add_argument("--seed", type=int)
    gr.set_defaults(func=cmd_graph)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "kind", None) and args.n is None:
        args.n = dict(DEFAULT_GADGET_CHECKS).get(args.kind, 8)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

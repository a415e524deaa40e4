"""
Seeded experiments and CSV output
=================================

An experiment runs one tester over many generated instances. Trial i uses a
child seed of the master seed, so a rerun writes the same CSV apart from
the timing column.
"""

import tempfile
from pathlib import Path

from utmv.harness import ExperimentSpec, run_experiment

spec = ExperimentSpec("star", 64, instance="path", rounds=1, trials=2000, seed=11)
summary = run_experiment(spec)
print(f"single-round rejection on P64: {summary.reject_rate:.3f}, queries per trial {summary.max_queries}")

spec = ExperimentSpec("permutation", 64, instance="near_permutation", rounds=1, trials=2000, seed=11)
print(f"single-round rejection on a near-permutation: {run_experiment(spec).reject_rate:.3f}")

###############################################################################
with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "trace.csv"
    run_experiment(ExperimentSpec("trace", 32, instance="random", trials=5, seed=0, out=str(out)))
    print(out.read_text())

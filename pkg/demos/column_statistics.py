"""
Column statistics with few queries
==================================

All-ones columns, repeated columns, permutation matrices and doubly
stochastic matrices, plus the quadratic-cost checks for comparison.
"""

import numpy as np

from utmv import BilinearOracle, DenseMatrix, GF2, INT, RAT, generate_instance
from utmv import stat_testers as stt

# n probes against one random vector find an all-ones column.
m = generate_instance("all_ones_column", 24, seed=5, col=11)
report = stt.find_all_ones_column(BilinearOracle(m), seed=1)
print("all-ones column at", report.witness, "using", report.queries_charged, "queries")

###############################################################################
# Repeated columns share their signatures under every probe.
dup = generate_instance("identical_columns", 24, seed=2, domain=GF2, pair=(3, 17))
report = stt.find_identical_columns(BilinearOracle(dup), eps=0.01, seed=4)
print("identical pair:", report.witness, "after", report.rounds, "rounds")

###############################################################################
# The permutation tester checks the total, then random halves of rows and
# columns. An empty column next to a doubled one is caught often.
perm = BilinearOracle(generate_instance("permutation", 64, seed=0))
print("permutation:", stt.test_permutation(perm, rounds=16, seed=0).verdict.value)
near = generate_instance("near_permutation", 64, seed=0)
caught = sum(stt.test_permutation(BilinearOracle(near), rounds=1, seed=s).rejected for s in range(2000))
print(f"single-round catch rate on a near-permutation: {caught / 2000:.3f}")

###############################################################################
# Doubly stochastic: same half splits over the rationals.
uniform = DenseMatrix(np.full((5, 5), "1/5", dtype=object), RAT)
print("uniform 1/5:", stt.test_doubly_stochastic(BilinearOracle(uniform), seed=0).verdict.value)

###############################################################################
# Majority and negative entries are read entry by entry.
print("majority of I4:", stt.column_majority_exact(BilinearOracle(DenseMatrix(np.eye(4, dtype=int), GF2))))
neg = np.zeros((5, 5), dtype=int)
neg[3, 1] = -1
print("negative entry at", stt.scan_negative_entry(BilinearOracle(DenseMatrix(neg, INT))).witness)

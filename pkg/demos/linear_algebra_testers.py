"""
Diagonal, symmetric and unitary testers
=======================================

Each tester accepts every matrix with the property and catches violators
with a fixed chance per round. Rounds are chosen so the miss chance drops
below ``eps``.
"""

import numpy as np

from utmv import BilinearOracle, DenseMatrix, GF2, INT, REAL, generate_instance
from utmv import la_testers as la

# A diagonal matrix always passes; one stray off-diagonal bit is caught
# with probability at least 1/16 per round.
diag = BilinearOracle(generate_instance("diagonal", 32, seed=1, domain=GF2))
print(la.test_diagonal(diag, eps=0.01, seed=7))

near = generate_instance("near_diagonal", 32, seed=1, domain=GF2)
hits = sum(la.test_diagonal(BilinearOracle(near), rounds=1, seed=s).rejected for s in range(2000))
print(f"single-round catch rate: {hits / 2000:.3f}")

plan = la.AmplificationPlan(0.01, la.DIAGONAL_DELTA)
print("rounds for eps=0.01:", plan.rounds)

###############################################################################
# Symmetry: compare u^T M v with v^T M u for random u, v.
sym = BilinearOracle(generate_instance("symmetric", 16, seed=3, domain=INT))
asym = BilinearOracle(generate_instance("asymmetric", 16, seed=3, domain=INT))
print("symmetric:", la.test_symmetric(sym, seed=0).verdict.value,
      "| asymmetric:", la.test_symmetric(asym, seed=0).verdict.value)

###############################################################################
# Unitarity over the reals: recover Mv with n queries and compare norms.
had = BilinearOracle(generate_instance("hadamard_unitary", 16, seed=0, domain=REAL))
print(la.test_unitary(had, trials=3, seed=0))

bumped = np.eye(8)
bumped[0, 0] = 2.0
print("I with M00=2:", la.test_unitary(BilinearOracle(DenseMatrix(bumped, REAL)), seed=0).verdict.value)

###############################################################################
# The trace is exact with n entry queries.
print("trace:", la.exact_trace(BilinearOracle(DenseMatrix(np.diag([0, 1, 2, 3]), INT))))

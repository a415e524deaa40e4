"""
Asking a matrix questions through u^T M v
=========================================

The oracle hides a matrix and answers one number per query. Every answer
is charged to a ledger, so the cost of an algorithm is something you can
read off afterwards.
"""

import numpy as np

from utmv import BilinearOracle, DenseMatrix, INT, RAT, GF2, basis, ones, ones_in_submatrix

# A small integer matrix.
m = DenseMatrix([[2, 0, 1], [0, 3, 0], [1, 0, 4]], INT)
oracle = BilinearOracle(m)

# The all-ones query sums every entry.
print("sum of entries:", oracle.query(ones(3), ones(3)))

# Basis vectors pick out a single entry.
print("M[0, 2] =", oracle.query(basis(3, 0), basis(3, 2)))
print("ledger:", oracle.ledger)

###############################################################################
# Over GF(2) the same query is taken mod 2, and probe vectors must be bits.
g = BilinearOracle(DenseMatrix(np.ones((4, 4), dtype=int), GF2))
print("all-ones 4x4 over GF(2):", g.query(ones(4), ones(4)))

###############################################################################
# Rationals stay exact.
r = BilinearOracle(DenseMatrix([["1/3", "1/6"], [0, "1/2"]], RAT))
print("rational sum:", r.query(ones(2), ones(2)))

###############################################################################
# Counting ones in a 0/1 submatrix takes one query with two indicator vectors.
adj = DenseMatrix(np.array([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]), INT)
cycle = BilinearOracle(adj)
print("ones in rows {0,1} x all columns:", ones_in_submatrix(cycle, [0, 1], range(4)))
print("queries charged:", cycle.ledger.total)

"""
Reduction gadgets from set disjointness
=======================================

Each gadget builds a matrix from two bit strings x and y so that a matrix
property holds exactly when x and y are disjoint (or exactly when they
meet). The check below builds every pair and reads the property directly.
"""

from utmv import gadgets

print(gadgets.hadamard(2).entries)

x, y = [0, 1], [0, 0]
g = gadgets.build_gadget("perm", x, y)
print(g.matrix.raw)
print("is a permutation:", g.observed(), "| predicted:", g.predicted)

###############################################################################
# Exhaustive verification at small sizes.
for kind, n in [("perm", 4), ("majority", 4), ("unitary_rand", 8)]:
    rep = gadgets.verify_gadget_iff(kind, n)
    print(f"{kind:>13} n={n}: {rep.checked} pairs, {len(rep.counterexamples)} counterexamples")

###############################################################################
# The identical-columns gadget is one-sided: disjoint inputs can still
# collide by chance, rarely.
rep = gadgets.verify_gadget_iff("identical", 16, mode="sampled", trials=500, seed=0)
print("identical:", rep.notes)

"""
Graphs behind a bilinear oracle
===============================

With the adjacency matrix hidden, degrees, edges, neighbours and the edge
count each take one or a few queries. Edges can be sampled uniformly by
halving the matrix.
"""

from collections import Counter

from utmv import generate_instance, make_rng
from utmv import graph

g = graph.GraphOracle(generate_instance("random_graph", 16, seed=3, density=0.3))

print("edges:", graph.edge_count(g))
print("degree of 0:", graph.degree(g, 0))
print("neighbours of 0:", graph.neighbors(g, 0))
print("edge 0-1?", graph.edge_exists(g, 0, 1))
print("queries so far:", g.ledger.snapshot())

###############################################################################
# Uniform edge samples. Each costs at most 2 * ceil(log2 n) + 1 queries.
rng = make_rng(1)
counts = Counter(graph.sample_edge(g, rng=rng).undirected for _ in range(5000))
expected = 5000 / graph.edge_count(g)
print(f"most/least sampled edge: {max(counts.values())} / {min(counts.values())} (expect ~{expected:.0f})")

###############################################################################
# The star test: one query for the edge count, then one per round.
star = graph.GraphOracle(generate_instance("star", 64, seed=0, center=9))
path = graph.GraphOracle(generate_instance("path", 64, seed=0))
print("star:", graph.test_star(star, rounds=16, seed=0).verdict.value)
print("path:", graph.test_star(path, rounds=16, seed=0).verdict.value)

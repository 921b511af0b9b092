"""Among the first three paths, no pair need be two inner nodes apart.

The second and third paths below visit a and b in opposite orders, so
their inner node sets coincide; the first path differs from each by one
node only.
"""

from pdksp import PathStream, WeightedGraph, check_guarantees

names = ["s", "a", "b", "t"]
g = WeightedGraph.from_edges(4, [(0, 1, 1), (1, 3, 4), (1, 2, 1), (2, 3, 6), (0, 2, 6)],
                             directed=False)
for p in PathStream(g, 0, 3).take(3):
    print("-".join(names[v] for v in p.nodes), "length", p.length)

report = check_guarantees(g, 0, 3, 3)
print("first two paths: 3 edges and 1 node apart ->", report.claim1.status)
print("first three paths: some pair 4 edges and 2 nodes apart ->", report.claim2.status)

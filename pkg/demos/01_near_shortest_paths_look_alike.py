"""The first k near-shortest paths can be nearly identical.

Example 1a strings towers together; the cheapest 4^q paths only vary the
first q towers, so every pair among them differs in at most 4q edges no
matter how large the graph is.
"""

from pdksp import MeasureKind, PathStream, best_pair
from pdksp.generators import gen_example1a, gen_example1b

g = gen_example1a(qbar=3, tower_width=4)
print(f"example 1a: {g.n} nodes, {g.m} edges")
stream = PathStream(g, 0, g.n - 1)
for q in (1, 2, 3):
    prefix = stream.take(4 ** q)
    _, _, edges = best_pair(prefix, MeasureKind.EDGE_SYMDIFF)
    _, _, nodes = best_pair(prefix, MeasureKind.NODE_SYMDIFF)
    print(f"  first {4 ** q:2d} paths: most distinct pair differs in {edges} edges, {nodes} nodes")

g = gen_example1b(n_prime=6)
print(f"example 1b: {g.n} nodes (six diamonds)")
stream = PathStream(g, 0, g.n - 1)
for size in (7, 22):
    prefix = stream.take(size)
    print(f"  first {size} paths: edge distance {best_pair(prefix, MeasureKind.EDGE_SYMDIFF)[2]},"
          f" node set difference {best_pair(prefix, MeasureKind.NODE_SETDIFF)[2]}")

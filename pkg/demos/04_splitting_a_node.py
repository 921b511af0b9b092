"""Many near-shortest paths that all hug the shortest one.

Splitting a node of the unique shortest path and bridging the halves with
a small complete graph of cheap edges creates a burst of paths shorter
than the old runner-up; they differ only inside the bridge.
"""

from pdksp import MeasureKind, PathStream, WeightedGraph, best_pair
from pdksp.generators import build_example2, example2_prefix_count

base = WeightedGraph.from_edges(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 5)],
                                directed=True)
ex = build_example2(base, s=0, t=4, v=2, qbar=4)
print(f"epsilon = {ex.epsilon}, old shortest {ex.shortest_before.length},"
      f" old runner-up {ex.second_before.length}")

stream = PathStream(ex.graph, 0, 4)
below = []
while True:
    p = stream.next_path()
    if p is None or p.length >= ex.second_before.length:
        break
    below.append(p)
print(f"{len(below)} paths shorter than the old runner-up (formula: {example2_prefix_count(4, 4)})")
for q in (1, 2):
    k = example2_prefix_count(4, q)
    print(f"  first {k} paths: edge distance {best_pair(below[:k], MeasureKind.EDGE_SYMDIFF)[2]}")

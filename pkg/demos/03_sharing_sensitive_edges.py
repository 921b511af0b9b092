"""Choosing shortest paths that share as few sensitive edges as possible.

Three shortest paths fan out from s and merge at a before reaching t, so
the edge a-t lies on all of them. Each network variant answers a different
question about that bottleneck. Edges outside S carry any number of
paths, so an optimal answer may list the same path more than once.
"""

from pdksp import SensitiveSet, WeightedGraph
from pdksp.disjoint import solve
from pdksp.flow import InfeasibleFlowError
from pdksp.spdag import build_spdag

s, x1, x2, x3, t, a = range(6)
names = ["s", "x1", "x2", "x3", "t", "a"]
g = WeightedGraph.from_edges(6, [(s, x1, 1), (s, x2, 1), (s, x3, 1), (x1, a, 1), (x2, a, 1),
                                 (x3, a, 1), (a, t, 1)], directed=True)
dag = build_spdag(g, s, t)
S = SensitiveSet.edges([(a, t)])


def show(label, sol):
    paths = ", ".join("-".join(names[v] for v in p.nodes) for p in sol.paths)
    print(f"{label}: objective {sol.objective}; {paths}")


show("n1 edge-disjoint", solve(dag, "n1"))
show("n2 disjoint on S", solve(dag, "n2", S))
show("n3 r=2, at most doubled", solve(dag, "n3", S, r=2))
try:
    solve(dag, "n3", S, r=3)
except InfeasibleFlowError as e:
    print(f"n3 r=3: infeasible, at most {e.achievable} paths when no edge carries three")
show("n4 r=3, prioritized overloads", solve(dag, "n4", S, r=3))

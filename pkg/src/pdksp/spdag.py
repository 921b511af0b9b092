"""Subgraph of all shortest s-t paths, oriented along those paths."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .graph import Path, WeightedGraph, WeightVector
from .io import serialize_graph
from .shortest import shortest_tree


class UnreachableError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ShortestPathDag:
    """Arcs ``(u, v, w)`` with ``d(s,u) + w + d(v,t) == d(s,t)``.

    Node ids are those of ``graph``; nodes off every shortest path are
    simply absent. ``n`` may exceed ``graph.n`` after node splitting, in
    which case ``merged`` maps each added id back to its original node.
    """

    graph: WeightedGraph
    s: int
    t: int
    n: int
    arcs: tuple[tuple[int, int, WeightVector], ...]
    dist_from_s: dict[int, WeightVector]
    dist_to_t: dict[int, WeightVector]
    merged: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> WeightVector:
        return self.dist_from_s[self.t]

    @property
    def nodes(self) -> list[int]:
        return sorted(self.dist_from_s)

    @cached_property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, _ in self.arcs)

    @cached_property
    def succ(self) -> dict[int, list[tuple[int, WeightVector]]]:
        out: dict[int, list] = {u: [] for u in self.dist_from_s}
        for u, v, w in self.arcs:
            out[u].append((v, w))
        for row in out.values():
            row.sort(key=lambda x: x[0])
        return out

    def topological_order(self) -> list[int]:
        indeg = {u: 0 for u in self.dist_from_s}
        for _, v, _ in self.arcs:
            indeg[v] += 1
        ready = sorted(u for u, k in indeg.items() if k == 0)
        order = []
        while ready:
            u = ready.pop(0)
            order.append(u)
            for v, _ in self.succ[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    ready.append(v)
        if len(order) != len(indeg):
            raise ValueError("shortest-path subgraph has a cycle")
        return order

    def paths(self) -> Iterator[tuple[int, ...]]:
        """All s-t node sequences inside the DAG, in lexicographic order."""
        stack = [(self.s,)]
        while stack:
            seq = stack.pop()
            u = seq[-1]
            if u == self.t:
                yield seq
                continue
            for v, _ in reversed(self.succ[u]):
                stack.append(seq + (v,))

    def original_nodes(self, seq) -> tuple[int, ...]:
        """Drop split copies so a path reads in the original graph's ids."""
        return tuple(v for v in seq if v not in self.merged)


def build_spdag(g: WeightedGraph, s: int, t: int) -> ShortestPathDag:
    fwd = shortest_tree(g, s)
    bwd = shortest_tree(g, t, reversed=True)
    if fwd.dist[t] is None:
        raise UnreachableError(f"node {t + 1} unreachable from {s + 1}")
    total = fwd.dist[t]
    arcs = []
    for a in g.arcs:
        both = [(a.tail, a.head)]
        if not g.directed:
            both.append((a.head, a.tail))
        tight = []
        for u, v in both:
            du, dv = fwd.dist[u], bwd.dist[v]
            if du is not None and dv is not None and du + a.weight + dv == total:
                tight.append((u, v))
        # both orientations tight would need a zero-length cycle
        assert len(tight) <= 1, f"edge {a} tight in both directions"
        arcs.extend((u, v, a.weight) for u, v in tight)
    arcs.sort(key=lambda x: (x[0], x[1]))
    on_path = {s, t} | {u for u, _, _ in arcs} | {v for _, v, _ in arcs}
    return ShortestPathDag(
        graph=g, s=s, t=t, n=g.n, arcs=tuple(arcs),
        dist_from_s={u: fwd.dist[u] for u in sorted(on_path)},
        dist_to_t={u: bwd.dist[u] for u in sorted(on_path)},
    )


def is_shortest_path(dag: ShortestPathDag, p: Path) -> bool:
    """True iff every arc of the s-t path ``p`` is a DAG arc in the same orientation."""
    if p.source != dag.s or p.target != dag.t:
        raise ValueError("not an s-t path of this query")
    return all(arc in dag.arc_set for arc in p.arcs())


def serialize_spdag(dag: ShortestPathDag) -> str:
    comments = [f"spdag s={dag.s + 1} t={dag.t + 1} d(s,t)={dag.total}"]
    for u in dag.nodes:
        comments.append(f"d(s,{u + 1})={dag.dist_from_s[u]} d({u + 1},t)={dag.dist_to_t[u]}")
    arcs = [(u, v, w) for u, v, w in dag.arcs]
    g = WeightedGraph.from_edges(dag.n, arcs, directed=True) if arcs else WeightedGraph(
        True, dag.n, (), dag.graph.d)
    return serialize_graph(g, comments)

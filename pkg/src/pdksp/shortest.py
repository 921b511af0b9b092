"""Exact Dijkstra and Yen-style enumeration of simple s-t paths.

Paths come out ordered by ``(length, node sequence)``: equal-length paths
are broken by lexicographic comparison of their node-id tuples.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Path, WeightedGraph, WeightVector


@dataclass(frozen=True)
class DistanceLabels:
    """One shortest-path tree.

    ``dist[v]`` is ``None`` for unreachable nodes. ``parent[v]`` is the
    predecessor of ``v`` on the tree (the successor when ``reversed``).
    """

    source: int
    reversed: bool
    dist: tuple[WeightVector | None, ...]
    parent: tuple[int | None, ...]

    def reachable(self, v: int) -> bool:
        return self.dist[v] is not None

    def tree_path(self, v: int) -> list[int]:
        """Node sequence from ``source`` to ``v`` (``v`` to ``source`` if reversed)."""
        if self.dist[v] is None:
            raise ValueError(f"node {v} unreachable")
        seq = [v]
        while seq[-1] != self.source:
            seq.append(self.parent[seq[-1]])
        return seq if self.reversed else seq[::-1]


def _dijkstra(n: int, source: int, neighbors, zero: WeightVector,
              banned_nodes=frozenset(), banned_arcs=frozenset()):
    dist: list[WeightVector | None] = [None] * n
    parent: list[int | None] = [None] * n
    dist[source] = zero
    heap = [(zero, source)]
    done = [False] * n
    while heap:
        du, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in neighbors(u):
            if v in banned_nodes or (u, v) in banned_arcs:
                continue
            nd = du + w
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, parent


def shortest_tree(g: WeightedGraph, source: int, reversed: bool = False) -> DistanceLabels:
    """Exact lexicographic distances from ``source`` (to ``source`` if ``reversed``)."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    nbrs = g.in_neighbors if reversed else g.out_neighbors
    dist, parent = _dijkstra(g.n, source, nbrs, WeightVector.zero(g.d))
    return DistanceLabels(source, reversed, tuple(dist), tuple(parent))


def path_length(g: WeightedGraph, nodes: Sequence[int]) -> WeightVector:
    if len(set(nodes)) != len(nodes):
        raise ValueError(f"repeated node in {list(nodes)}")
    total = WeightVector.zero(g.d)
    for u, v in zip(nodes, nodes[1:]):
        total = total + g.weight(u, v)
    return total


def make_path(g: WeightedGraph, nodes: Sequence[int]) -> Path:
    nodes = tuple(nodes)
    return Path(nodes, path_length(g, nodes), g.directed)


def _least_shortest_path(g: WeightedGraph, start: int, target: int,
                         banned_nodes, banned_arcs) -> tuple[int, ...] | None:
    """Lexicographically least node sequence among shortest start->target paths.

    Runs Dijkstra backwards from ``target`` and then walks forward greedily,
    always stepping to the smallest neighbour that stays on a shortest path.
    """
    reverse_banned = frozenset((v, u) for u, v in banned_arcs)
    to_t, _ = _dijkstra(g.n, target, g.in_neighbors, WeightVector.zero(g.d),
                        banned_nodes, reverse_banned)
    if to_t[start] is None:
        return None
    seq = [start]
    u = start
    while u != target:
        for v, w in g.out_neighbors(u):
            if v in banned_nodes or (u, v) in banned_arcs or to_t[v] is None:
                continue
            if w + to_t[v] == to_t[u]:
                u = v
                break
        else:  # pragma: no cover - distances guarantee a tight arc
            raise AssertionError("no tight arc on shortest path walk")
        seq.append(u)
    return tuple(seq)


class PathStream:
    """Resumable enumeration of simple s-t paths from best to worst.

    Each emitted path spawns Yen deviations: for every prefix (root) of the
    path, the least spur path from the last root node that avoids the root's
    other nodes and the next arcs of all previously emitted paths sharing
    that root. Candidates sit in a heap keyed by ``(length, nodes)``.
    Roots shorter than the point where a path left its parent are skipped
    (Lawler's refinement): their candidates were already pushed.

    A stream is single-owner mutable state.
    """

    def __init__(self, g: WeightedGraph, s: int, t: int):
        if not (0 <= s < g.n and 0 <= t < g.n):
            raise ValueError("terminal out of range")
        if s == t:
            raise ValueError("source and target must differ")
        self.graph = g
        self.s = s
        self.t = t
        self.emitted: list[Path] = []
        self._heap: list[tuple[WeightVector, tuple[int, ...]]] = []
        # candidate -> index of its spur node; emitted root -> next nodes taken
        self._deviation: dict[tuple[int, ...], int] = {}
        self._branches: dict[tuple[int, ...], set[int]] = {}
        first = _least_shortest_path(g, s, t, frozenset(), frozenset())
        if first is not None:
            self._push(first, 0)

    def _push(self, nodes: tuple[int, ...], deviation: int) -> None:
        known = self._deviation.get(nodes)
        if known is not None:
            self._deviation[nodes] = min(known, deviation)
            return
        self._deviation[nodes] = deviation
        heapq.heappush(self._heap, (path_length(self.graph, nodes), nodes))

    def _spawn(self, nodes: tuple[int, ...]) -> None:
        g = self.graph
        for i in range(len(nodes) - 1):
            self._branches.setdefault(nodes[: i + 1], set()).add(nodes[i + 1])
        for i in range(self._deviation[nodes], len(nodes) - 1):
            root = nodes[: i + 1]
            spur = nodes[i]
            banned_arcs = frozenset((spur, v) for v in self._branches[root])
            tail = _least_shortest_path(g, spur, self.t, frozenset(root[:-1]), banned_arcs)
            if tail is not None:
                self._push(root[:-1] + tail, i)

    def next_path(self) -> Path | None:
        """Next path in order, or ``None`` once every simple path was emitted."""
        if not self._heap:
            return None
        length, nodes = heapq.heappop(self._heap)
        path = Path(nodes, length, self.graph.directed)
        self.emitted.append(path)
        self._spawn(nodes)
        return path

    def take(self, k: int) -> list[Path]:
        """Advance until ``k`` paths were emitted in total (fewer if exhausted)."""
        while len(self.emitted) < k:
            if self.next_path() is None:
                break
        return self.emitted[:k]

    def __iter__(self) -> Iterator[Path]:
        i = 0
        while True:
            if i < len(self.emitted):
                yield self.emitted[i]
            elif self.next_path() is None:
                return
            else:
                yield self.emitted[i]
            i += 1


def k_shortest_paths(g: WeightedGraph, s: int, t: int, k: int) -> list[Path]:
    return PathStream(g, s, t).take(k)

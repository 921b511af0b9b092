"""Integral max-flow, min-cost flow of a given value, and path decomposition.

Costs may be plain (arbitrary-precision) ints or :class:`LexCost` vectors;
the min-cost solver only needs ``+``, ``-`` and a total order, so both
kinds go through the same successive-shortest-path code.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any


class LexCost(tuple):
    """Integer vector cost compared lexicographically (first slot dominates)."""

    __slots__ = ()

    @classmethod
    def unit(cls, size: int, slot: int) -> "LexCost":
        return cls(1 if i == slot else 0 for i in range(size))

    @classmethod
    def zero(cls, size: int) -> "LexCost":
        return cls((0,) * size)

    def __add__(self, other):
        return LexCost(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other):
        return LexCost(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self):
        return LexCost(-a for a in self)

    def __mul__(self, k: int):
        return LexCost(a * k for a in self)

    __rmul__ = __mul__


@dataclass(frozen=True)
class FlowArc:
    tail: int
    head: int
    capacity: int
    cost: Any = 0
    # DAG arc this network arc stands for, and its level: 1 is the arc
    # itself, i >= 2 is the level-i gadget pair (u, x_i), (x_i, v).
    origin: tuple[int, int] | None = None
    level: int = 1


@dataclass(frozen=True, eq=False)
class FlowNetwork:
    n: int
    arcs: tuple[FlowArc, ...]
    s: int
    t: int
    zero_cost: Any = 0
    gadget_nodes: dict[int, tuple[tuple[int, int], int]] = field(default_factory=dict)

    def __post_init__(self):
        for a in self.arcs:
            if a.capacity < 0:
                raise ValueError(f"negative capacity on {a}")
            if a.cost < self.zero_cost:
                raise ValueError(f"negative cost on {a}")

    @cached_property
    def out_arcs(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, a in enumerate(self.arcs):
            out[a.tail].append(i)
        return out


@dataclass(frozen=True)
class Flow:
    value: int
    arc_flow: tuple[int, ...]
    cost: Any = 0


class InfeasibleFlowError(ValueError):
    def __init__(self, requested: int, achievable: int):
        self.requested = requested
        self.achievable = achievable
        super().__init__(f"flow of value {requested} infeasible; maximum is {achievable}")


class _Residual:
    # edge 2i is arc i forward, 2i+1 its reverse
    def __init__(self, net: FlowNetwork):
        self.net = net
        m = len(net.arcs)
        self.to = [0] * (2 * m)
        self.cap = [0] * (2 * m)
        self.cost: list = [None] * (2 * m)
        self.adj: list[list[int]] = [[] for _ in range(net.n)]
        for i, a in enumerate(net.arcs):
            self.to[2 * i], self.to[2 * i + 1] = a.head, a.tail
            self.cap[2 * i] = a.capacity
            self.cost[2 * i], self.cost[2 * i + 1] = a.cost, -a.cost
            self.adj[a.tail].append(2 * i)
            self.adj[a.head].append(2 * i + 1)

    def push(self, e: int, amount: int) -> None:
        self.cap[e] -= amount
        self.cap[e ^ 1] += amount

    def arc_flows(self) -> tuple[int, ...]:
        return tuple(self.cap[2 * i + 1] for i in range(len(self.net.arcs)))

    def augment(self, pred_edge: list, amount: int) -> None:
        v = self.net.t
        while v != self.net.s:
            e = pred_edge[v]
            self.push(e, amount)
            v = self.to[e ^ 1]

    def bottleneck(self, pred_edge: list) -> int:
        v, b = self.net.t, None
        while v != self.net.s:
            e = pred_edge[v]
            b = self.cap[e] if b is None else min(b, self.cap[e])
            v = self.to[e ^ 1]
        return b


def _total_cost(net: FlowNetwork, flows) -> Any:
    total = net.zero_cost
    for a, f in zip(net.arcs, flows):
        if f:
            total = total + a.cost * f
    return total


def max_flow(net: FlowNetwork) -> Flow:
    """Shortest-augmenting-path (BFS) maximum flow; integral."""
    res = _Residual(net)
    value = 0
    if net.s == net.t:
        return Flow(0, res.arc_flows(), net.zero_cost)
    while True:
        pred: list[int | None] = [None] * net.n
        seen = [False] * net.n
        seen[net.s] = True
        queue = deque([net.s])
        while queue and not seen[net.t]:
            u = queue.popleft()
            for e in res.adj[u]:
                v = res.to[e]
                if res.cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    pred[v] = e
                    queue.append(v)
        if not seen[net.t]:
            break
        b = res.bottleneck(pred)
        res.augment(pred, b)
        value += b
    flows = res.arc_flows()
    return Flow(value, flows, _total_cost(net, flows))


def min_cost_flow(net: FlowNetwork, target: int) -> Flow:
    """Cheapest integral flow of value exactly ``target``.

    Successive shortest paths with node potentials; costs are non-negative
    so the initial potentials are zero. Raises :class:`InfeasibleFlowError`
    carrying the largest achievable value when ``target`` cannot be met.
    """
    if target < 1:
        raise ValueError("target flow value must be >= 1")
    res = _Residual(net)
    zero = net.zero_cost
    pot = [zero] * net.n
    value = 0
    while value < target:
        dist: list = [None] * net.n
        pred: list[int | None] = [None] * net.n
        dist[net.s] = zero
        heap = [(zero, net.s)]
        done = [False] * net.n
        while heap:
            du, u = heapq.heappop(heap)
            if done[u]:
                continue
            done[u] = True
            for e in res.adj[u]:
                if res.cap[e] <= 0:
                    continue
                v = res.to[e]
                nd = du + res.cost[e] + pot[u] - pot[v]
                if dist[v] is None or nd < dist[v]:
                    dist[v] = nd
                    pred[v] = e
                    heapq.heappush(heap, (nd, v))
        if dist[net.t] is None:
            raise InfeasibleFlowError(target, value)
        cap_t = dist[net.t]
        for v in range(net.n):
            if dist[v] is None or cap_t < dist[v]:
                pot[v] = pot[v] + cap_t
            else:
                pot[v] = pot[v] + dist[v]
        b = min(res.bottleneck(pred), target - value)
        res.augment(pred, b)
        value += b
    flows = res.arc_flows()
    return Flow(value, flows, _total_cost(net, flows))


class DecompositionError(ValueError):
    pass


def decompose(net: FlowNetwork, f: Flow) -> list[list[int]]:
    """Split ``f`` into ``f.value`` s-t paths given as lists of arc indices.

    A path carrying k units is listed k times. Per-arc usage over the
    returned paths equals ``f.arc_flow`` exactly.
    """
    if len(f.arc_flow) != len(net.arcs):
        raise DecompositionError("flow vector does not match network")
    balance = [0] * net.n
    for a, x in zip(net.arcs, f.arc_flow):
        if x < 0 or x > a.capacity:
            raise DecompositionError(f"flow {x} outside [0, {a.capacity}] on {a}")
        balance[a.tail] -= x
        balance[a.head] += x
    for v in range(net.n):
        if v not in (net.s, net.t) and balance[v] != 0:
            raise DecompositionError(f"flow not conserved at node {v}")
    if net.s != net.t and -balance[net.s] != f.value:
        raise DecompositionError(f"net outflow {-balance[net.s]} at source != value {f.value}")
    left = list(f.arc_flow)
    paths = []
    for _ in range(f.value):
        u, path = net.s, []
        while u != net.t:
            for i in net.out_arcs[u]:
                if left[i] > 0:
                    break
            else:
                raise DecompositionError(f"flow stranded at node {u}")
            path.append(i)
            left[i] -= 1
            u = net.arcs[i].head
            if len(path) > len(net.arcs):
                raise DecompositionError("flow contains a cycle")
        paths.append(path)
    if any(left):
        raise DecompositionError("flow contains a circulation")
    return paths

"""Partially disjoint exact shortest paths via flow networks on the shortest-path DAG.

Four network variants are supported:

* ``n1``: unit capacity everywhere; max flow = max number of arc-disjoint
  shortest paths.
* ``n2``: unit capacity on sensitive arcs only; max flow = max number of
  shortest paths pairwise disjoint on the sensitive set.
* ``n3``: ``n2`` plus one cost-1 gadget per sensitive arc, letting it carry
  a second path; min-cost flow of value r minimizes the number of
  sensitive arcs used twice.
* ``n4``: gadgets at every level 2..r with strictly prioritized costs;
  min-cost flow of value r minimizes the overload vector lexicographically
  (heaviest overload level first).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Sequence

from .flow import FlowArc, FlowNetwork, LexCost, decompose, max_flow, min_cost_flow
from .graph import Path, SensitiveSet, WeightVector
from .shortest import make_path
from .spdag import ShortestPathDag

SOLUTION_VERSION = 1


class Variant(enum.Enum):
    N1 = "n1"
    N2 = "n2"
    N3 = "n3"
    N4 = "n4"


class CostBase(enum.Enum):
    STRICT = "strict"  # (|S|+1)^(i-2): one level-i overload outweighs all level-(i-1) ones
    PAPER = "paper"    # |S|^(i-2); also strict, as an overload pays every lower level too


class CostMode(enum.Enum):
    BIGINT = "bigint"
    LEX = "lex"


@dataclass
class DisjointSolution:
    variant: Variant
    r: int
    paths: list[Path]
    sensitive: SensitiveSet | None
    overload_profile: dict = field(default_factory=dict)
    objective: Any = None
    cost: Any = 0
    unbounded: bool = False

    def to_json(self) -> dict:
        prof = []
        for member, count in sorted(self.overload_profile.items()):
            if isinstance(member, tuple):
                prof.append({"edge": [member[0] + 1, member[1] + 1], "count": count})
            else:
                prof.append({"node": member + 1, "count": count})
        obj = list(self.objective) if isinstance(self.objective, tuple) else self.objective
        cost = list(self.cost) if isinstance(self.cost, tuple) else str(self.cost)
        out = {
            "version": SOLUTION_VERSION,
            "variant": self.variant.value,
            "r": self.r,
            "objective": obj,
            "cost": cost,
            "paths": [[v + 1 for v in p.nodes] for p in self.paths],
            "overload_profile": prof,
        }
        if self.variant is Variant.N2:
            out["unbounded"] = self.unbounded
        if self.variant is Variant.N4:
            out["objective_levels"] = list(range(self.r, 1, -1))
        return out


def _dag_arc(dag: ShortestPathDag, u: int, v: int) -> tuple[int, int]:
    if (u, v) in dag.arc_set:
        return (u, v)
    if not dag.graph.directed and (v, u) in dag.arc_set:
        return (v, u)
    raise ValueError(f"sensitive edge ({u + 1}, {v + 1}) is not in the shortest-path subgraph")


def resolve_sensitive(dag: ShortestPathDag, S: SensitiveSet) -> SensitiveSet:
    """Check membership and orient undirected sensitive edges as in the DAG."""
    if S.kind == "edges":
        return SensitiveSet.edges(_dag_arc(dag, u, v) for u, v in S.members)
    for v in S.members:
        if v in (dag.s, dag.t):
            raise ValueError("terminals cannot be sensitive nodes")
        if v not in dag.dist_from_s:
            raise ValueError(f"sensitive node {v + 1} is not in the shortest-path subgraph")
    return S


def reduce_sensitive_nodes(dag: ShortestPathDag, nodes) -> tuple[ShortestPathDag, SensitiveSet]:
    """Split each sensitive node v into v -> v_out joined by a zero-length arc.

    Incoming arcs stay on ``v``, outgoing ones move to ``v_out``; the new
    arc is the sensitive edge standing for ``v``.
    """
    nodes = sorted(resolve_sensitive(dag, SensitiveSet.nodes(nodes)).members)
    out_of = {v: dag.n + k for k, v in enumerate(nodes)}
    zero = WeightVector.zero(dag.graph.d)
    arcs = [(out_of.get(u, u), v, w) for u, v, w in dag.arcs]
    arcs += [(v, out_of[v], zero) for v in nodes]
    arcs.sort(key=lambda a: (a[0], a[1]))
    dist_s = dict(dag.dist_from_s)
    dist_t = dict(dag.dist_to_t)
    for v, vo in out_of.items():
        dist_s[vo] = dist_s[v]
        dist_t[vo] = dist_t[v]
    merged = dict(dag.merged)
    merged.update({vo: v for v, vo in out_of.items()})
    split = ShortestPathDag(
        graph=dag.graph, s=dag.s, t=dag.t, n=dag.n + len(nodes), arcs=tuple(arcs),
        dist_from_s=dist_s, dist_to_t=dist_t, merged=merged,
    )
    return split, SensitiveSet.edges((v, out_of[v]) for v in nodes)


def _avoids_sensitive(dag: ShortestPathDag, S: SensitiveSet) -> bool:
    """Is there an s-t path in the DAG using no sensitive arc?"""
    seen, stack = {dag.s}, [dag.s]
    while stack:
        u = stack.pop()
        if u == dag.t:
            return True
        for v, _ in dag.succ[u]:
            if (u, v) not in S.members and v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def build_network(dag: ShortestPathDag, variant: Variant, S: SensitiveSet | None = None,
                  r: int | None = None, cost_base: CostBase = CostBase.STRICT,
                  cost_mode: CostMode = CostMode.BIGINT) -> FlowNetwork:
    """Flow network of the requested variant over an edge-sensitive DAG.

    "Infinite" capacities become ``r`` when given, otherwise ``|S| + 1``
    (enough to tell whether the sensitive arcs bound the flow at all).
    """
    variant = Variant(variant)
    cost_base, cost_mode = CostBase(cost_base), CostMode(cost_mode)
    if variant is not Variant.N1:
        if S is None:
            raise ValueError(f"variant {variant.value} needs a sensitive set")
        if S.kind != "edges":
            raise ValueError("node-sensitive sets must be reduced first (see reduce_sensitive_nodes)")
        S = resolve_sensitive(dag, S)
    if variant in (Variant.N3, Variant.N4) and r is None:
        raise ValueError(f"variant {variant.value} needs r")
    if r is not None and r < 1:
        raise ValueError("r must be >= 1")

    levels = {Variant.N1: 1, Variant.N2: 1, Variant.N3: 2, Variant.N4: r or 1}[variant]
    if cost_mode is CostMode.LEX:
        width = max(levels - 1, 1)
        zero = LexCost.zero(width)

        def level_cost(i: int):
            return LexCost.unit(width, levels - i)
    else:
        zero = 0
        size = len(S) if S is not None else 0
        base = size + 1 if cost_base is CostBase.STRICT else max(size, 1)

        def level_cost(i: int):
            return base ** (i - 2)

    if variant is Variant.N1:
        return FlowNetwork(
            dag.n, tuple(FlowArc(u, v, 1, zero, (u, v), 1) for u, v, _ in dag.arcs),
            dag.s, dag.t, zero)

    big = r if r is not None else len(S) + 1
    arcs = []
    gadgets: dict[int, tuple[tuple[int, int], int]] = {}
    next_id = dag.n
    for u, v, _ in dag.arcs:
        sensitive = (u, v) in S.members
        arcs.append(FlowArc(u, v, 1 if sensitive else big, zero, (u, v), 1))
        if not sensitive:
            continue
        for i in range(2, levels + 1):
            x = next_id
            next_id += 1
            gadgets[x] = ((u, v), i)
            c = level_cost(i)
            arcs.append(FlowArc(u, x, 1, c, (u, v), i))
            arcs.append(FlowArc(x, v, 1, zero, (u, v), i))
    arcs.sort(key=lambda a: (a.tail, a.head, a.level))
    return FlowNetwork(next_id, tuple(arcs), dag.s, dag.t, zero, gadgets)


def overload_profile(paths: Sequence[Path], S: SensitiveSet) -> dict:
    """Number of paths through each sensitive member (zeros included)."""
    use: Counter = Counter()
    for p in paths:
        if S.kind == "edges":
            here = set(p.arcs())
            if not p.directed:
                here |= {(v, u) for u, v in here}
        else:
            here = set(p.nodes)
        for m in S.members:
            if m in here:
                use[m] += 1
    return {m: use[m] for m in S.sorted_members()}


def overload_vector(profile: dict, r: int) -> tuple[int, ...]:
    """Members carrying at least i paths, for i = r down to 2."""
    return tuple(sum(1 for c in profile.values() if c >= i) for i in range(r, 1, -1))


def _net_paths_to_nodes(net: FlowNetwork, arc_paths) -> list[tuple[int, ...]]:
    seqs = []
    for ap in arc_paths:
        seq = [net.s]
        for i in ap:
            h = net.arcs[i].head
            if h not in net.gadget_nodes:
                seq.append(h)
        seqs.append(tuple(seq))
    return seqs


def solve(dag: ShortestPathDag, variant: Variant, S: SensitiveSet | None = None,
          r: int | None = None, cost_base: CostBase = CostBase.STRICT,
          cost_mode: CostMode = CostMode.BIGINT) -> DisjointSolution:
    """Run one variant and map the decomposed flow back to shortest paths.

    Raises :class:`~pdksp.flow.InfeasibleFlowError` when fewer than ``r``
    paths fit (n3/n4).
    """
    variant = Variant(variant)
    work, S_edges = dag, S
    if S is not None and S.kind == "nodes":
        S = resolve_sensitive(dag, S)
        work, S_edges = reduce_sensitive_nodes(dag, S.members)
    elif S is not None:
        S = S_edges = resolve_sensitive(dag, S)

    net = build_network(work, variant, S_edges, r, cost_base, cost_mode)
    if variant in (Variant.N1, Variant.N2):
        f = max_flow(net)
    else:
        f = min_cost_flow(net, r)
    seqs = [work.original_nodes(seq) for seq in _net_paths_to_nodes(net, decompose(net, f))]
    paths = [make_path(dag.graph, seq) for seq in seqs]

    profile = overload_profile(paths, S) if variant is not Variant.N1 else {}
    sol = DisjointSolution(variant, f.value, paths, S, profile, cost=f.cost)
    if variant in (Variant.N1, Variant.N2):
        sol.objective = f.value
        if variant is Variant.N2:
            sol.unbounded = _avoids_sensitive(work, S_edges)
    elif variant is Variant.N3:
        sol.objective = sum(1 for c in profile.values() if c >= 2)
    else:
        sol.objective = overload_vector(profile, r)
    return sol

"""Brute-force reference answers for small instances.

Nothing here shares code with the solvers beyond the graph data model:
paths come from plain DFS, optima from exhaustive subset or multiset
search.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .graph import Path, SensitiveSet, WeightedGraph, WeightVector


class BudgetExceeded(RuntimeError):
    pass


class OracleInfeasible(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_nodes: int = 14
    max_paths: int = 20000
    max_subsets: int = 2_000_000

    def __post_init__(self):
        if min(self.max_nodes, self.max_paths, self.max_subsets) <= 0:
            raise ValueError("budget caps must be positive")


DEFAULT_BUDGET = OracleBudget()


def _dfs_paths(g: WeightedGraph, s: int, t: int, budget: OracleBudget) -> list[Path]:
    if g.n > budget.max_nodes:
        raise BudgetExceeded(f"{g.n} nodes > {budget.max_nodes}")
    found: list[Path] = []
    seq = [s]
    on = {s}

    def walk(u: int, length: WeightVector) -> None:
        if u == t:
            found.append(Path(tuple(seq), length, g.directed))
            if len(found) > budget.max_paths:
                raise BudgetExceeded(f"more than {budget.max_paths} paths")
            return
        for v, w in g.out_neighbors(u):
            if v not in on:
                seq.append(v)
                on.add(v)
                walk(v, length + w)
                on.discard(v)
                seq.pop()

    walk(s, WeightVector.zero(g.d))
    return found


def enum_paths_ordered(g: WeightedGraph, s: int, t: int,
                       budget: OracleBudget = DEFAULT_BUDGET) -> list[Path]:
    """Every simple s-t path sorted by (length, node sequence)."""
    if s == t:
        raise ValueError("source and target must differ")
    return sorted(_dfs_paths(g, s, t, budget), key=lambda p: (p.length, p.nodes))


def enum_shortest_paths(g: WeightedGraph, s: int, t: int,
                        budget: OracleBudget = DEFAULT_BUDGET) -> list[Path]:
    paths = enum_paths_ordered(g, s, t, budget)
    if not paths:
        return []
    best = paths[0].length
    return [p for p in paths if p.length == best]


def shortest_distance(g: WeightedGraph, u: int, v: int,
                      budget: OracleBudget = DEFAULT_BUDGET) -> WeightVector | None:
    if u == v:
        return WeightVector.zero(g.d)
    paths = enum_paths_ordered(g, u, v, budget)
    return paths[0].length if paths else None


def _usage(path: Path, S: SensitiveSet, g: WeightedGraph) -> set:
    if S.kind == "nodes":
        return set(path.nodes) & S.members
    keys = {g.edge_key(u, v) for u, v in path.arcs()}
    return keys & {g.edge_key(u, v) for u, v in S.members}


@dataclass(frozen=True)
class OracleResult:
    objective: object
    witness: tuple[Path, ...]
    unbounded: bool = False


def _max_compatible(items: Sequence[frozenset], budget: OracleBudget) -> tuple[int, ...]:
    """Largest index set whose members are pairwise disjoint (plain backtracking)."""
    best: tuple[int, ...] = ()
    visited = 0

    def grow(chosen: list[int], used: frozenset, start: int) -> None:
        nonlocal best, visited
        visited += 1
        if visited > budget.max_subsets:
            raise BudgetExceeded(f"more than {budget.max_subsets} subsets")
        if len(chosen) > len(best):
            best = tuple(chosen)
        for i in range(start, len(items)):
            if not (items[i] & used):
                chosen.append(i)
                grow(chosen, used | items[i], i + 1)
                chosen.pop()

    grow([], frozenset(), 0)
    return best


def brute_force_best_set(g: WeightedGraph, s: int, t: int, variant: str,
                         S: SensitiveSet | None = None, r: int | None = None,
                         budget: OracleBudget = DEFAULT_BUDGET) -> OracleResult:
    """Exact optimum over sets (n1, n2) or r-multisets (n3, n4) of shortest paths.

    n1/n2 objective: the largest number of paths pairwise disjoint on all
    edges (n1) or on S (n2); n2 is unbounded when a shortest path avoids S.
    n3: fewest S-members used twice, none used thrice. n4: lexicographically
    least vector of "members used at least i times" for i = r..2.
    """
    variant = getattr(variant, "value", variant)
    paths = enum_shortest_paths(g, s, t, budget)
    if not paths:
        raise OracleInfeasible("t unreachable from s")
    if variant == "n1":
        items = [frozenset(g.edge_key(u, v) for u, v in p.arcs()) for p in paths]
        best = _max_compatible(items, budget)
        return OracleResult(len(best), tuple(paths[i] for i in best))
    if S is None:
        raise ValueError(f"{variant} needs a sensitive set")
    uses = [frozenset(_usage(p, S, g)) for p in paths]
    if variant == "n2":
        free = [i for i, u in enumerate(uses) if not u]
        if free:
            return OracleResult(None, (paths[free[0]],), unbounded=True)
        best = _max_compatible(uses, budget)
        return OracleResult(len(best), tuple(paths[i] for i in best))
    if variant not in ("n3", "n4"):
        raise ValueError(f"unknown variant {variant!r}")
    if r is None or r < 1:
        raise ValueError("r must be >= 1")
    total = math.comb(len(paths) + r - 1, r)
    if total > budget.max_subsets:
        raise BudgetExceeded(f"{total} multisets > {budget.max_subsets}")
    best_key, best_pick = None, None
    for pick in itertools.combinations_with_replacement(range(len(paths)), r):
        counts: dict = {}
        for i in pick:
            for m in uses[i]:
                counts[m] = counts.get(m, 0) + 1
        if variant == "n3":
            if any(c > 2 for c in counts.values()):
                continue
            key = sum(1 for c in counts.values() if c == 2)
        else:
            key = tuple(sum(1 for c in counts.values() if c >= i) for i in range(r, 1, -1))
        if best_key is None or key < best_key:
            best_key, best_pick = key, pick
    if best_key is None:
        raise OracleInfeasible(f"no {r} shortest paths keep every sensitive member below 3 uses")
    return OracleResult(best_key, tuple(paths[i] for i in best_pick))


# --- flow-network references -------------------------------------------------

def min_cut_value(n: int, arcs: Sequence[tuple[int, int, int]], s: int, t: int) -> int:
    """Minimum s-t cut capacity by trying every vertex bipartition."""
    others = [v for v in range(n) if v not in (s, t)]
    best = None
    for k in range(len(others) + 1):
        for side in itertools.combinations(others, k):
            src = set(side) | {s}
            cut = sum(c for u, v, c in arcs if u in src and v not in src)
            if best is None or cut < best:
                best = cut
    return best


def _network_paths(n: int, arcs: Sequence[tuple], s: int, t: int) -> list[tuple[int, ...]]:
    out: list[list[int]] = [[] for _ in range(n)]
    for i, a in enumerate(arcs):
        out[a[0]].append(i)
    found = []

    def walk(u: int, used: list[int], seen: set) -> None:
        if u == t:
            found.append(tuple(used))
            return
        for i in out[u]:
            v = arcs[i][1]
            if v not in seen:
                used.append(i)
                seen.add(v)
                walk(v, used, seen)
                seen.discard(v)
                used.pop()

    walk(s, [], {s})
    return found


def brute_force_min_cost(n: int, arcs: Sequence[tuple], s: int, t: int, r: int,
                         zero=0, budget: OracleBudget = DEFAULT_BUDGET):
    """Cheapest r-multiset of s-t arc-paths within capacities.

    ``arcs`` holds ``(tail, head, capacity, cost)``. Returns ``None`` when no
    multiset fits.
    """
    paths = _network_paths(n, arcs, s, t)
    total = math.comb(len(paths) + r - 1, r) if paths else 0
    if total > budget.max_subsets:
        raise BudgetExceeded(f"{total} multisets > {budget.max_subsets}")
    best = None
    for pick in itertools.combinations_with_replacement(range(len(paths)), r):
        load = [0] * len(arcs)
        for i in pick:
            for a in paths[i]:
                load[a] += 1
        if any(load[k] > arcs[k][2] for k in range(len(arcs))):
            continue
        cost = zero
        for k, x in enumerate(load):
            if x:
                cost = cost + arcs[k][3] * x
        if best is None or cost < best:
            best = cost
    return best

"""Adversarial instance families and seeded random graphs.

Standalone families put the source at node 0 and the target at node n-1.

``example1a``
    ``qbar`` towers in series. Tower i joins junction i-1 to junction i
    through ``tower_width`` two-edge pairs; pair j costs ``2 + j *
    tower_width**(i-1)``, so path lengths count in base ``tower_width`` and
    the cheapest ``tower_width**q`` paths only vary the first q towers.
``example1b``
    ``n_prime`` diamonds in series, each with a short (1+1) and a long
    (1+2) branch.
``example2``
    A graph with a unique shortest path whose node v is split into v', v''
    and bridged by a small complete graph (or a scaled copy of example 1).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .graph import Arc, Path, WeightedGraph, WeightVector, check_graph
from .shortest import PathStream


def gen_example1a(qbar: int, tower_width: int, directed: bool = False) -> WeightedGraph:
    if qbar < 1 or tower_width < 2:
        raise ValueError("example1a needs qbar >= 1 and tower_width >= 2")
    edges = []
    junction = 0
    for i in range(1, qbar + 1):
        step = tower_width ** (i - 1)
        nxt = junction + tower_width + 1
        for j in range(tower_width):
            mid = junction + 1 + j
            first, second = (1, 1) if j == 0 else (j * step, 2)
            edges.append((junction, mid, first))
            edges.append((mid, nxt, second))
        junction = nxt
    return check_graph(WeightedGraph.from_edges(junction + 1, edges, directed))


def gen_example1b(n_prime: int, directed: bool = False) -> WeightedGraph:
    if n_prime < 1:
        raise ValueError("example1b needs n_prime >= 1")
    edges = []
    junction = 0
    for _ in range(n_prime):
        short, long_, nxt = junction + 1, junction + 2, junction + 3
        edges += [(junction, short, 1), (short, nxt, 1), (junction, long_, 1), (long_, nxt, 2)]
        junction = nxt
    return check_graph(WeightedGraph.from_edges(junction + 1, edges, directed))


def gen_example2_boundary(qbar: int) -> WeightedGraph:
    """Degenerate s = t case: complete graph on qbar + 1 vertices, unit weights."""
    if qbar < 1:
        raise ValueError("qbar must be >= 1")
    n = qbar + 1
    edges = [(u, v, 1) for u, v in itertools.combinations(range(n), 2)]
    return WeightedGraph.from_edges(n, edges, directed=False)


@dataclass(frozen=True)
class Example2:
    graph: WeightedGraph
    s: int
    t: int
    v_in: int
    v_out: int
    epsilon: WeightVector
    shortest_before: Path
    second_before: Path


def _longest_total(g: WeightedGraph) -> Fraction:
    # upper bound on any simple path length in a 1-criterion gadget
    return sum(a.weight[0] for a in g.arcs)


def build_example2(base: WeightedGraph, s: int, t: int, v: int, qbar: int,
                   insert: str = "clique", tower_width: int = 2) -> Example2:
    """Split ``v`` on the unique shortest s-t path and bridge the halves.

    ``insert`` picks the bridge: ``clique`` (complete graph on v', v'' and
    ``qbar`` new nodes, every edge weighing epsilon), ``example1a`` or
    ``example1b`` (that family with ``qbar`` towers/diamonds, weights
    scaled so every bridge path is at most epsilon long).
    """
    if qbar < 1:
        raise ValueError("qbar must be >= 1")
    stream = PathStream(base, s, t)
    best, second = stream.next_path(), stream.next_path()
    if best is None or second is None:
        raise ValueError("base graph needs at least two s-t paths")
    if second.length == best.length:
        raise ValueError("base graph's shortest s-t path is not unique")
    if v not in best.nodes[1:-1]:
        raise ValueError(f"node {v + 1} is not an intermediate node of the shortest path")
    pred = best.nodes[best.nodes.index(v) - 1]
    eps = (second.length - best.length).scaled(Fraction(1, qbar + 2))
    if not eps.is_positive():
        raise ValueError(f"epsilon {eps} has a non-positive component")

    v_out = base.n
    arcs = []
    for a in base.arcs:
        on_p1 = (a.tail, a.head) == (pred, v) or (not base.directed and (a.tail, a.head) == (v, pred))
        if on_p1:
            arcs.append(a)
            continue
        arcs.append(Arc(v_out if a.tail == v else a.tail, v_out if a.head == v else a.head, a.weight))

    if insert == "clique":
        ids = [v, v_out] + [base.n + 1 + k for k in range(qbar)]
        n = base.n + 1 + qbar
        for x, y in itertools.combinations(ids, 2):
            arcs.append(Arc(x, y, eps))
            if base.directed:
                arcs.append(Arc(y, x, eps))
    elif insert in ("example1a", "example1b"):
        gadget = (gen_example1a(qbar, tower_width, base.directed) if insert == "example1a"
                  else gen_example1b(qbar, base.directed))
        scale = eps.scaled(1 / _longest_total(gadget))
        last = gadget.n - 1
        remap = {0: v, last: v_out}
        for k in range(1, last):
            remap[k] = base.n + k
        n = base.n + gadget.n - 1
        for a in gadget.arcs:
            arcs.append(Arc(remap[a.tail], remap[a.head], scale.scaled(a.weight[0])))
    else:
        raise ValueError(f"unknown insert {insert!r}")

    g = check_graph(WeightedGraph(base.directed, n, tuple(arcs), base.d))
    return Example2(g, s, t, v, v_out, eps, best, second)


def gen_example2(base: WeightedGraph, s: int, t: int, v: int, qbar: int,
                 insert: str = "clique", tower_width: int = 2) -> WeightedGraph:
    return build_example2(base, s, t, v, qbar, insert, tower_width).graph


def example2_prefix_count(qbar: int, q: int) -> int:
    """Number of near-shortest paths whose bridge has at most q inner nodes."""
    total = 1
    for i in range(1, q + 1):
        prod = 1
        for j in range(i):
            prod *= qbar - j
        total += prod
    return total


def gen_random(nodes: int, density: float | str, weight_range: tuple[int, int], seed: int,
               directed: bool = False) -> WeightedGraph:
    """Connected simple graph with integer weights, fixed by ``seed``.

    ``density`` is the fraction of all node pairs that become edges
    (``"max"`` means 1). For directed graphs every node is reachable from
    node 0.
    """
    if density == "max":
        density = 1.0
    if nodes < 1:
        raise ValueError("need at least one node")
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]")
    lo, hi = weight_range
    if not 1 <= lo <= hi:
        raise ValueError("weight range must satisfy 1 <= lo <= hi")
    pairs = nodes * (nodes - 1) if directed else nodes * (nodes - 1) // 2
    m = round(density * pairs)
    if m < nodes - 1:
        raise ValueError(f"density {density} gives {m} edges; a connected graph needs {nodes - 1}")
    rng = random.Random(seed)
    order = [0] + rng.sample(range(1, nodes), nodes - 1)
    chosen = set()
    for i in range(1, nodes):
        parent = order[rng.randrange(i)]
        child = order[i]
        chosen.add((parent, child) if directed else (min(parent, child), max(parent, child)))
    if directed:
        rest = [(u, v) for u in range(nodes) for v in range(nodes) if u != v and (u, v) not in chosen]
    else:
        rest = [p for p in itertools.combinations(range(nodes), 2) if p not in chosen]
    chosen.update(rng.sample(rest, m - len(chosen)))
    edges = [(u, v, rng.randint(lo, hi)) for u, v in sorted(chosen)]
    if not edges:
        return WeightedGraph(directed, nodes, (), 1)
    return check_graph(WeightedGraph.from_edges(nodes, edges, directed))


@dataclass(frozen=True)
class CorpusInstance:
    name: str
    graph: WeightedGraph
    s: int
    t: int
    seed: int


def random_corpus(count: int, seed: int, min_nodes: int = 2, max_nodes: int = 10,
                  max_extra: float = 1.0, weight_ranges=((1, 1), (1, 2), (1, 3), (1, 10)),
                  directed_share: float = 0.5) -> Iterator[CorpusInstance]:
    """Deterministic stream of small random instances with s = 0, t = n-1.

    ``max_extra`` caps the edges beyond a spanning tree at ``max_extra * n``
    so that the number of simple paths stays enumerable.
    """
    rng = random.Random(seed)
    for k in range(count):
        n = rng.randint(min_nodes, max_nodes)
        directed = rng.random() < directed_share
        pairs = n * (n - 1) if directed else n * (n - 1) // 2
        extra = rng.randint(0, min(pairs - (n - 1), int(max_extra * n)))
        density = (n - 1 + extra) / pairs if pairs else 1.0
        wr = rng.choice(weight_ranges)
        sub = rng.randrange(2**32)
        g = gen_random(n, density, wr, sub, directed)
        yield CorpusInstance(f"random-{seed}-{k}", g, 0, n - 1, sub)


@dataclass(frozen=True)
class GeneratorSpec:
    """Family name plus parameters; ``build`` produces the graph."""

    family: str
    params: dict = field(default_factory=dict)

    def build(self) -> WeightedGraph:
        p = self.params
        if self.family == "example1a":
            return gen_example1a(p["qbar"], p["tower_width"], p.get("directed", False))
        if self.family == "example1b":
            return gen_example1b(p["n_prime"], p.get("directed", False))
        if self.family == "example2-boundary":
            return gen_example2_boundary(p["qbar"])
        if self.family == "example2":
            return gen_example2(p["base"], p["s"], p["t"], p["v"], p["qbar"],
                                p.get("insert", "clique"), p.get("tower_width", 2))
        if self.family == "random":
            return gen_random(p["nodes"], p["density"], tuple(p["weight_range"]), p["seed"],
                              p.get("directed", False))
        raise ValueError(f"unknown family {self.family!r}")

    def provenance(self) -> str:
        parts = [f"family={self.family}"]
        for k in sorted(self.params):
            val = self.params[k]
            if isinstance(val, WeightedGraph):
                continue
            parts.append(f"{k}={val}")
        return "provenance " + " ".join(parts)

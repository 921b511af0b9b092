"""Core graph model: exact multi-criteria weights, simple graphs, paths."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence


class WeightVector(tuple):
    """Tuple of exact rationals compared lexicographically.

    ``+`` and ``-`` act componentwise (unlike plain tuples). Ordering is the
    inherited tuple order, so the first criterion dominates all later ones.
    Integral components are kept as plain ints, which compare and hash
    like the equal Fraction but add far faster.
    """

    __slots__ = ()

    def __new__(cls, components: Iterable = ()):
        return super().__new__(cls, (_exact(c) for c in components))

    @classmethod
    def zero(cls, d: int) -> "WeightVector":
        return cls((0,) * d)

    @property
    def d(self) -> int:
        return len(self)

    def __add__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        _check_dims(self, other)
        return tuple.__new__(WeightVector, [_exact(a + b) for a, b in zip(self, other)])

    def __radd__(self, other):
        # lets sum() start from the int 0
        if other == 0:
            return self
        return NotImplemented

    def __sub__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        _check_dims(self, other)
        return tuple.__new__(WeightVector, [_exact(a - b) for a, b in zip(self, other)])

    def __neg__(self):
        return WeightVector(-a for a in self)

    def scaled(self, factor) -> "WeightVector":
        return WeightVector(a * factor for a in self)

    def is_positive(self) -> bool:
        """True when every component is > 0 (required of edge weights)."""
        return all(c > 0 for c in self)

    def __repr__(self) -> str:
        return f"WeightVector({', '.join(format_rational(c) for c in self)})"

    def __str__(self) -> str:
        if len(self) == 1:
            return format_rational(self[0])
        return "(" + ", ".join(format_rational(c) for c in self) + ")"

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self]


def _exact(c):
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise ValueError(f"weight dimension mismatch: {len(a)} vs {len(b)}")


def compare_lengths(a: WeightVector, b: WeightVector) -> int:
    """Three-way lexicographic comparison: -1 (less), 0 (equal), 1 (greater)."""
    _check_dims(a, b)
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    weight: WeightVector


@dataclass(frozen=True)
class Violation:
    kind: str  # self-loop | parallel-edge | non-positive-weight | node-out-of-range | dimension-mismatch
    arc_index: int
    message: str


class GraphValidationError(ValueError):
    def __init__(self, violations: Sequence[Violation], context: str = ""):
        self.violations = list(violations)
        lines = [v.message for v in self.violations]
        head = f"{context}: " if context else ""
        super().__init__(head + "; ".join(lines))


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Simple directed or undirected graph with positive weight vectors.

    Nodes are ``0..n-1``. Undirected edges are stored once and expanded to
    both orientations by the adjacency helpers.
    """

    directed: bool
    n: int
    arcs: tuple[Arc, ...]
    d: int = 1
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple], directed: bool = True,
                   labels: Sequence[str] | None = None) -> "WeightedGraph":
        """Build from ``(tail, head, weight)`` triples; a bare number is a 1-criterion weight."""
        arcs = []
        for tail, head, w in edges:
            if not isinstance(w, (tuple, list)):
                w = (w,)
            arcs.append(Arc(tail, head, WeightVector(w)))
        d = len(arcs[0].weight) if arcs else 1
        return cls(directed, n, tuple(arcs), d, tuple(labels) if labels else None)

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def _out(self) -> tuple[tuple[tuple[int, WeightVector], ...], ...]:
        adj: list[list] = [[] for _ in range(self.n)]
        for a in self.arcs:
            adj[a.tail].append((a.head, a.weight))
            if not self.directed:
                adj[a.head].append((a.tail, a.weight))
        return tuple(tuple(sorted(row, key=lambda x: x[0])) for row in adj)

    @cached_property
    def _in(self) -> tuple[tuple[tuple[int, WeightVector], ...], ...]:
        if not self.directed:
            return self._out
        adj: list[list] = [[] for _ in range(self.n)]
        for a in self.arcs:
            adj[a.head].append((a.tail, a.weight))
        return tuple(tuple(sorted(row, key=lambda x: x[0])) for row in adj)

    @cached_property
    def _weights(self) -> dict[tuple[int, int], WeightVector]:
        table = {}
        for a in self.arcs:
            table[(a.tail, a.head)] = a.weight
            if not self.directed:
                table[(a.head, a.tail)] = a.weight
        return table

    def out_neighbors(self, u: int) -> tuple[tuple[int, WeightVector], ...]:
        """``(v, w(u, v))`` pairs sorted by ``v``."""
        return self._out[u]

    def in_neighbors(self, v: int) -> tuple[tuple[int, WeightVector], ...]:
        return self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._weights

    def weight(self, u: int, v: int) -> WeightVector:
        try:
            return self._weights[(u, v)]
        except KeyError:
            raise KeyError(f"no arc ({u}, {v})") from None

    def oriented_arcs(self) -> list[tuple[int, int, WeightVector]]:
        """Every usable orientation; undirected edges appear twice."""
        out = []
        for a in self.arcs:
            out.append((a.tail, a.head, a.weight))
            if not self.directed:
                out.append((a.head, a.tail, a.weight))
        return out

    def edge_key(self, u: int, v: int) -> tuple[int, int]:
        """Identity of the edge traversed from ``u`` to ``v``."""
        if self.directed or u < v:
            return (u, v)
        return (v, u)

    def canonical(self) -> "WeightedGraph":
        """Same graph with arcs sorted by (tail, head); undirected edges get tail < head."""
        arcs = []
        for a in self.arcs:
            if not self.directed and a.tail > a.head:
                a = Arc(a.head, a.tail, a.weight)
            arcs.append(a)
        arcs.sort(key=lambda a: (a.tail, a.head))
        return WeightedGraph(self.directed, self.n, tuple(arcs), self.d, self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (self.directed, self.n, self.arcs, self.d, self.labels) == (
            other.directed, other.n, other.arcs, other.d, other.labels)

    def __hash__(self) -> int:
        return hash((self.directed, self.n, self.arcs, self.d))


def validate_graph(g: WeightedGraph) -> list[Violation]:
    """Return every broken invariant; an empty list means the graph is valid."""
    problems: list[Violation] = []
    seen: dict[tuple[int, int], int] = {}
    for i, a in enumerate(g.arcs):
        where = f"arc #{i} ({a.tail + 1}, {a.head + 1})"
        if not (0 <= a.tail < g.n and 0 <= a.head < g.n):
            problems.append(Violation("node-out-of-range", i, f"{where}: node id outside 1..{g.n}"))
            continue
        if a.tail == a.head:
            problems.append(Violation("self-loop", i, f"{where}: self loop"))
        key = g.edge_key(a.tail, a.head)
        if key in seen:
            problems.append(Violation(
                "parallel-edge", i, f"{where}: parallel to arc #{seen[key]}"))
        else:
            seen[key] = i
        if len(a.weight) != g.d:
            problems.append(Violation(
                "dimension-mismatch", i, f"{where}: {len(a.weight)} weights, expected {g.d}"))
        elif not a.weight.is_positive():
            problems.append(Violation(
                "non-positive-weight", i, f"{where}: weight {a.weight} is not positive"))
    return problems


def check_graph(g: WeightedGraph) -> WeightedGraph:
    problems = validate_graph(g)
    if problems:
        raise GraphValidationError(problems)
    return g


@dataclass(frozen=True)
class Path:
    """Simple path given by its node sequence and its exact length."""

    nodes: tuple[int, ...]
    length: WeightVector
    directed: bool = True

    @property
    def source(self) -> int:
        return self.nodes[0]

    @property
    def target(self) -> int:
        return self.nodes[-1]

    def arcs(self) -> list[tuple[int, int]]:
        """Oriented consecutive pairs."""
        return list(zip(self.nodes, self.nodes[1:]))

    def edge_set(self) -> frozenset[tuple[int, int]]:
        """Edges as graph identities: ordered pairs if directed, else sorted pairs."""
        if self.directed:
            return frozenset(self.arcs())
        return frozenset((min(u, v), max(u, v)) for u, v in self.arcs())

    def inner_nodes(self) -> frozenset[int]:
        return frozenset(self.nodes[1:-1])

    def sort_key(self) -> tuple:
        return (self.length, self.nodes)

    def __len__(self) -> int:
        return len(self.nodes) - 1


@dataclass(frozen=True)
class SensitiveSet:
    """Distinguished edges (``kind='edges'``) or nodes (``kind='nodes'``)."""

    kind: str
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind not in ("edges", "nodes"):
            raise ValueError(f"unknown sensitive-set kind {self.kind!r}")
        object.__setattr__(self, "members", frozenset(self.members))

    @classmethod
    def edges(cls, pairs: Iterable[tuple[int, int]]) -> "SensitiveSet":
        return cls("edges", frozenset(tuple(p) for p in pairs))

    @classmethod
    def nodes(cls, ids: Iterable[int]) -> "SensitiveSet":
        return cls("nodes", frozenset(ids))

    def sorted_members(self) -> list:
        return sorted(self.members)

    def __len__(self) -> int:
        return len(self.members)

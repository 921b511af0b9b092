"""Pairwise independence measures and the near-shortest pair search."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Path, WeightedGraph
from .shortest import PathStream

REPORT_VERSION = 1

CLAIM1_EDGES, CLAIM1_NODES = 3, 1
CLAIM2_EDGES, CLAIM2_NODES = 4, 2
CONJECTURE_EDGES, CONJECTURE_NODES = 6, 4


class MeasureKind(enum.Enum):
    EDGE_SYMDIFF = "edge-symmetric-difference"
    NODE_SYMDIFF = "node-symmetric-difference"
    EDGE_SETDIFF = "edge-set-difference"
    NODE_SETDIFF = "node-set-difference"

    @property
    def symmetric(self) -> bool:
        return self in (MeasureKind.EDGE_SYMDIFF, MeasureKind.NODE_SYMDIFF)


def measure(p1: Path, p2: Path, kind: MeasureKind) -> int:
    """Size of the (symmetric) difference of two s-t paths.

    Node kinds look at intermediate nodes only. Set-difference kinds are
    directional: they count what ``p1`` has and ``p2`` lacks.
    """
    if (p1.source, p1.target) != (p2.source, p2.target):
        raise ValueError("paths do not share endpoints")
    if kind in (MeasureKind.EDGE_SYMDIFF, MeasureKind.EDGE_SETDIFF):
        a, b = p1.edge_set(), p2.edge_set()
    else:
        a, b = p1.inner_nodes(), p2.inner_nodes()
    if kind.symmetric:
        return len(a ^ b)
    return len(a - b)


def pair_value(p1: Path, p2: Path, kind: MeasureKind) -> int:
    """Measure used for pair search; directional kinds take the larger direction."""
    if kind.symmetric:
        return measure(p1, p2, kind)
    return max(measure(p1, p2, kind), measure(p2, p1, kind))


def best_pair(paths: Sequence[Path], kind: MeasureKind) -> tuple[int, int, int]:
    """Pair ``(i, j, value)`` with ``i < j`` maximizing the measure; smallest (i, j) wins ties."""
    if len(paths) < 2:
        raise ValueError("best_pair needs at least two paths")
    best = (0, 1, pair_value(paths[0], paths[1], kind))
    for i, j in itertools.combinations(range(len(paths)), 2):
        v = pair_value(paths[i], paths[j], kind)
        if v > best[2]:
            best = (i, j, v)
    return best


@dataclass
class ClaimVerdict:
    status: str  # holds | violated | vacuous
    witness: tuple[int, int] | None = None
    edges: int | None = None
    nodes: int | None = None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": list(self.witness) if self.witness else None,
            "edges": self.edges,
            "nodes": self.nodes,
        }


@dataclass
class DiversityReport:
    prefix_size: int
    paths: list[Path]
    best_pairs: dict[MeasureKind, tuple[int, int, int]] = field(default_factory=dict)
    claim1: ClaimVerdict = field(default_factory=lambda: ClaimVerdict("vacuous"))
    claim2: ClaimVerdict = field(default_factory=lambda: ClaimVerdict("vacuous"))
    conjecture: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "prefix_size": self.prefix_size,
            "paths_found": len(self.paths),
            "paths": [[v + 1 for v in p.nodes] for p in self.paths],
            "lengths": [p.length.to_json() for p in self.paths],
            "best_pairs": {
                k.value: {"i": i, "j": j, "value": v}
                for k, (i, j, v) in sorted(self.best_pairs.items(), key=lambda kv: kv[0].value)
            },
            "claim1": self.claim1.to_json(),
            "claim2": self.claim2.to_json(),
            "conjecture": self.conjecture,
        }


def _claim(paths: Sequence[Path], edges: int, nodes: int) -> ClaimVerdict:
    best = None
    for i, j in itertools.combinations(range(len(paths)), 2):
        e = measure(paths[i], paths[j], MeasureKind.EDGE_SYMDIFF)
        v = measure(paths[i], paths[j], MeasureKind.NODE_SYMDIFF)
        if e >= edges and v >= nodes:
            return ClaimVerdict("holds", (i, j), e, v)
        if best is None or (e, v) > best[2:]:
            best = (i, j, e, v)
    return ClaimVerdict("violated", best[:2], best[2], best[3])


def first_prefix_reaching(paths: Sequence[Path], edges: int, nodes: int) -> int | None:
    """Smallest prefix size containing a pair meeting both bounds."""
    for j in range(1, len(paths)):
        for i in range(j):
            if (measure(paths[i], paths[j], MeasureKind.EDGE_SYMDIFF) >= edges
                    and measure(paths[i], paths[j], MeasureKind.NODE_SYMDIFF) >= nodes):
                return j + 1
    return None


def diversity_of(paths: Sequence[Path]) -> DiversityReport:
    paths = list(paths)
    rep = DiversityReport(len(paths), paths)
    if len(paths) >= 2:
        for kind in MeasureKind:
            rep.best_pairs[kind] = best_pair(paths, kind)
        rep.claim1 = _claim(paths[:2], CLAIM1_EDGES, CLAIM1_NODES)
    if len(paths) >= 3:
        rep.claim2 = _claim(paths[:3], CLAIM2_EDGES, CLAIM2_NODES)
    edge_best = rep.best_pairs.get(MeasureKind.EDGE_SYMDIFF, (None, None, 0))[2]
    node_best = rep.best_pairs.get(MeasureKind.NODE_SYMDIFF, (None, None, 0))[2]
    rep.conjecture = {
        "edge_target": CONJECTURE_EDGES,
        "node_target": CONJECTURE_NODES,
        "max_edges": edge_best,
        "max_nodes": node_best,
        "first_prefix_reaching": first_prefix_reaching(paths, CONJECTURE_EDGES, CONJECTURE_NODES),
    }
    return rep


def check_guarantees(g: WeightedGraph, s: int, t: int, K: int) -> DiversityReport:
    """Measure the first ``K`` near-shortest paths against the pair-distance guarantees.

    Claim 1 looks at paths 1 and 2 (>= 3 edges, >= 1 node apart); claim 2
    at the first three (some pair >= 4 edges and >= 2 nodes). The
    6-edge/4-node target is only measured, never asserted.
    """
    if K < 2:
        raise ValueError("prefix size must be at least 2")
    rep = diversity_of(PathStream(g, s, t).take(K))
    rep.prefix_size = K
    return rep

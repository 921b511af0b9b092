"""Text formats for graphs and sensitive sets.

Graph files are line oriented::

    c any comment
    p dsp <directed|undirected> <n> <m> <d>
    a <tail> <head> <w1> [... <wd>]

Node ids are 1-based in files and 0-based in memory. Weights are integers
or ``num/den`` fractions. Sensitive-set files hold ``e <u> <v>`` or
``n <u>`` lines (one kind per file).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .graph import (
    Arc,
    GraphValidationError,
    SensitiveSet,
    WeightedGraph,
    WeightVector,
    format_rational,
    validate_graph,
)

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class GraphFormatError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _parse_rational(tok: str, line: int) -> Fraction:
    if not _RATIONAL.match(tok):
        raise GraphFormatError(line, f"bad weight {tok!r}")
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise GraphFormatError(line, f"zero denominator in {tok!r}")
    return Fraction(int(num), int(den) if den else 1)


def _parse_int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(line, f"bad {what} {tok!r}") from None


def parse_graph(text: str, validate: bool = True) -> WeightedGraph:
    header = None
    arcs: list[Arc] = []
    arc_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        toks = line.split()
        if toks[0] == "p":
            if header is not None:
                raise GraphFormatError(lineno, "duplicate header")
            if len(toks) != 6 or toks[1] != "dsp":
                raise GraphFormatError(lineno, "header must be 'p dsp <directed|undirected> <n> <m> <d>'")
            if toks[2] not in ("directed", "undirected"):
                raise GraphFormatError(lineno, f"unknown orientation {toks[2]!r}")
            n = _parse_int(toks[3], lineno, "node count")
            m = _parse_int(toks[4], lineno, "arc count")
            d = _parse_int(toks[5], lineno, "criteria count")
            if n < 1 or m < 0 or d < 1:
                raise GraphFormatError(lineno, "need n >= 1, m >= 0, d >= 1")
            header = (toks[2] == "directed", n, m, d, lineno)
        elif toks[0] == "a":
            if header is None:
                raise GraphFormatError(lineno, "arc before header")
            d = header[3]
            if len(toks) != 3 + d:
                raise GraphFormatError(lineno, f"arc needs 2 node ids and {d} weights")
            tail = _parse_int(toks[1], lineno, "node id")
            head = _parse_int(toks[2], lineno, "node id")
            w = WeightVector(_parse_rational(t, lineno) for t in toks[3:])
            arcs.append(Arc(tail - 1, head - 1, w))
            arc_lines.append(lineno)
        else:
            raise GraphFormatError(lineno, f"unknown line type {toks[0]!r}")
    if header is None:
        raise GraphFormatError(0, "missing header")
    directed, n, m, d, hline = header
    if len(arcs) != m:
        raise GraphFormatError(hline, f"header declares {m} arcs, found {len(arcs)}")
    g = WeightedGraph(directed, n, tuple(arcs), d)
    if validate:
        problems = validate_graph(g)
        if problems:
            located = [
                type(p)(p.kind, p.arc_index, f"line {arc_lines[p.arc_index]}: {p.message}")
                for p in problems
            ]
            raise GraphValidationError(located)
    return g


def serialize_graph(g: WeightedGraph, comments: Iterable[str] = ()) -> str:
    """Canonical text form; arcs ordered by (tail, head)."""
    g = g.canonical()
    lines = [f"c {c}" for c in comments]
    kind = "directed" if g.directed else "undirected"
    lines.append(f"p dsp {kind} {g.n} {g.m} {g.d}")
    for a in g.arcs:
        ws = " ".join(format_rational(c) for c in a.weight)
        lines.append(f"a {a.tail + 1} {a.head + 1} {ws}")
    return "\n".join(lines) + "\n"


def parse_sensitive(text: str) -> SensitiveSet:
    kind = None
    members = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        toks = line.split()
        if toks[0] == "e" and len(toks) == 3:
            this = "edges"
            members.append((_parse_int(toks[1], lineno, "node id") - 1,
                            _parse_int(toks[2], lineno, "node id") - 1))
        elif toks[0] == "n" and len(toks) == 2:
            this = "nodes"
            members.append(_parse_int(toks[1], lineno, "node id") - 1)
        else:
            raise GraphFormatError(lineno, "expected 'e <u> <v>' or 'n <u>'")
        if kind is not None and this != kind:
            raise GraphFormatError(lineno, "sensitive file mixes edges and nodes")
        kind = this
    return SensitiveSet(kind or "edges", frozenset(members))


def serialize_sensitive(S: SensitiveSet) -> str:
    if S.kind == "edges":
        lines = [f"e {u + 1} {v + 1}" for u, v in S.sorted_members()]
    else:
        lines = [f"n {u + 1}" for u in S.sorted_members()]
    return "\n".join(lines) + "\n"

"""Command-line front end; every command prints one JSON report.

Exit codes: 0 ok, 1 usage, 2 parse/validation, 3 infeasible query,
4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path as FsPath

from . import __version__
from .diversity import MeasureKind, best_pair, check_guarantees
from .disjoint import CostBase, CostMode, Variant, solve
from .flow import InfeasibleFlowError
from .generators import GeneratorSpec
from .graph import GraphValidationError, Path, validate_graph
from .io import GraphFormatError, parse_graph, parse_sensitive, serialize_graph
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    OracleInfeasible,
    brute_force_best_set,
    enum_paths_ordered,
    enum_shortest_paths,
)
from .shortest import PathStream
from .spdag import UnreachableError, build_spdag, serialize_spdag

EXIT_USAGE, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_BUDGET = 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class _Run:
    """Collects input digests while a command reads its files."""

    def __init__(self):
        self.inputs: dict[str, str] = {}

    def read(self, path: str) -> str:
        data = FsPath(path).read_bytes()
        self.inputs[path] = hashlib.sha256(data).hexdigest()
        return data.decode()

    def graph(self, path: str):
        return parse_graph(self.read(path))


def _path_json(p: Path) -> dict:
    return {"nodes": [v + 1 for v in p.nodes], "length": p.length.to_json(), "edges": len(p)}


def _terminals(args, g) -> tuple[int, int]:
    s = args.s if args.s is not None else 1
    t = args.t if args.t is not None else g.n
    for v in (s, t):
        if not 1 <= v <= g.n:
            raise ValueError(f"terminal {v} outside 1..{g.n}")
    return s - 1, t - 1


def _sensitive(run: _Run, args):
    return parse_sensitive(run.read(args.sensitive)) if args.sensitive else None


def cmd_validate(run: _Run, args) -> tuple[dict, int]:
    g = parse_graph(run.read(args.graph), validate=False)
    problems = validate_graph(g)
    res = {
        "directed": g.directed, "n": g.n, "m": g.m, "d": g.d,
        "violations": [{"kind": p.kind, "arc": p.arc_index, "message": p.message} for p in problems],
    }
    return res, EXIT_INPUT if problems else 0


def cmd_ksp(run: _Run, args) -> tuple[dict, int]:
    g = run.graph(args.graph)
    s, t = _terminals(args, g)
    paths = PathStream(g, s, t).take(args.k)
    return {"s": s + 1, "t": t + 1, "k": args.k, "paths": [_path_json(p) for p in paths]}, 0


def cmd_diverse(run: _Run, args) -> tuple[dict, int]:
    g = run.graph(args.graph)
    s, t = _terminals(args, g)
    rep = check_guarantees(g, s, t, args.prefix)
    res = rep.to_json()
    if args.measure:
        kinds = [MeasureKind(m) for m in args.measure]
        res["selected"] = {}
        for k in kinds:
            if len(rep.paths) >= 2:
                i, j, v = best_pair(rep.paths, k)
                res["selected"][k.value] = {"i": i, "j": j, "value": v}
    return res, 0


def _dag_json(dag) -> dict:
    return {
        "s": dag.s + 1, "t": dag.t + 1, "distance": dag.total.to_json(),
        "nodes": [u + 1 for u in dag.nodes],
        "arcs": [[u + 1, v + 1] for u, v, _ in dag.arcs],
        "dist_from_s": {str(u + 1): dag.dist_from_s[u].to_json() for u in dag.nodes},
        "dist_to_t": {str(u + 1): dag.dist_to_t[u].to_json() for u in dag.nodes},
    }


def cmd_spdag(run: _Run, args) -> tuple[dict, int]:
    g = run.graph(args.graph)
    s, t = _terminals(args, g)
    dag = build_spdag(g, s, t)
    if args.output:
        FsPath(args.output).write_text(serialize_spdag(dag))
    return _dag_json(dag), 0


def cmd_disjoint(run: _Run, args) -> tuple[dict, int]:
    g = run.graph(args.graph)
    s, t = _terminals(args, g)
    S = _sensitive(run, args)
    dag = build_spdag(g, s, t)
    sol = solve(dag, Variant(args.variant), S, args.r, CostBase(args.cost_base), CostMode(args.cost_mode))
    return sol.to_json(), 0


def cmd_gen(run: _Run, args) -> tuple[dict, int]:
    if (args.family is None) == (args.family_opt is None):
        raise UsageError("give the family once, either positionally or with --family")
    fam = args.family or args.family_opt
    if fam == "example1a":
        params = {"qbar": args.qbar, "tower_width": args.tower_width, "directed": args.directed}
    elif fam == "example1b":
        params = {"n_prime": args.n_prime, "directed": args.directed}
    elif fam == "example2-boundary":
        params = {"qbar": args.qbar}
    elif fam == "example2":
        if not args.base or args.split_node is None:
            raise UsageError("example2 needs --base FILE and --split-node V")
        base = run.graph(args.base)
        s, t = _terminals(args, base)
        params = {"base": base, "base_file": args.base, "s": s, "t": t, "v": args.split_node - 1,
                  "qbar": args.qbar, "insert": args.insert, "tower_width": args.tower_width}
    else:
        density = args.density if args.density == "max" else float(args.density)
        params = {"nodes": args.nodes, "density": density, "weight_range": list(args.weight_range),
                  "seed": args.seed, "directed": args.directed}
    spec = GeneratorSpec(fam, params)
    g = spec.build()
    text = serialize_graph(g, [spec.provenance()])
    if args.output:
        FsPath(args.output).write_text(text)
    res = {"family": fam, "n": g.n, "m": g.m, "directed": g.directed,
           "params": {k: v for k, v in params.items() if k != "base"}}
    if not args.output:
        res["graph"] = text
    return res, 0


def _budget(args) -> OracleBudget:
    return OracleBudget(args.max_nodes, args.max_paths, args.max_subsets)


def cmd_oracle(run: _Run, args) -> tuple[dict, int]:
    g = run.graph(args.graph)
    s, t = _terminals(args, g)
    budget = _budget(args)
    if args.what == "ksp":
        paths = enum_paths_ordered(g, s, t, budget)
        if args.k is not None:
            paths = paths[: args.k]
        return {"s": s + 1, "t": t + 1, "paths": [_path_json(p) for p in paths]}, 0
    if args.what == "spdag":
        paths = enum_shortest_paths(g, s, t, budget)
        arcs = sorted({a for p in paths for a in p.arcs()})
        return {"s": s + 1, "t": t + 1, "paths": [_path_json(p) for p in paths],
                "arcs": [[u + 1, v + 1] for u, v in arcs]}, 0
    res = brute_force_best_set(g, s, t, args.variant, _sensitive(run, args), args.r, budget)
    obj = list(res.objective) if isinstance(res.objective, tuple) else res.objective
    return {"variant": args.variant, "r": args.r, "objective": obj, "unbounded": res.unbounded,
            "witness": [[v + 1 for v in p.nodes] for p in res.witness]}, 0


def cmd_claims(run: _Run, args) -> tuple[dict, int]:
    files = sorted(FsPath(args.corpus).glob("*.graph"))
    rows = []
    summary = {"instances": 0, "claim1_violated": 0, "claim2_violated": 0,
               "claim1_vacuous": 0, "claim2_vacuous": 0}
    for f in files:
        g = run.graph(str(f))
        s, t = _terminals(args, g)
        rep = check_guarantees(g, s, t, args.prefix)
        summary["instances"] += 1
        for c in ("claim1", "claim2"):
            st = getattr(rep, c).status
            if st != "holds":
                summary[f"{c}_{st}"] += 1
        rows.append({"file": f.name, "paths_found": len(rep.paths),
                     "claim1": rep.claim1.to_json(), "claim2": rep.claim2.to_json(),
                     "conjecture": rep.conjecture})
    return {"summary": summary, "instances": rows}, 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pdksp", description="Partially disjoint k shortest paths.")
    p.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph")
        sp.add_argument("-s", type=int, help="source node (default 1)")
        sp.add_argument("-t", type=int, help="target node (default n)")
        return sp

    sp = sub.add_parser("validate", help="check a graph file")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_validate)

    sp = graph_cmd("ksp", "first k near-shortest paths")
    sp.add_argument("-k", type=int, default=10)
    sp.set_defaults(func=cmd_ksp)

    sp = graph_cmd("diverse", "pair diversity among the first K paths")
    sp.add_argument("--prefix", type=int, default=3)
    sp.add_argument("--measure", action="append", choices=[m.value for m in MeasureKind])
    sp.set_defaults(func=cmd_diverse)

    sp = graph_cmd("spdag", "subgraph of shortest paths")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_spdag)

    def disjoint_args(sp):
        sp.add_argument("--variant", choices=[v.value for v in Variant], required=True)
        sp.add_argument("--sensitive")
        sp.add_argument("-r", type=int)

    sp = graph_cmd("disjoint", "partially disjoint shortest paths via flows")
    disjoint_args(sp)
    sp.add_argument("--cost-base", choices=[c.value for c in CostBase], default="strict")
    sp.add_argument("--cost-mode", choices=[c.value for c in CostMode], default="bigint")
    sp.set_defaults(func=cmd_disjoint)

    sp = sub.add_parser("gen", help="write a generated instance")
    families = ["example1a", "example1b", "example2", "example2-boundary", "random"]
    sp.add_argument("family", nargs="?", choices=families)
    sp.add_argument("--family", dest="family_opt", choices=families)
    sp.add_argument("--qbar", type=int, default=2)
    sp.add_argument("--tower-width", type=int, default=3)
    sp.add_argument("--n-prime", type=int, default=3)
    sp.add_argument("--base")
    sp.add_argument("-s", type=int)
    sp.add_argument("-t", type=int)
    sp.add_argument("--split-node", type=int)
    sp.add_argument("--insert", choices=["clique", "example1a", "example1b"], default="clique")
    sp.add_argument("--nodes", type=int, default=8)
    sp.add_argument("--density", default="0.4")
    sp.add_argument("--weight-range", type=int, nargs=2, default=[1, 10])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--directed", action="store_true")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("oracle", help="brute-force references")
    osub = sp.add_subparsers(dest="what", required=True, parser_class=_Parser)
    for what in ("ksp", "spdag", "disjoint"):
        op = osub.add_parser(what)
        op.add_argument("graph")
        op.add_argument("-s", type=int)
        op.add_argument("-t", type=int)
        op.add_argument("--max-nodes", type=int, default=14)
        op.add_argument("--max-paths", type=int, default=20000)
        op.add_argument("--max-subsets", type=int, default=2_000_000)
        if what == "ksp":
            op.add_argument("-k", type=int)
        if what == "disjoint":
            disjoint_args(op)
        op.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("claims", help="check the pair-distance claims over a corpus directory")
    sp.add_argument("corpus")
    sp.add_argument("--prefix", type=int, default=3)
    sp.add_argument("-s", type=int)
    sp.add_argument("-t", type=int)
    sp.set_defaults(func=cmd_claims)
    return p


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    report = {"version": __version__, "command": argv}
    ctx = _Run()
    try:
        args = build_parser().parse_args(argv)
        start = time.perf_counter()
        results, code = args.func(ctx, args)
    except UsageError as e:
        code, err = EXIT_USAGE, ("usage", str(e))
    except (GraphFormatError, GraphValidationError, OSError, ValueError) as e:
        kind = "infeasible" if isinstance(e, (InfeasibleFlowError, OracleInfeasible, UnreachableError)) else "input"
        code = EXIT_INFEASIBLE if kind == "infeasible" else EXIT_INPUT
        err = (kind, str(e))
        if isinstance(e, InfeasibleFlowError):
            err = (kind, str(e), e.achievable)
    except BudgetExceeded as e:
        code, err = EXIT_BUDGET, ("budget", str(e))
    else:
        report["inputs"] = ctx.inputs
        report["results"] = results
        if args.timing:
            report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
        _emit(report, out)
        return code
    report["inputs"] = ctx.inputs
    report["error"] = {"kind": err[0], "message": err[1]}
    if len(err) > 2:
        report["error"]["achievable"] = err[2]
    _emit(report, out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

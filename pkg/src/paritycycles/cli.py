"""Command-line front end: ``check``, ``find``, ``oracle``, ``generate``, ``validate``.

Every command prints exactly one JSON object on stdout.  Exit status is 0 on
success, 2 when the input violates the requested theorem's hypotheses (an
expected negative answer), and 1 on bad input or usage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path as FsPath

from . import constructors as K
from .errors import BudgetExceeded, GraphError, HypothesisViolation, InvalidParams, GenerationFailed, NoPathPair
from .families import Family, FamilySpec, generate, parse_params
from .graph import Graph, parse_edgelist, parse_json, to_dot, to_edgelist
from .oracle import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    enumerate_closed_trails_through,
    enumerate_cycles_through,
    exists_parity_circuit,
    exists_parity_cycle,
    validate_witness,
)
from .paths import Mode, disjoint_paths
from .structure import (
    BipartitionCertificate,
    bipartite_or_odd_cycle,
    connectivity_report,
    is_connected,
    is_two_connected,
    is_two_edge_connected,
)
from .witness import Parity, ParityWitness, Target, parse_target

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return FsPath(path).read_text()


def load_graph(path: str, fmt: str | None = None) -> Graph:
    text = _read_text(path)
    if fmt is None:
        fmt = "json" if path.endswith(".json") else "edgelist"
    return parse_json(text) if fmt == "json" else parse_edgelist(text)


def graph_digest(g: Graph) -> str:
    return "sha256:" + hashlib.sha256(to_edgelist(g).encode()).hexdigest()[:16]


def _sidecar_names(args) -> dict[str, str]:
    path = args.sidecar
    if path is None and args.input != "-":
        default = FsPath(args.input + ".json")
        path = str(default) if default.exists() else None
    if path is None:
        return {}
    doc = json.loads(FsPath(path).read_text())
    return dict(doc.get("targets", {}))


def _budget(args) -> EnumerationBudget:
    return EnumerationBudget.parse(args.budget) if args.budget else DEFAULT_BUDGET


# ------------------------------------------------------------- commands


def cmd_check(args, g: Graph) -> tuple[int, dict]:
    rep = connectivity_report(g)
    cert = bipartite_or_odd_cycle(g)
    out = {
        "n": g.n,
        "m": g.m,
        "connected": is_connected(g),
        "two_connected": is_two_connected(g),
        "two_edge_connected": is_two_edge_connected(g),
        "bipartite": isinstance(cert, BipartitionCertificate),
        "bridges": sorted(list(g.edges[e]) for e in rep.bridges),
        "articulation_vertices": sorted(rep.articulation_vertices),
        "components": [list(c) for c in rep.components],
        "degrees": g.degrees(),
        "divisor_k": K.divisor_k(g),
    }
    if isinstance(cert, BipartitionCertificate):
        out["bipartition"] = list(cert.side)
    else:
        out["odd_cycle"] = list(cert.cycle.vertices)
    return EXIT_OK, out


def _find_one(args, g: Graph, target: Target) -> tuple[int, dict]:
    parity = Parity(args.parity)
    try:
        if args.theorem == "auto":
            w = K.find_auto(g, target, parity, args.object)
        else:
            w = K.run_theorem(g, args.theorem, target, parity, k=args.k)
            if (args.object == "circuit") != w.is_circuit:
                if w.is_circuit:
                    raise UsageError(f"--theorem {args.theorem} yields circuits; use --object circuit")
                w = ParityWitness(w.object.as_circuit(), w.target, w.parity, w.theorem, w.details)
    except HypothesisViolation as exc:
        attempts = getattr(exc, "attempts", [exc])
        return EXIT_VIOLATION, {
            "target": target.describe(g),
            "violation": exc.to_dict(),
            "attempts": [a.to_dict() for a in attempts],
        }
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    check = validate_witness(g, w)
    if not check:
        return EXIT_ERROR, {"target": target.describe(g), "error": f"internal: witness failed validation ({check.reason.value})"}
    return EXIT_OK, {"target": target.describe(g), "theorem_used": w.theorem, "witness": w.to_dict(g), "valid": True}


def cmd_find(args, g: Graph) -> tuple[int, dict]:
    names = _sidecar_names(args)
    if args.mode == "paths":
        if not args.target or not args.to:
            raise UsageError("--mode paths needs --target vertex:s and --to vertex:t")
        s, t = parse_target(g, args.target, names), parse_target(g, args.to, names)
        if s.kind != "vertex" or t.kind != "vertex":
            raise UsageError("--mode paths takes vertex targets")
        pair = disjoint_paths(g, s.id, t.id, Mode(args.disjoint))
        if pair is None:
            return EXIT_VIOLATION, {"paths": None, "mode": args.disjoint}
        return EXIT_OK, {
            "mode": args.disjoint,
            "paths": [{"vertices": list(p.vertices), "edges": list(p.edges)} for p in (pair.first, pair.second)],
        }
    if args.targets:
        if args.targets == "all-edges":
            targets = [Target.edge(e) for e in range(g.m)]
        elif args.targets == "all-vertices":
            targets = [Target.vertex(v) for v in range(g.n)]
        else:
            raise UsageError("--targets must be all-edges or all-vertices")
        results, worst = [], EXIT_OK
        for t in targets:
            code, res = _find_one(args, g, t)
            if code == EXIT_ERROR:
                return code, res
            worst = max(worst, code)
            results.append(res)
        return worst, {"results": results}
    if not args.target:
        raise UsageError("--target is required (or --targets all-edges|all-vertices)")
    target = parse_target(g, args.target, names)
    code, res = _find_one(args, g, target)
    if args.emit_dot:
        wit = res.get("witness")
        FsPath(args.emit_dot).write_text(
            to_dot(
                g,
                highlight_edges=wit["edges"] if wit else (),
                highlight_vertices=[target.id] if target.kind == "vertex" else (),
            )
        )
    return code, res


def cmd_oracle(args, g: Graph) -> tuple[int, dict]:
    if not args.target:
        raise UsageError("--target is required")
    target = parse_target(g, args.target, _sidecar_names(args))
    budget = _budget(args)
    parity = Parity(args.parity)
    trails = args.object in ("trail", "circuit")
    if trails:
        exists = exists_parity_circuit(g, target, parity, budget)
        found = enumerate_closed_trails_through(g, target, budget) if args.count else None
    else:
        exists = exists_parity_cycle(g, target, parity, budget)
        found = enumerate_cycles_through(g, target, budget) if args.count else None
    out: dict = {"target": target.describe(g), "object": "circuit" if trails else "cycle", "parity": parity.value, "exists": exists}
    if found is not None:
        matching = [c for c in found if c.length % 2 == parity.bit]
        out["count"] = len(matching)
        out["witnesses"] = [{"vertices": list(c.vertices), "edges": list(c.edges)} for c in matching]
    return EXIT_OK, out


def cmd_generate(args) -> tuple[int, dict]:
    spec = FamilySpec(Family(args.family), parse_params(args.params or ""), args.seed)
    inst = generate(spec)
    body = to_edgelist(inst.graph) if args.format == "edgelist" else json.dumps(
        {"n": inst.graph.n, "edges": [list(p) for p in inst.graph.edges]}
    )
    target_label = next(lbl for name, lbl in inst.names.items() if parse_target(inst.graph, lbl) == inst.target)
    sidecar = {
        "family": spec.family.value,
        "params": spec.params,
        "seed": spec.seed,
        "target": target_label,
        "targets": inst.names,
    }
    out = {"n": inst.graph.n, "m": inst.graph.m, **sidecar}
    if args.out and args.out != "-":
        FsPath(args.out).write_text(body)
        FsPath(args.out + ".json").write_text(json.dumps(sidecar, indent=2) + "\n")
        out["written"] = [args.out, args.out + ".json"]
    else:
        out["graph"] = body
    return EXIT_OK, out


def cmd_validate(args, g: Graph) -> tuple[int, dict]:
    doc = json.loads(_read_text(args.witness))
    if "witness" in doc.get("outcome", {}):
        doc = doc["outcome"]["witness"]
    elif "witness" in doc:
        doc = doc["witness"]
    try:
        w = ParityWitness.from_dict(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed witness: {exc}") from None
    res = validate_witness(g, w)
    return (EXIT_OK if res else EXIT_ERROR), {"valid": res.ok, "reason": res.reason.value}


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="paritycycles", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def graph_flags(sp):
        sp.add_argument("--input", required=True, help="graph file, or - for stdin")
        sp.add_argument("--format", choices=["edgelist", "json"], help="default: by file extension")
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("check", help="structure report")
    graph_flags(sp)

    sp = sub.add_parser("find", help="construct a parity cycle or circuit")
    graph_flags(sp)
    sp.add_argument("--target", help="vertex:i, edge:u,v, or a sidecar name")
    sp.add_argument("--targets", help="batch mode: all-edges or all-vertices")
    sp.add_argument("--parity", choices=["even", "odd"], default="even")
    sp.add_argument("--object", choices=["cycle", "circuit"], default="cycle")
    sp.add_argument("--theorem", choices=["auto", *K.THEOREMS], default="auto")
    sp.add_argument("--k", type=int, help="divisor for thm1/thm5 (default: gcd of degrees)")
    sp.add_argument("--emit-dot", help="write the graph with the witness highlighted")
    sp.add_argument("--sidecar", help="JSON naming targets (default: INPUT.json if present)")
    sp.add_argument("--mode", choices=["witness", "paths"], default="witness")
    sp.add_argument("--to", help="second endpoint for --mode paths")
    sp.add_argument("--disjoint", choices=["vertex", "edge"], default="vertex")
    sp.add_argument("--budget", help=argparse.SUPPRESS)

    sp = sub.add_parser("oracle", help="exhaustive existence check")
    graph_flags(sp)
    sp.add_argument("--target")
    sp.add_argument("--object", choices=["cycle", "trail", "circuit"], default="cycle")
    sp.add_argument("--parity", choices=["even", "odd"], default="even")
    sp.add_argument("--budget", help="V,E,T limits (vertices, edges, trail edges)")
    sp.add_argument("--count", action=argparse.BooleanOptionalAction, default=True, help="also enumerate and list witnesses")
    sp.add_argument("--sidecar")

    sp = sub.add_parser("generate", help="write a family instance")
    sp.add_argument("--family", required=True, choices=[f.value for f in Family])
    sp.add_argument("--params", default="")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["edgelist", "json"], default="edgelist")

    sp = sub.add_parser("validate", help="check a witness JSON against a graph")
    graph_flags(sp)
    sp.add_argument("--witness", required=True)
    return p


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    started = time.perf_counter()
    report: dict = {"command": argv}
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing command: check, find, oracle, generate, validate")
        if args.command == "generate":
            code, outcome = cmd_generate(args)
        else:
            g = load_graph(args.input, args.format)
            report["input_digest"] = graph_digest(g)
            handler = {"check": cmd_check, "find": cmd_find, "oracle": cmd_oracle, "validate": cmd_validate}[args.command]
            code, outcome = handler(args, g)
    except UsageError as exc:
        code, outcome = EXIT_ERROR, {"error": f"usage: {exc}"}
    except (GraphError, InvalidParams, BudgetExceeded, GenerationFailed, NoPathPair, OSError, json.JSONDecodeError) as exc:
        code, outcome = EXIT_ERROR, {"error": f"{type(exc).__name__}: {exc}"}
    report["outcome"] = outcome
    report["exit_code"] = code
    report["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 3)
    stdout.write(json.dumps(report, indent=2) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

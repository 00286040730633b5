"""Command-line interface.

Commands
--------
gen     construct a named-family graph and emit JSON or DOT
odp     outdegree polynomial of a graph pair, with optional slices
verify  run one theorem verifier (or the hypothesis sweep)
table   Eulerian / cyclic-Eulerian coefficient rows as CSV

Graphs are accepted as named-family specs ("tour:4", "path:5",
"cycle:3"), inline JSON ('{"n":3,"edges":[[3,1]]}'), or a path to a
JSON file.  Exit codes: 0 success/holds, 1 a verdict failed, 2 usage
error, 3 resource bound exceeded.  All output is deterministic.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from pathlib import Path

from .digraph import Digraph, cycle, path, tour
from .dfsgraph import materialize, odp, odp_assign_slice, odp_edge_slice
from .identities import (
    Verdict,
    sweep_identity,
    verify_acyclic_potential,
    verify_automorphism,
    verify_cycle_base,
    verify_cycle_identity,
    verify_edge_removal,
    verify_generalized_equals_odp,
    verify_path_identity,
    verify_point_squish,
    verify_self_equivalent_slice,
)
from .limits import DEFAULT_TRUNCATION, BoundExceededError
from .polynomials import Polynomial, eulerian_poly, generalized_eulerian_poly

_FAMILY_RE = re.compile(r"(tour|path|cycle):(\d+)")
_FAMILIES = {"tour": tour, "path": path, "cycle": cycle}

THEOREMS = (
    "automorphism",
    "acyclic",
    "edge-removal",
    "self-slice",
    "squish",
    "path-identity",
    "cycle-base",
    "cycle-identity",
    "gen-eulerian",
    "sweep",
)


class UsageError(Exception):
    pass


def parse_graph_spec(spec: str) -> Digraph:
    m = _FAMILY_RE.fullmatch(spec)
    if m:
        return _FAMILIES[m.group(1)](int(m.group(2)))
    if spec.lstrip().startswith("{"):
        try:
            return Digraph.from_json(spec)
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid graph JSON: {exc}") from exc
    p = Path(spec)
    if p.is_file():
        try:
            return Digraph.from_json(p.read_text())
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid graph JSON in {spec}: {exc}") from exc
    raise UsageError(f"unrecognized graph spec: {spec!r}")


def _parse_pair(text: str, what: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"{what} must look like 'a,b', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise UsageError(f"{what} must be two integers, got {text!r}") from exc


def _parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text)
    if not m:
        raise UsageError(f"range must look like '1..4' or '3', got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _default_truncation() -> int:
    raw = os.environ.get("SEATGRAPHS_M")
    if raw is None:
        return DEFAULT_TRUNCATION
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SEATGRAPHS_M must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seatgraphs", description=__doc__.split("\n", 1)[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="construct a graph and print it")
    p_gen.add_argument("spec", help="tour:N | path:N | cycle:N | inline JSON | file")
    p_gen.add_argument("--format", choices=("json", "dot"), default="json")
    p_gen.add_argument("--output", "-o", default=None)

    p_odp = sub.add_parser("odp", help="outdegree polynomial of a graph pair")
    p_odp.add_argument("x_spec")
    p_odp.add_argument("y_spec")
    p_odp.add_argument("--slice", dest="slice_spec", default=None,
                       help="edge:a,b or assign:i,j")
    p_odp.add_argument("--format", choices=("text", "json"), default="text")
    p_odp.add_argument("--output", "-o", default=None)
    p_odp.add_argument("--unsafe-bounds", action="store_true")

    p_ver = sub.add_parser("verify", help="verify one theorem or run the sweep")
    p_ver.add_argument("theorem", choices=THEOREMS)
    p_ver.add_argument("--x", dest="x_spec", default=None)
    p_ver.add_argument("--y", dest="y_spec", default=None)
    p_ver.add_argument("--graph", dest="graph_spec", default=None)
    p_ver.add_argument("--edge", default=None, help="a,b for edge-removal")
    p_ver.add_argument("--pair", default=None, help="a,b for self-slice / squish")
    p_ver.add_argument("--n", type=int, default=None)
    p_ver.add_argument("--M", dest="truncation", type=int, default=None)
    p_ver.add_argument("--cyclic", action="store_true", help="for gen-eulerian")
    p_ver.add_argument("--identity", choices=("path", "cycle"), default="path",
                       help="which identity the sweep runs")
    p_ver.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_ver.add_argument("--output", "-o", default=None)
    p_ver.add_argument("--unsafe-bounds", action="store_true")

    p_tab = sub.add_parser("table", help="coefficient tables as CSV")
    p_tab.add_argument("kind", choices=("eulerian", "cyclic-eulerian"))
    p_tab.add_argument("--n", required=True, help="range like 1..4 or a single n")
    p_tab.add_argument("--output", "-o", default=None)
    p_tab.add_argument("--unsafe-bounds", action="store_true")

    p_dfs = sub.add_parser("dfs", help="materialize DFS(X, Y) and print it")
    p_dfs.add_argument("x_spec")
    p_dfs.add_argument("y_spec")
    p_dfs.add_argument("--format", choices=("json", "dot"), default="json")
    p_dfs.add_argument("--output", "-o", default=None)
    p_dfs.add_argument("--unsafe-bounds", action="store_true")

    return parser


def _bound(args, default):
    return None if getattr(args, "unsafe_bounds", False) else default


def _require(args, attr: str, flag: str):
    value = getattr(args, attr)
    if value is None:
        raise UsageError(f"this theorem requires {flag}")
    return value


def _format_bool(value: bool) -> str:
    return "true" if value else "false"


def _verdict_text(name: str, verdict: Verdict) -> str:
    lines = [f"theorem: {name}", f"holds: {_format_bool(verdict.holds)}",
             f"checked_range: {verdict.checked_range}"]
    if verdict.certificates is not None:
        certs = " ".join(f"{k}={_format_bool(v)}" for k, v in verdict.certificates.items())
        lines.append(f"certificates: {certs}")
    if verdict.lhs_prefix is not None:
        lines.append(f"prefix: {verdict.lhs_prefix}")
    if verdict.counterexample is not None:
        ce = verdict.counterexample
        lines.append(f"counterexample: {ce.inputs}")
        lines.append(f"  lhs: {ce.lhs}")
        lines.append(f"  rhs: {ce.rhs}")
    return "\n".join(lines) + "\n"


def _sweep_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["graph_id", "n", "edges", "cert_X_chordal",
                     "cert_comp_chordal", "identity", "first_bad_m"])
    for r in rows:
        writer.writerow([
            r.graph_id, r.n, r.edges,
            _format_bool(r.cert_x_chordal), _format_bool(r.cert_comp_chordal),
            _format_bool(r.identity),
            "" if r.first_bad_m is None else r.first_bad_m,
        ])
    return buf.getvalue()


def run_gen(args) -> tuple[str, int]:
    graph = parse_graph_spec(args.spec)
    if args.format == "dot":
        return graph.to_dot(), 0
    return graph.to_json() + "\n", 0


def run_odp(args) -> tuple[str, int]:
    X = parse_graph_spec(args.x_spec)
    Y = parse_graph_spec(args.y_spec)
    bound = _bound(args, 10)
    if args.slice_spec is None:
        poly = odp(X, Y, bound=bound)
    else:
        kind, _, rest = args.slice_spec.partition(":")
        if kind == "edge":
            a, b = _parse_pair(rest, "--slice edge")
            poly = odp_edge_slice(X, Y, a, b, bound=bound)
        elif kind == "assign":
            i, j = _parse_pair(rest, "--slice assign")
            poly = odp_assign_slice(X, Y, i, j, bound=bound)
        else:
            raise UsageError(f"unknown slice kind {kind!r}; use edge:a,b or assign:i,j")
    if args.format == "json":
        return json.dumps(list(poly.coeffs), separators=(",", ":")) + "\n", 0
    return poly.format() + "\n", 0


def run_dfs(args) -> tuple[str, int]:
    X = parse_graph_spec(args.x_spec)
    Y = parse_graph_spec(args.y_spec)
    dfs = materialize(X, Y, bound=_bound(args, 7))
    if args.format == "dot":
        return dfs.to_dot(), 0
    return dfs.to_json() + "\n", 0


def run_verify(args) -> tuple[str, int]:
    truncation = args.truncation if args.truncation is not None else _default_truncation()
    name = args.theorem

    if name == "sweep":
        n = _require(args, "n", "--n")
        rows = sweep_identity(n, truncation, which=args.identity,
                              bound=_bound(args, 4))
        ok = all(r.identity for r in rows)
        if args.format == "json":
            text = json.dumps([r.to_json_obj() for r in rows], separators=(",", ":")) + "\n"
        else:
            text = _sweep_csv(rows)
        return text, 0 if ok else 1

    if name == "automorphism":
        verdict = verify_automorphism(parse_graph_spec(_require(args, "x_spec", "--x")),
                                      parse_graph_spec(_require(args, "y_spec", "--y")),
                                      bound=_bound(args, 5))
    elif name == "acyclic":
        verdict = verify_acyclic_potential(parse_graph_spec(_require(args, "x_spec", "--x")),
                                           parse_graph_spec(_require(args, "y_spec", "--y")),
                                           bound=_bound(args, 7))
    elif name == "edge-removal":
        a, b = _parse_pair(_require(args, "edge", "--edge"), "--edge")
        verdict = verify_edge_removal(parse_graph_spec(_require(args, "x_spec", "--x")),
                                      parse_graph_spec(_require(args, "y_spec", "--y")),
                                      a, b, bound=_bound(args, 8))
    elif name == "self-slice":
        a, b = _parse_pair(_require(args, "pair", "--pair"), "--pair")
        verdict = verify_self_equivalent_slice(parse_graph_spec(_require(args, "x_spec", "--x")),
                                               parse_graph_spec(_require(args, "y_spec", "--y")),
                                               a, b, bound=_bound(args, 8))
    elif name == "squish":
        a, b = _parse_pair(_require(args, "pair", "--pair"), "--pair")
        verdict = verify_point_squish(parse_graph_spec(_require(args, "x_spec", "--x")),
                                      parse_graph_spec(_require(args, "y_spec", "--y")),
                                      a, b, bound=_bound(args, 8))
    elif name == "path-identity":
        verdict = verify_path_identity(parse_graph_spec(_require(args, "graph_spec", "--graph")),
                                       truncation, bound=_bound(args, 8))
    elif name == "cycle-base":
        verdict = verify_cycle_base(_require(args, "n", "--n"), truncation,
                                    bound=_bound(args, 8))
    elif name == "cycle-identity":
        verdict = verify_cycle_identity(parse_graph_spec(_require(args, "graph_spec", "--graph")),
                                        truncation, bound=_bound(args, 8))
    elif name == "gen-eulerian":
        verdict = verify_generalized_equals_odp(parse_graph_spec(_require(args, "graph_spec", "--graph")),
                                                args.cyclic, bound=_bound(args, 7))
    else:  # pragma: no cover - argparse already constrains the choices
        raise UsageError(f"unknown theorem {name!r}")

    if args.format == "csv":
        raise UsageError("csv output is only available for the sweep")
    if args.format == "json":
        text = verdict.to_json() + "\n"
    else:
        text = _verdict_text(name, verdict)
    return text, 0 if verdict.holds else 1


def run_table(args) -> tuple[str, int]:
    lo, hi = _parse_range(args.n)
    bound = _bound(args, 8)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for n in range(lo, hi + 1):
        if args.kind == "eulerian":
            poly = eulerian_poly(n, bound=bound)
            width = n
        else:
            if n < 2:
                raise UsageError("cyclic-eulerian tables start at n=2")
            poly = generalized_eulerian_poly(tour(n), cyclic=True, bound=bound)
            width = n
        writer.writerow([poly[m] for m in range(width)])
    return buf.getvalue(), 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    runners = {
        "gen": run_gen,
        "odp": run_odp,
        "dfs": run_dfs,
        "verify": run_verify,
        "table": run_table,
    }
    try:
        text, code = runners[args.command](args)
    except BoundExceededError as exc:
        print(f"seatgraphs: resource bound exceeded: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ValueError) as exc:
        print(f"seatgraphs: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

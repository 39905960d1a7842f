"""Command-line interface: construct, check, spectra, quotient, enumerate,
search, verify, table.

Exit codes: 0 success, 1 verification failed, 2 usage error, 3 budget
exhausted before finishing.  Graphs travel as graph6 text; reports as JSON
(stable field names) or CSV.  WHEELFREE_THREADS sets the default worker
count for the search command.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from pathlib import Path

from . import enumeration, quotient, search, spectral, wheels
from .graphs import (Graph, GraphError, bits, complement, complete, cycle,
                     empty, from_graph6, g_ab, g_abcd, h_n, join, matching_join,
                     path, to_graph6, wheel)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _build_family(args) -> Graph:
    fam = args.family
    if fam in ("complete", "empty", "path", "cycle", "wheel", "hn"):
        if args.n is None:
            raise UsageError(f"--family {fam} needs --n")
        ctor = {"complete": complete, "empty": empty, "path": path,
                "cycle": cycle, "wheel": wheel, "hn": h_n}[fam]
        return ctor(args.n)
    if fam == "c7_complement":
        return complement(cycle(7))
    if fam == "k2_join_empty":
        if args.n is None or args.n < 3:
            raise UsageError("--family k2_join_empty needs --n >= 3")
        return join(complete(2), empty(args.n - 2))
    if fam == "spider":
        if args.a is None or args.b is None:
            raise UsageError("--family spider needs --a and --b")
        return g_ab(args.a, args.b)
    if fam == "apex_spider":
        if None in (args.a, args.b, args.c, args.d):
            raise UsageError("--family apex_spider needs --a --b --c --d")
        return g_abcd(args.a, args.b, args.c, args.d)
    if fam == "matching_join":
        if None in (args.pairs, args.singles, args.independent):
            raise UsageError(
                "--family matching_join needs --pairs --singles --independent")
        return matching_join(args.pairs, args.singles, args.independent)
    raise UsageError(f"unknown family {fam!r}")


def _read_graphs(args) -> list[Graph]:
    if getattr(args, "g6", None):
        return [from_graph6(args.g6)]
    src = getattr(args, "infile", None)
    if src is None:
        raise UsageError("provide --in FILE (or '-' for stdin) or --g6 STRING")
    if src == "-":
        text = sys.stdin.read()
    else:
        p = Path(src)
        if not p.exists():
            raise UsageError(f"input file {src} not found")
        text = p.read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError("no graphs in input")
    return [from_graph6(ln) for ln in lines]


def _emit(text: str, args) -> None:
    out = getattr(args, "output", None)
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _matrix_kind(flag: str) -> str:
    return {"a": "adjacency", "adjacency": "adjacency",
            "q": "signless_laplacian", "signless_laplacian": "signless_laplacian"}[flag]


def _fmt_radius(x: float) -> str:
    return f"{x:.10g}"


def _same_family(g: Graph, reference: Graph) -> bool:
    """Isomorphism against a family representative: label equality catches
    graphs built with the package layouts at any order; the canonical-form
    comparison settles relabeled inputs at orders it supports."""
    if g.n != reference.n:
        return False
    if g == reference:
        return True
    if g.n > enumeration.HARD_ORDER_CAP:
        return False
    return (enumeration.canonical_graph6(g)
            == enumeration.canonical_graph6(reference))


def _closed_form_note(g: Graph, kind: str) -> str | None:
    """Symbolic value when the graph is one of the closed-form families."""
    n = g.n
    if kind == "adjacency" and n >= 4 and _same_family(g, h_n(n)):
        if n % 2 == 1:
            return f"({n}+1)/2 = {(n + 1) // 2}"
        if n % 4 == 0:
            return f"(sqrt({n}^2+1)+1)/2"
        return f"largest root of x^3 - x^2 - ({n}^2/4)x + {n}/2"
    if kind == "signless_laplacian" and n >= 3 and _same_family(
            g, join(complete(2), empty(n - 2))):
        return f"({n}+2+sqrt(({n}+2)^2-16))/2"
    return None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_construct(args) -> int:
    g = _build_family(args)
    if args.format == "graph6":
        _emit(to_graph6(g), args)
    else:
        _emit(json.dumps({
            "family": args.family,
            "order": g.n,
            "edges": g.edge_count(),
            "graph6": to_graph6(g),
        }, indent=2), args)
    return EXIT_OK


def _cmd_check(args) -> int:
    out = []
    for g in _read_graphs(args):
        witness = wheels.find_wheel_witness(g)
        out.append({
            "order": g.n,
            "graph6": to_graph6(g),
            "wheel_free": witness is None,
            "witness": None if witness is None else
                {"hub": witness.hub, "rim": list(witness.rim)},
            "pair_violations": [asdict(v) for v in wheels.check_pair_neighborhoods(g)],
        })
    _emit(json.dumps(out[0] if len(out) == 1 else out, indent=2), args)
    return EXIT_OK


def _cmd_spectra(args) -> int:
    kind = _matrix_kind(args.matrix)
    out = []
    for g in _read_graphs(args):
        result = spectral.spectral_radius(spectral.graph_matrix(g, kind),
                                          tol=args.tol, method=args.method)
        lo, hi = spectral.row_sum_bounds(spectral.graph_matrix(g, kind))
        out.append({
            "order": g.n,
            "kind": kind,
            "radius": float(_fmt_radius(result.radius)),
            "radius_text": _fmt_radius(result.radius),
            "residual": result.residual,
            "method": result.method,
            "iterations": result.iterations,
            "row_sum_bounds": [lo, hi],
            "closed_form": _closed_form_note(g, kind),
        })
    _emit(json.dumps(out[0] if len(out) == 1 else out, indent=2), args)
    return EXIT_OK


def _cmd_quotient(args) -> int:
    kind = _matrix_kind(args.matrix)
    out = []
    for g in _read_graphs(args):
        part = quotient.coarsest_equitable(g, kind)
        q = quotient.quotient_matrix(g, part, kind)
        coeffs = quotient.char_poly(q)
        top = float(quotient.quotient_eigenvalues(q, part.sizes())[0])
        out.append({
            "order": g.n,
            "kind": kind,
            "cells": [list(bits(c)) for c in part.cells],
            "matrix": [[str(x) for x in row] for row in q.entries],
            "char_poly_ascending": [str(c) for c in coeffs],
            "top_eigenvalue": top,
        })
    _emit(json.dumps(out[0] if len(out) == 1 else out, indent=2), args)
    return EXIT_OK


def _progress_printer(label: str):
    def tick(done: int, total: int) -> None:
        sys.stderr.write(f"\r{label}: {done}/{total} parents")
        sys.stderr.flush()
        if done == total:
            sys.stderr.write("\n")
    return tick


def _cmd_enumerate(args) -> int:
    config = enumeration.GeneratorConfig(
        n=args.n, predicate=args.predicate,
        max_seconds=args.max_seconds, max_graphs=args.max_graphs,
        allow_large=args.allow_large,
        progress=_progress_printer(f"order {args.n}") if args.progress else None)
    try:
        if args.output:
            count = enumeration.spool(config, args.output, args.checkpoint)
            sys.stderr.write(f"{count} classes written\n")
        else:
            for g in enumeration.enumerate_graphs(config):
                sys.stdout.write(to_graph6(g) + "\n")
    except enumeration.BudgetExhausted as exc:
        sys.stderr.write(f"budget exhausted: {exc} ({exc.emitted} emitted)\n")
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_search(args) -> int:
    kind = _matrix_kind(args.matrix)
    progress = _progress_printer(f"order {args.n}") if args.progress else None
    report = search.max_spectral_radius(
        args.n, kind, tie_tol=args.tie_tol,
        max_seconds=args.max_seconds, max_graphs=args.max_graphs,
        allow_large=args.allow_large, threads=args.threads, progress=progress)
    _emit(json.dumps(report.to_dict(), indent=2), args)
    return EXIT_OK if report.exhaustive else EXIT_BUDGET


def _cmd_verify(args) -> int:
    fn = search.verify_theorem1 if args.theorem == 1 else search.verify_theorem2
    verdicts = fn(args.lo, args.hi, max_seconds=args.max_seconds,
                  max_graphs=args.max_graphs, allow_large=args.allow_large)
    _emit(json.dumps([v.to_dict() for v in verdicts], indent=2), args)
    if any(not v.exhaustive for v in verdicts):
        return EXIT_BUDGET
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_FAIL


def _table_rows(which: int, n: int) -> list[dict]:
    """Candidate-family rows at one order: for each admissible degree of the
    dominant vertex, the matching-join shape it forces, with its radius."""
    if which == 1:
        if n % 2 == 1:
            degrees = [(n + 1) // 2, (n + 3) // 2, (n + 5) // 2]
        else:
            degrees = [(n + 2) // 2, (n + 4) // 2]
    else:
        degrees = [(n + 1) // 2] if n % 2 == 1 else [n // 2, (n + 2) // 2]
    rows = []
    family = h_n(n)
    for d in degrees:
        if which == 1:
            other = n - 1 - d
            pairs, singles, independent = other // 2 + 1, other % 2, d - 1
        else:
            pairs, singles, independent = d // 2, d % 2, n - d
        g = matching_join(pairs, singles, independent)
        rho = spectral.spectral_radius(spectral.adjacency_matrix(g)).radius
        if _same_family(g, family):
            label = f"H_{n}"
        else:
            left = f"{pairs}K2" + (f"+{singles}K1" if singles else "")
            label = f"({left})v{independent}K1"
        rows.append({
            "n": n,
            "d_u": d,
            "family": label,
            "radius": _fmt_radius(rho),
            "wheel_free": wheels.is_wheel_free(g),
        })
    return rows


def emit_table(rows: list[dict], fmt: str) -> str:
    header = ["n", "d_u", "family", "radius", "wheel_free"]
    if fmt == "json":
        return json.dumps(rows, indent=2)
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(row[k]).lower()
                              if isinstance(row[k], bool) else str(row[k])
                              for k in header))
    return "\n".join(lines)


def _cmd_table(args) -> int:
    rows = _table_rows(args.which, args.n)
    _emit(emit_table(rows, args.format), args)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="wheelfree",
        description="Wheel-free extremal spectral graph toolkit")
    sub = top.add_subparsers(dest="verb", required=True)

    def add_io(p, default_format="json", formats=("json",)):
        p.add_argument("-o", "--output", help="write to file instead of stdout")
        if formats:
            p.add_argument("--format", choices=formats, default=default_format)

    def add_input(p):
        p.add_argument("--in", dest="infile", metavar="FILE",
                       help="graph6 input file, or - for stdin")
        p.add_argument("--g6", help="inline graph6 string")

    def add_budget(p):
        p.add_argument("--max-seconds", type=float, default=None)
        p.add_argument("--max-graphs", type=int, default=None)
        p.add_argument("--allow-large", action="store_true",
                       help="permit orders above the default cap of 10")

    p = sub.add_parser("construct", help="build a named graph family")
    p.add_argument("--family", required=True,
                   choices=["complete", "empty", "path", "cycle", "wheel", "hn",
                            "c7_complement", "k2_join_empty", "spider",
                            "apex_spider", "matching_join"])
    p.add_argument("--n", type=int)
    for flag in ("a", "b", "c", "d", "pairs", "singles", "independent"):
        p.add_argument(f"--{flag}", type=int)
    add_io(p, "graph6", ("graph6", "json"))
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("check", help="wheel-freeness and pair diagnostics")
    add_input(p)
    add_io(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("spectra", help="spectral radius of A or Q")
    add_input(p)
    p.add_argument("--matrix", choices=["a", "q"], default="a")
    p.add_argument("--method", choices=["jacobi", "power"], default="jacobi")
    p.add_argument("--tol", type=float, default=spectral.DEFAULT_TOL)
    add_io(p)
    p.set_defaults(fn=_cmd_spectra)

    p = sub.add_parser("quotient", help="coarsest equitable partition data")
    add_input(p)
    p.add_argument("--matrix", choices=["a", "q"], default="a")
    add_io(p)
    p.set_defaults(fn=_cmd_quotient)

    p = sub.add_parser("enumerate", help="isomorph-free generation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--predicate", choices=list(enumeration.PREDICATES),
                   default="wheel_free")
    p.add_argument("-o", "--output", help="spool graph6 lines to this file")
    p.add_argument("--checkpoint", help="resume file (with --output)")
    p.add_argument("--progress", action="store_true")
    add_budget(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("search", help="maximum radius over wheel-free classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matrix", choices=["a", "q"], default="a")
    p.add_argument("--tie-tol", type=float, default=search.TIE_TOL)
    p.add_argument("--progress", action="store_true")
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("WHEELFREE_THREADS",
                                              os.cpu_count() or 1)))
    add_budget(p)
    add_io(p)
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("verify", help="reproduce the extremal theorems")
    p.add_argument("--theorem", type=int, choices=[1, 2], required=True)
    p.add_argument("--from", dest="lo", type=int, default=4)
    p.add_argument("--to", dest="hi", type=int, default=9)
    add_budget(p)
    add_io(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("table", help="candidate-family tables at one order")
    p.add_argument("--which", type=int, choices=[1, 2], required=True)
    p.add_argument("--n", type=int, required=True)
    add_io(p, "csv", ("csv", "json"))
    p.set_defaults(fn=_cmd_table)

    return top


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except (UsageError, GraphError, quotient.PartitionError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except enumeration.BudgetExhausted as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())

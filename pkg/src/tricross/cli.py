"""Command-line front end: ``tricross <command> ...``.

Exit status: 0 success, 1 a verification check failed, 2 usage or input
error, 3 internal consistency failure (counts that must agree do not).
Every command is deterministic; identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import kernels
from .constructions import VARIANTS, build, construction_count, realize_geometric, to_svg
from .counting import NonSimpleDrawingError, geometric_count, lb_total, star_oracle, theorem_total
from .cyclic import DomainError, c_n, cr2_kmn_div, cr2_knn, cr3_k22n, f
from .extraction import tripartite_labels
from .model import GeometricDrawing, K22nLabels, TripartiteLabels, ValidationError, validate_geometry
from .serialize import SCHEMA, ParseError, dumps, loads
from .verify import CHECKS, DEFAULT_CAP, DEFAULT_LB_LIMIT, sweep, sweep_csv, sweep_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_GEOMETRIC_LIMIT = 16


class InternalError(RuntimeError):
    """Two quantities that must agree do not."""


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))
    else:
        print(text)


def _write(path: str, content: str) -> None:
    Path(path).write_text(content, encoding="utf-8")


# -- commands ---------------------------------------------------------------


FORMULAS = {
    "k22n": ("cr3(K_{2,2,n})", lambda a: cr3_k22n(a.n)),
    "knn2": ("cr2(K_{n,n})", lambda a: cr2_knn(a.n)),
    "kmn2": ("cr2(K_{m,n}), m | n", lambda a: cr2_kmn_div(a.m, a.n)),
    "cn": ("c_n", lambda a: c_n(a.n)),
}


def cmd_formula(args) -> int:
    if args.name == "kmn2" and args.m is None:
        raise DomainError("formula kmn2 needs --m")
    if args.name != "kmn2" and args.m is not None:
        raise DomainError(f"formula {args.name} takes no --m")
    title, fn = FORMULAS[args.name]
    value = fn(args)
    inputs = {"n": args.n} if args.m is None else {"m": args.m, "n": args.n}
    _emit(args, {"formula": args.name, "inputs": inputs, "value": value}, str(value))
    return EXIT_OK


def _groups(text: Optional[str]):
    if text is None:
        return None
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise DomainError(f"--groups expects four comma-separated integers, got {text!r}") from None


def cmd_construct(args) -> int:
    spec = build(args.n, args.variant, _groups(args.groups))
    count = construction_count(spec)
    payload = {"n": spec.n, "variant": spec.variant, "groups": list(spec.groups), "construction_count": count}
    lines = [f"construction_count {count}"]
    if args.n > args.geometric_limit:
        if args.svg or args.out or args.emit_labels:
            raise DomainError(f"n = {args.n} exceeds the geometric limit {args.geometric_limit}")
        lines.append(f"geometric skipped (n > {args.geometric_limit})")
        payload["geometric"] = None
    else:
        drawing = realize_geometric(spec)
        problems = validate_geometry(drawing)
        if problems:
            raise InternalError("realised drawing is invalid: " + "; ".join(problems))
        report = geometric_count(drawing)
        payload["geometric"] = {
            "red_red": report.red_red,
            "red_green": report.red_green,
            "green_green": report.green_green,
            "total": report.total,
        }
        lines.append(
            f"geometric_count {report.total} (red_red {report.red_red}, "
            f"red_green {report.red_green}, green_green {report.green_green})"
        )
        if report.total != count:
            _emit(args, payload, "\n".join(lines))
            raise InternalError(f"geometric count {report.total} != construction count {count}")
        if args.out:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            _write(str(out / "spec.json"), dumps(spec))
            _write(str(out / "drawing.json"), dumps(drawing))
        if args.emit_labels:
            _write(args.emit_labels, dumps(tripartite_labels(drawing)))
        if args.svg:
            _write(args.svg, to_svg(drawing, size=args.svg_size))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_count(args) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {args.file}: {exc.strerror}") from None
    obj = loads(text)
    if isinstance(obj, TripartiteLabels):
        total = theorem_total(obj)
        _emit(args, {"kind": "tripartite-labels", "method": "theorem", "total": total}, str(total))
    elif isinstance(obj, GeometricDrawing):
        r = geometric_count(obj)
        payload = {
            "kind": "geometric",
            "method": "geometric",
            "red_red": r.red_red,
            "red_green": r.red_green,
            "green_green": r.green_green,
            "total": r.total,
        }
        text = f"{r.total}\nred_red {r.red_red}\nred_green {r.red_green}\ngreen_green {r.green_green}"
        _emit(args, payload, text)
    elif isinstance(obj, K22nLabels):
        total = lb_total(obj)
        _emit(args, {"kind": "k22n-labels", "method": "lower-bound", "total": total}, f"{total} (lower bound)")
    else:
        raise DomainError("count expects labels or a geometric drawing")
    return EXIT_OK


def _checks(text: Optional[str]) -> List[str]:
    if not text:
        return list(CHECKS)
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise DomainError(f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    return names


def _run_sweep(args):
    if args.n_from < 3 or args.n_to < args.n_from:
        raise DomainError(f"need 3 <= --from <= --to, got {args.n_from}..{args.n_to}")
    rows = sweep(args.n_from, args.n_to, args.lb_max, _checks(args.checks), max(1, args.jobs), args.cap)
    if args.format == "csv":
        sys.stdout.write(sweep_csv(rows))
    elif args.format == "json":
        doc = {
            "schema": SCHEMA,
            "rows": [{"n": r.n, "cells": r.cells, "pass": r.passed, "notes": r.notes} for r in rows],
            "pass": all(r.passed for r in rows),
        }
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(sweep_table(rows))
    if args.csv:
        _write(args.csv, sweep_csv(rows))
    return rows


def cmd_verify(args) -> int:
    rows = _run_sweep(args)
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def cmd_sweep(args) -> int:
    _run_sweep(args)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.xi is None and args.xj is None:
        pairs = [(i, j) for i in range(1, args.n + 1) for j in range(1, args.n + 1)]
    elif args.xi is not None and args.xj is not None:
        pairs = [(args.xi, args.xj)]
    else:
        raise DomainError("give both --xi and --xj, or neither to scan every pair")
    rows = [(i, j, star_oracle(args.n, i, j), f(args.n, i, j)) for i, j in pairs]
    bad = [r for r in rows if r[2] != r[3]]
    payload = {
        "n": args.n,
        "pairs": [{"xi": i, "xj": j, "oracle": o, "f": v} for i, j, o, v in rows],
        "agree": not bad,
    }
    text = "\n".join(f"{i} {j} oracle={o} f={v}" for i, j, o, v in rows)
    _emit(args, payload, text)
    return EXIT_OK if not bad else EXIT_INTERNAL


# -- parser -----------------------------------------------------------------


def _add_format(p, choices=("text", "json")):
    p.add_argument("--format", choices=choices, default=choices[0], help="output format (default: %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricross",
        description="Tripartite-circle crossing numbers of K_{2,2,n}: formulas, constructions, counting, verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 (kernels: {kernels.IMPLEMENTATION})")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("formula", help="evaluate a closed-form crossing number")
    p.add_argument("name", choices=sorted(FORMULAS), help="k22n, knn2, kmn2 (needs --m) or cn")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="build an optimal drawing, count it two ways, optionally write files")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="type1")
    p.add_argument("--groups", metavar="A,B,C,D", help="group sizes (default: a valid built-in choice)")
    p.add_argument("--svg", metavar="PATH", help="write an SVG rendering")
    p.add_argument("--svg-size", type=int, default=800, help="SVG width and height in pixels (default: %(default)s)")
    p.add_argument("--out", metavar="DIR", help="write spec.json and drawing.json into DIR")
    p.add_argument("--emit-labels", metavar="PATH", help="write the drawing's nine label tables")
    p.add_argument(
        "--geometric-limit",
        type=int,
        default=DEFAULT_GEOMETRIC_LIMIT,
        help="largest n that is realised geometrically (default: %(default)s)",
    )
    _add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", help="count the crossings described by a labels or drawing file")
    p.add_argument("file")
    _add_format(p)
    p.set_defaults(func=cmd_count)

    for name, func, text in (
        ("verify", cmd_verify, "run the exhaustive checks; exit 1 if any fails"),
        ("sweep", cmd_sweep, "tabulate formulas, constructions and checks over a range of n"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--from", dest="n_from", type=int, default=3)
        p.add_argument("--to", dest="n_to", type=int, default=6)
        p.add_argument(
            "--lb-max",
            type=int,
            default=DEFAULT_LB_LIMIT,
            help="largest n for the exhaustive lower-bound scan (default: %(default)s)",
        )
        p.add_argument("--checks", help=f"comma-separated subset of: {', '.join(CHECKS)} (default: all)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (default: %(default)s)")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="counterexamples kept per check")
        p.add_argument("--csv", metavar="PATH", help="also write the table as CSV")
        _add_format(p, ("text", "csv", "json"))
        p.set_defaults(func=func)

    p = sub.add_parser("oracle", help="compare the annulus brute force with f")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--xi", type=int)
    p.add_argument("--xj", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NonSimpleDrawingError, InternalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ParseError, ValidationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front door.

One JSON envelope per invocation on stdout; human diagnostics go to stderr.
Exit codes partition outcomes: 0 for a positive answer (arrows, valid,
certified, value found), 10 for a negative answer with certificate (does not
arrow, nothing found below the cap), 11 for a rejected witness coloring, and
1 for input or contract errors.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from pathlib import Path

from .arrowing import NotFoundBelow, ramsey_number_exact, strongly_arrows
from .coloring import EdgeColoring, verify_witness
from .constructions import (
    bound_report,
    chvatal_harary_coloring,
    lemma2_coloring,
    theorem1_coloring,
    theorem3_coloring,
)
from .errors import ArrowheadError, ColoringMismatchError, PreconditionError
from .graphs import Graph, complete, cycle, disjoint_union, emit_graph6, parse_graph6, path, star
from .search import Catalog, ResultCache, bundled_catalog, ir_exact

DEFAULT_CACHE = "ir-cache.json"
CACHE_ENV = "ARROWHEAD_CACHE"

_SYMBOLIC = re.compile(r"^(\d*)([KPCS])_?(\d+)$")


def parse_graph_arg(text: str) -> Graph:
    """Accepts K5/P4/C5/S3-style names (optionally 2K2 for disjoint copies),
    a path to a file holding one graph6 line, or a literal graph6 string."""
    m = _SYMBOLIC.match(text)
    if m:
        copies = int(m.group(1)) if m.group(1) else 1
        kind, size = m.group(2), int(m.group(3))
        if copies < 1:
            raise PreconditionError(f"bad copy count in {text!r}")
        try:
            base = {"K": complete, "P": path, "C": cycle, "S": star}[kind](size)
        except ValueError as exc:
            raise PreconditionError(f"bad symbolic graph {text!r}: {exc}") from exc
        return disjoint_union([base] * copies) if copies > 1 else base
    p = Path(text)
    if p.is_file():
        for line in p.read_text().splitlines():
            line = line.strip()
            if line:
                return parse_graph6(line)
        raise PreconditionError(f"graph file {text} is empty")
    return parse_graph6(text)


def _print_envelope(command: str, inputs: dict, result: dict, started: float) -> None:
    envelope = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "elapsed_ms": int((time.monotonic() - started) * 1000),
    }
    print(json.dumps(envelope, indent=2))


def _write_out(out_path: str | None, payload: dict) -> None:
    if out_path:
        Path(out_path).write_text(json.dumps(payload, indent=2) + "\n")


def _open_cache(args) -> ResultCache | None:
    if args.no_cache:
        return None
    path = args.cache or os.environ.get(CACHE_ENV) or DEFAULT_CACHE
    return ResultCache(path)


def cmd_arrows(args) -> int:
    started = time.monotonic()
    f = parse_graph_arg(args.f)
    g = parse_graph_arg(args.g)
    h = parse_graph_arg(args.h)
    res = strongly_arrows(f, g, h)
    witness = res.witness.to_json_dict() if res.witness is not None else None
    result = {
        "arrows": res.arrows,
        "witness": witness,
        "stats": {"colorings_explored": res.colorings_explored, "prunes": res.prunes},
    }
    if witness is not None:
        _write_out(args.out, witness)
    _print_envelope("arrows", {"f": args.f, "g": args.g, "h": args.h}, result, started)
    return 0 if res.arrows else 10


def cmd_bounds(args) -> int:
    started = time.monotonic()
    g = parse_graph_arg(args.g)
    h = parse_graph_arg(args.h)
    report = bound_report(g, h, ramsey_budget=args.ramsey_budget)
    _print_envelope("bounds", {"g": args.g, "h": args.h}, report.to_json_dict(), started)
    return 0


def cmd_construct(args) -> int:
    started = time.monotonic()
    method = args.method
    if method == "ch":
        if not args.g or not args.h:
            raise PreconditionError("method ch needs --g and --h")
        g = parse_graph_arg(args.g)
        h = parse_graph_arg(args.h)
        host, coloring, trace = chvatal_harary_coloring(g, h)
    else:
        if not args.f:
            raise PreconditionError(f"method {method} needs --f")
        host = parse_graph_arg(args.f)
        if method == "t1":
            if args.alpha is None or args.omega is None:
                raise PreconditionError("method t1 needs --alpha and --omega")
            coloring, trace = theorem1_coloring(host, args.alpha, args.omega)
        elif method == "l2":
            if args.omega is None:
                raise PreconditionError("method l2 needs --omega")
            coloring, trace = lemma2_coloring(host, args.omega)
        else:
            if args.alpha is None or args.omega is None:
                raise PreconditionError("method t3 needs --alpha and --omega")
            coloring, trace = theorem3_coloring(host, args.alpha, args.omega)
    result = {
        "certified": True,
        "method": trace.method,
        "host": emit_graph6(host),
        "coloring": coloring.to_json_dict(),
        "trace": trace.to_json_dict(),
    }
    _write_out(args.out, coloring.to_json_dict())
    inputs = {
        key: value
        for key, value in (
            ("f", args.f),
            ("g", args.g),
            ("h", args.h),
            ("alpha", args.alpha),
            ("omega", args.omega),
            ("method", method),
        )
        if value is not None
    }
    _print_envelope("construct", inputs, result, started)
    return 0


def cmd_verify(args) -> int:
    started = time.monotonic()
    f = parse_graph_arg(args.f)
    g = parse_graph_arg(args.g)
    h = parse_graph_arg(args.h)
    try:
        data = json.loads(Path(args.coloring).read_text())
    except json.JSONDecodeError as exc:
        raise ColoringMismatchError(f"coloring file is not valid JSON: {exc}") from exc
    coloring = EdgeColoring.from_json_dict(data)
    violation = verify_witness(f, coloring, g, h)
    result = {
        "valid": violation is None,
        "violation": None
        if violation is None
        else {"color": violation.color, "vertices": list(violation.embedding.map)},
    }
    _print_envelope(
        "verify", {"f": args.f, "coloring": args.coloring, "g": args.g, "h": args.h}, result, started
    )
    return 0 if violation is None else 11


def cmd_ir(args) -> int:
    started = time.monotonic()
    g = parse_graph_arg(args.g)
    h = parse_graph_arg(args.h)
    catalog = Catalog(args.catalog) if args.catalog else bundled_catalog()
    cache = _open_cache(args)
    res = ir_exact(g, h, catalog, n_max=args.n_max, cache=cache, allow_large=args.allow_large)
    if isinstance(res, NotFoundBelow):
        result = {"g": emit_graph6(g), "h": emit_graph6(h), "ir": None, "n_max": res.n_max}
        _print_envelope("ir", {"g": args.g, "h": args.h, "n_max": args.n_max}, result, started)
        return 10
    result = res.to_json_dict()
    _write_out(args.out, result)
    _print_envelope("ir", {"g": args.g, "h": args.h, "n_max": args.n_max}, result, started)
    return 0


def cmd_ramsey(args) -> int:
    started = time.monotonic()
    g = parse_graph_arg(args.g)
    h = parse_graph_arg(args.h)
    value = ramsey_number_exact(g, h, args.n_max)
    found = not isinstance(value, NotFoundBelow)
    result = {
        "g": emit_graph6(g),
        "h": emit_graph6(h),
        "ramsey": value if found else None,
        "n_max": args.n_max,
    }
    _print_envelope("ramsey", {"g": args.g, "h": args.h, "n_max": args.n_max}, result, started)
    return 0 if found else 10


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrowhead",
        description="exact induced-arrowing decisions, witness colorings, bounds, and catalog sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("arrows", help="decide whether a host arrows a pattern pair")
    p.add_argument("--f", required=True, help="host graph (symbolic, file, or graph6)")
    p.add_argument("--g", required=True, help="red pattern")
    p.add_argument("--h", required=True, help="blue pattern")
    p.add_argument("--out", help="also write the witness coloring JSON here")
    p.set_defaults(func=cmd_arrows)

    p = sub.add_parser("bounds", help="report every applicable lower bound for a pair")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--ramsey-budget", type=int, default=6, help="largest complete host tried for the exact classical value")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="build and certify a witness coloring")
    p.add_argument("--method", required=True, choices=["ch", "t1", "l2", "t3"])
    p.add_argument("--f", help="host graph (t1, l2, t3)")
    p.add_argument("--g", help="red pattern (ch)")
    p.add_argument("--h", help="blue pattern (ch)")
    p.add_argument("--alpha", type=int, help="red-side independence target")
    p.add_argument("--omega", type=int, help="blue-side clique budget")
    p.add_argument("--out", help="also write the coloring JSON here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a witness coloring against a pattern pair")
    p.add_argument("--f", required=True)
    p.add_argument("--coloring", required=True, help="coloring JSON file")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ir", help="exact minimum arrowing order by catalog sweep")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--catalog", help="catalog directory (default: bundled, orders 1-7)")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--allow-large", action="store_true", help="permit sweeps beyond order 7")
    p.add_argument("--cache", help=f"cache file (default ${CACHE_ENV} or ./{DEFAULT_CACHE})")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--out", help="also write the result JSON here")
    p.set_defaults(func=cmd_ir)

    p = sub.add_parser("ramsey", help="exact classical value on complete hosts")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_ramsey)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArrowheadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

"""Command-line front end: ``tautheight coeffs|invariants|verify|report``."""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence

from .calculus import CapacityError, height_coefficients
from .exact import FractionFormatError, format_fraction, parse_fraction
from .pmgraph import Edge, GraphValidationError, PolarizedMetrizedGraph, Vertex, invariants
from .verify import DEFAULT_G_RANGE, SUITES, bounds_report

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


class GraphParseError(ValueError):
    """The graph document is malformed (as opposed to describing an invalid graph)."""


# ---------------------------------------------------------------------------
# graph documents


def parse_graph(text: str) -> PolarizedMetrizedGraph:
    """Read a graph document; raises GraphParseError or GraphValidationError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"not a valid graph document: {exc}") from None
    if not isinstance(doc, dict):
        raise GraphParseError("graph document must be a map with 'vertices' and 'edges'")
    for key in ("vertices", "edges"):
        if not isinstance(doc.get(key), list):
            raise GraphParseError(f"missing or non-list field {key!r}")
    vertices = []
    for i, item in enumerate(doc["vertices"]):
        if not isinstance(item, dict) or "id" not in item or "q" not in item:
            raise GraphParseError(f"vertex #{i} must be a map with 'id' and 'q'")
        vid, q = item["id"], item["q"]
        if not isinstance(vid, str):
            raise GraphParseError(f"vertex #{i}: id must be a string")
        if isinstance(q, bool) or not isinstance(q, int):
            raise GraphParseError(f"vertex {vid!r}: q must be an integer")
        vertices.append(Vertex(vid, q))
    edges = []
    for i, item in enumerate(doc["edges"]):
        if not isinstance(item, dict) or not {"u", "v", "length"} <= item.keys():
            raise GraphParseError(f"edge #{i} must be a map with 'u', 'v' and 'length'")
        try:
            length = parse_fraction(item["length"])
        except FractionFormatError as exc:
            raise GraphParseError(f"edge #{i}: {exc}") from None
        edges.append(Edge(item["u"], item["v"], length))
    return PolarizedMetrizedGraph(tuple(vertices), tuple(edges))


def format_graph(G: PolarizedMetrizedGraph) -> str:
    doc = {
        "vertices": [{"id": v.id, "q": v.q} for v in G.vertices],
        "edges": [{"u": e.u, "v": e.v, "length": format_fraction(e.length)} for e in G.edges],
    }
    return json.dumps(doc, indent=2)


# ---------------------------------------------------------------------------
# argument helpers


def parse_m(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "()"):
        return ()
    try:
        return tuple(int(part) for part in text.strip("()").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"m must be a comma-separated list of integers, got {text!r}") from None


def parse_g_range(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = tuple(range(int(lo), int(hi) + 1))
        else:
            values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"g range must look like 2..5 or 2,3,4, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty g range {text!r}")
    return values


def _glue_option_values(argv: Sequence[str]) -> list[str]:
    # "--m -1,2" would otherwise be read as an unknown option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--m":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--m={nxt}")
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tautheight",
        description="Exact height coefficients of tautological cycles and metrized graph invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="universal coefficients (a, b, c) for a tuple m")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--m", type=parse_m, required=True, help="comma-separated nonzero integers, e.g. 1,-1")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("invariants", help="delta, tau, epsilon, phi, alpha of a graph file")
    p.add_argument("graph", help="graph document path, or - for stdin")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run an exact verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), default="paper")
    p.add_argument("--g", type=parse_g_range, default=DEFAULT_G_RANGE, help="e.g. 2..5")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("report", help="derived bounds for one genus")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return parser


# ---------------------------------------------------------------------------
# commands


def _cmd_coeffs(args, out) -> int:
    hc = height_coefficients(args.m, args.g, workers=args.workers)
    N = hc.arithmetic_vector
    if args.json:
        print(
            json.dumps(
                {
                    "g": hc.g,
                    "m": list(hc.m),
                    "a": format_fraction(hc.a),
                    "b": format_fraction(hc.b),
                    "c": format_fraction(hc.c),
                    "G": hc.geometric_degree,
                    "N": [format_fraction(x) for x in N.as_tuple()],
                },
                indent=2,
            ),
            file=out,
        )
        return EXIT_OK
    print(f"a = {format_fraction(hc.a)}, b = {format_fraction(hc.b)}, c = {format_fraction(hc.c)}", file=out)
    print(f"G = {hc.geometric_degree}", file=out)
    print(f"N = {N}", file=out)
    print(hc.identity(), file=out)
    return EXIT_OK


def _cmd_invariants(args, out) -> int:
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        with open(args.graph, encoding="utf-8") as fh:
            text = fh.read()
    report = invariants(parse_graph(text))
    if args.json:
        print(json.dumps(report.as_dict(), indent=2), file=out)
    else:
        print("\n".join(report.lines()), file=out)
    return EXIT_OK


def _emit_report(report, as_json: bool, out) -> int:
    if as_json:
        print(json.dumps(report.to_dict(), indent=2), file=out)
    else:
        print(report.to_text(), file=out)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _cmd_verify(args, out) -> int:
    bad = [g for g in args.g if g < 2]
    if bad:
        raise ValueError(f"genus must be at least 2, got {bad[0]}")
    return _emit_report(SUITES[args.suite](args.g), args.json, out)


def _cmd_report(args, out) -> int:
    if args.g < 2:
        raise ValueError(f"genus must be at least 2, got {args.g}")
    return _emit_report(bounds_report(args.g), args.json, out)


COMMANDS = {
    "coeffs": _cmd_coeffs,
    "invariants": _cmd_invariants,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(_glue_option_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=err)
        return EXIT_CAPACITY
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_INPUT
    except GraphValidationError as exc:
        print(f"validation error: {exc}", file=err)
        return EXIT_INPUT
    except OSError as exc:
        print(f"input error: {exc}", file=err)
        return EXIT_INPUT
    except (ValueError, TypeError) as exc:
        print(f"input error: {exc}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

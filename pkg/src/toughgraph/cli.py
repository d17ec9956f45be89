"""Command-line front end: tau / check / construct / verify.

Exit-code contract: 0 = predicate holds or verification clean, 1 = predicate
false or verification failures, 2 = usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .errors import DomainError, ParseError, SizeCapError, UnsupportedSizeError
from .gadgets import (
    attach_pendants,
    blow_up,
    build_g_alpha,
    build_g_t_alpha,
    build_h,
    glue,
    glue_vertex_for_h_prime,
    minimize_to_h_prime,
)
from .graph import Graph, parse_edge_list, parse_graph6, to_edge_list, to_graph6
from .harness import SweepSpec
from .recognizers import (
    is_almost_minimally_1_tough,
    is_alpha_critical_decision,
    is_alpha_critical_graph,
    is_minimally_t_tough,
)
from .solver import is_t_tough, toughness


class CliError(Exception):
    """Usage or input problem; maps to exit code 2."""


def _parse_t(text: str) -> Fraction:
    try:
        t = Fraction(text)  # accepts "a/b" and integer text, auto-reduced
    except (ValueError, ZeroDivisionError):
        raise CliError(f"cannot parse t value {text!r}") from None
    if t <= 0:
        raise CliError("t must be positive")
    return t


def _read_graph(source: str, fmt: str) -> Graph:
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        text = Path(source).read_text()
    else:
        # inline graph6 (edgelist is multi-line, so inline only makes sense here)
        if fmt != "graph6":
            raise CliError(f"input file not found: {source}")
        text = source
    text = text.strip("\n")
    try:
        if fmt == "graph6":
            return parse_graph6(text.strip())
        return parse_edge_list(text)
    except ParseError as exc:
        raise CliError(f"parse error at offset {exc.offset}: {exc}") from None


def _write_graph(g: Graph, fmt: str, path) -> None:
    out = to_edge_list(g) if fmt == "edgelist" else to_graph6(g) + "\n"
    if path:
        Path(path).write_text(out)
    else:
        sys.stdout.write(out)


def cmd_tau(args) -> int:
    g = _read_graph(args.input, args.format)
    res = toughness(g)
    if res.witness is None:
        if res.value.is_zero:
            print("0 witness=[]")
        else:
            print(str(res.value))
    else:
        print(f"{res.value} witness={list(res.witness.removed)}")
    return 0


def cmd_check(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.cls == "t-tough":
        if args.t is None:
            raise CliError("check t-tough requires --t")
        return 0 if is_t_tough(g, _parse_t(args.t))[0] else 1
    if args.cls == "min-tough":
        if args.t is None:
            raise CliError("check min-tough requires --t")
        ok, cert = is_minimally_t_tough(g, _parse_t(args.t))
        if ok and args.certificate:
            Path(args.certificate).write_text(
                json.dumps(cert.to_json_dict(), indent=2) + "\n"
            )
        return 0 if ok else 1
    if args.cls == "almost-min-1":
        cls = is_almost_minimally_1_tough(g)
        print(cls.value)
        return 0 if cls.holds else 1
    if args.cls == "alpha-critical":
        if args.k is not None:
            ok = is_alpha_critical_decision(g, args.k)
        else:
            ok = is_alpha_critical_graph(g)
        return 0 if ok else 1
    raise CliError(f"unknown class {args.cls!r}")


def cmd_construct(args) -> int:
    kind = args.kind
    labeling = None
    if kind == "g-alpha":
        if args.alpha is None:
            raise CliError("construct g-alpha requires --alpha")
        g = _read_graph(args.input, args.format)
        out, labeling = build_g_alpha(g, args.alpha)
    elif kind == "g-t-alpha":
        if args.alpha is None or args.t is None:
            raise CliError("construct g-t-alpha requires --t and --alpha")
        t = _parse_t(args.t)
        if t.denominator != 1:
            raise CliError("construct g-t-alpha requires integer t")
        g = _read_graph(args.input, args.format)
        out, labeling = build_g_t_alpha(g, t.numerator, args.alpha)
    elif kind == "pendants":
        if args.b is None:
            raise CliError("construct pendants requires --b")
        g = _read_graph(args.input, args.format)
        out, labeling = attach_pendants(g, args.b)
    elif kind == "H":
        if args.a is None or args.b is None:
            raise CliError("construct H requires --a and --b")
        out, labeling = build_h(args.a, args.b)
    elif kind == "H-prime":
        if args.a is None or args.b is None:
            raise CliError("construct H-prime requires --a and --b")
        h, _ = build_h(args.a, args.b)
        out = minimize_to_h_prime(h, Fraction(args.a, args.b))
    elif kind == "glue":
        if args.a is None or args.b is None:
            raise CliError("construct glue requires --a and --b")
        g = _read_graph(args.input, args.format)
        h, _ = build_h(args.a, args.b)
        h_prime = minimize_to_h_prime(h, Fraction(args.a, args.b))
        u = glue_vertex_for_h_prime(h_prime, args.a, args.b)
        out, labeling = glue(g, h_prime, u)
    elif kind == "blowup":
        if args.vertex is None or args.size is None:
            raise CliError("construct blowup requires --vertex and --size")
        g = _read_graph(args.input, args.format)
        out = blow_up(g, args.vertex, args.size)
    else:
        raise CliError(f"unknown construction {kind!r}")
    _write_graph(out, args.format, args.output)
    if args.labeling:
        if labeling is None:
            raise CliError(f"construction {kind!r} has no vertex labeling")
        Path(args.labeling).write_text(
            json.dumps(labeling.to_json_dict(), indent=2) + "\n"
        )
    return 0


def _default_jobs() -> int:
    env = os.environ.get("TOUGHGRAPH_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise CliError(f"TOUGHGRAPH_JOBS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    graphs = None
    if args.graphs:
        lines = Path(args.graphs).read_text().split()
        graphs = tuple(lines)
    spec = SweepSpec(
        check=args.check,
        n_max=args.n_max,
        n_min=args.n_min,
        alpha_set=tuple(args.alpha) if args.alpha else (1,),
        t=args.t,
        a=args.a,
        b=args.b,
        size_max=args.size_max,
        vertex_cap=args.vertex_cap,
        jobs=jobs,
        graphs=graphs,
    )
    try:
        report = spec.run()
    except DomainError as exc:
        raise CliError(str(exc)) from None
    out = report.to_json() + "\n"
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return 0 if report.ok else 1


def _add_io_args(p: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        p.add_argument(
            "input",
            nargs="?",
            default="-",
            help="file path, inline graph6, or '-' for stdin (default)",
        )
    p.add_argument(
        "--format",
        choices=("graph6", "edgelist"),
        default="graph6",
        help="graph text format for input and output",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toughgraph",
        description="Exact toughness computation, minimally tough graph "
        "recognition, reduction gadgets, and exhaustive verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tau", help="compute exact toughness with a witness")
    _add_io_args(p)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("check", help="decide membership in a graph class")
    p.add_argument(
        "cls",
        choices=("t-tough", "min-tough", "almost-min-1", "alpha-critical"),
        metavar="class",
    )
    _add_io_args(p)
    p.add_argument("--t", help="toughness threshold, 'a/b' or integer")
    p.add_argument("--k", type=int, help="clique/independence parameter")
    p.add_argument("--certificate", help="write the JSON certificate here")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build a reduction gadget")
    p.add_argument(
        "kind",
        choices=("g-alpha", "g-t-alpha", "pendants", "H", "H-prime", "glue", "blowup"),
    )
    _add_io_args(p)
    p.add_argument("--t", help="integer t for g-t-alpha")
    p.add_argument("--alpha", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--vertex", type=int, help="vertex to blow up")
    p.add_argument("--size", type=int, help="clique size for blowup")
    p.add_argument("--output", help="write the graph here instead of stdout")
    p.add_argument("--labeling", help="write the labeling sidecar JSON here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a harness sweep and report")
    p.add_argument(
        "--check",
        required=True,
        choices=(
            "reduction-min1tough",
            "reduction-min-t-tough",
            "reduction-one-over-b",
            "reduction-a-over-b",
            "g-alpha-tough",
            "blowup-alpha-critical",
            "structural",
        ),
    )
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--alpha", type=int, action="append", help="repeatable")
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--size-max", type=int, default=2)
    p.add_argument("--vertex-cap", type=int, default=24)
    p.add_argument("--jobs", type=int, help="worker count (default: all cores)")
    p.add_argument("--graphs", help="graph6 file overriding the built-in enumerator")
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, DomainError, SizeCapError, UnsupportedSizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())

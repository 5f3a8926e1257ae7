"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import caps as _caps
from .analysis import reduce
from .errors import ParseError, SizeLimitExceeded, ValidationError
from .graph import build_graph, to_dot, to_json
from .paper_check import verify_paper
from .selectors import SelectorError, build, parse_family
from .semigroup import Semigroup, load, serialize
from .verifier import analyze, scan

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _add_caps(p: argparse.ArgumentParser):
    p.add_argument("--cap-order", type=int, help=f"max semigroup order (env {_caps.ENV_VARS['order']})")
    p.add_argument("--cap-clique", type=int, help=f"max clique-search vertices (env {_caps.ENV_VARS['clique']})")
    p.add_argument("--cap-iso", type=int, help=f"max isomorphism vertices (env {_caps.ENV_VARS['iso']})")


def _add_source(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", metavar="SEL", help="e.g. powerset:3, zn:4, 'powerset:3 x zn:4'")
    src.add_argument("--product", nargs=2, metavar=("SEL", "SEL"), help="product of two sources")
    src.add_argument("--file", metavar="PATH", help="Cayley-table JSON file")


def _add_output(p: argparse.ArgumentParser, formats, default):
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("-o", "--output", metavar="PATH", help="write here instead of stdout")


def _caps_from(args) -> _caps.Caps:
    base = _caps.Caps.from_env()
    return _caps.Caps(
        order=args.cap_order if args.cap_order is not None else base.order,
        clique=args.cap_clique if args.cap_clique is not None else base.clique,
        iso=args.cap_iso if args.cap_iso is not None else base.iso,
    )


def _source(args, caps: _caps.Caps) -> Semigroup:
    if args.file:
        return load(args.file)
    if args.product:
        return build(" x ".join(args.product), caps)
    return build(args.builtin, caps)


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args, caps) -> int:
    _emit(serialize(_source(args, caps)), args.output)
    return EXIT_OK


def cmd_analyze(args, caps) -> int:
    report = analyze(_source(args, caps), caps)
    _emit(report.to_json() if args.format == "json" else report.to_text(), args.output)
    return EXIT_OK


def cmd_verify_paper(args, caps) -> int:
    result = verify_paper(caps=caps)
    _emit(result.to_json() if args.format == "json" else result.transcript(), args.output)
    return EXIT_OK if result.passed else EXIT_FAILED


def cmd_export(args, caps) -> int:
    g = build_graph(_source(args, caps))
    if args.reduced:
        r = reduce(g)
        text = r.to_json() if args.format == "json" else to_dot(r, "G_r")
    else:
        text = to_json(g) if args.format == "json" else to_dot(g, "G")
    _emit(text, args.output)
    return EXIT_OK


def cmd_search(args, caps) -> int:
    if args.budget is not None and args.budget < 0:
        raise InputError("--budget must be non-negative")
    try:
        members = parse_family(args.family, caps)
    except SelectorError as exc:
        raise InputError(str(exc)) from None
    outcomes = scan(members, args.budget, caps)
    witnesses = [(o.selector, w) for o in outcomes for w in o.witnesses]
    if args.format == "json":
        doc = [dict(member=sel, **w.to_dict()) for sel, w in witnesses]
        text = json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
    else:
        lines = []
        for sel, w in witnesses:
            lines.append(f"{sel}: {w.conjecture.value}")
            lines.extend(f"  {f.text}" for f in w.facts)
        text = "\n".join(lines) + ("\n" if lines else "")
    _emit(text, args.output)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zdgraph", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a validated Cayley-table file")
    _add_source(p)
    p.add_argument("-o", "--output", metavar="PATH")
    _add_caps(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="report every invariant of G(S)")
    _add_source(p)
    _add_output(p, ["json", "text"], "text")
    _add_caps(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify-paper", help="re-check the P(3) x Z_4 counter-example")
    _add_output(p, ["json", "text"], "text")
    _add_caps(p)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("export", help="write G(S) or its reduced graph")
    _add_source(p)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--graph", action="store_true", help="the zero-divisor graph (default)")
    which.add_argument("--reduced", action="store_true", help="the reduced graph")
    _add_output(p, ["json", "dot"], "dot")
    _add_caps(p)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("search", help="scan a family for conjecture counter-examples")
    p.add_argument("--family", required=True, help="e.g. 'powerset:2..3 x zn:2..5'")
    p.add_argument("--budget", type=int, help="max members analyzed")
    _add_output(p, ["json", "text"], "text")
    _add_caps(p)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        caps = _caps_from(args)
        return args.func(args, caps)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValidationError as exc:
        witness = f" witness {exc.witness}" if exc.witness else ""
        print(f"error: invalid semigroup: {exc}{witness}", file=sys.stderr)
        return EXIT_INPUT
    except (ParseError, SelectorError, InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

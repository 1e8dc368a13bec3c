"""Command line front end: generate, analyze, resolve, bound."""
from __future__ import annotations

import argparse
import sys

from .errors import PolytopeError
from .generators import GENERATORS, generate
from .gh import khovanskii_bound
from .jsonio import dump_json, load_polytope, polytope_to_json
from .report import analyze, parse_checks
from .resolution import standard_resolution

NEEDS_DIM = {"simplex", "cube", "cross"}
NEEDS_BASE = {"pyramid", "bipyramid", "prism"}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edgesimple", description="Exact checks on polytopes simple in edges.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a zoo polytope as JSON")
    g.add_argument("name", choices=sorted(GENERATORS))
    g.add_argument("--dim", type=int, help="dimension for simplex, cube, cross")
    g.add_argument("--base", help="base polytope JSON for pyramid, bipyramid, prism")
    g.add_argument("--output", "-o", help="output file (default stdout)")

    a = sub.add_parser("analyze", help="run checks and emit a JSON report")
    a.add_argument("--input", "-i", required=True)
    a.add_argument("--output", "-o")
    a.add_argument("--checks", default="all", help='comma separated check names or "all"')
    a.add_argument("--explore", action="store_true",
                   help="run the kernel check on inputs that are not infrequent, report only")

    r = sub.add_parser("resolve", help="cut off every nonsimple vertex")
    r.add_argument("--input", "-i", required=True)
    r.add_argument("--output", "-o", help="resolved polytope JSON (default stdout)")
    r.add_argument("--map", help="resolution map JSON")

    b = sub.add_parser("bound", help="Khovanskii average-incidence bound")
    b.add_argument("d", type=int)
    b.add_argument("k", type=int)
    b.add_argument("l", type=int)
    return ap


def _write(obj, path) -> None:
    text = dump_json(obj, path)
    if path is None:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    if args.name in NEEDS_DIM:
        if args.dim is None:
            raise PolytopeError(f"{args.name} needs --dim")
        p = generate(args.name, args.dim)
    elif args.name in NEEDS_BASE:
        if args.base is None:
            raise PolytopeError(f"{args.name} needs --base")
        p = generate(args.name, load_polytope(args.base))
    else:
        p = generate(args.name)
    _write(polytope_to_json(p), args.output)
    return 0


def cmd_analyze(args) -> int:
    checks = parse_checks(args.checks)
    rep = analyze(load_polytope(args.input), checks, explore=args.explore)
    _write(rep.to_json(), args.output)
    return 1 if rep.failed else 0


def cmd_resolve(args) -> int:
    R = standard_resolution(load_polytope(args.input))
    _write(polytope_to_json(R.resolved), args.output)
    if args.map:
        dump_json(R.to_json(), args.map)
    return 0


def cmd_bound(args) -> int:
    print(khovanskii_bound(args.d, args.k, args.l))
    return 0


COMMANDS = {"generate": cmd_generate, "analyze": cmd_analyze, "resolve": cmd_resolve, "bound": cmd_bound}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except PolytopeError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: IOFailure: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

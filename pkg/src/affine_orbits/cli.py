"""Command-line front end.

Every command prints one JSON document on stdout.  Exit codes: 0 success
(or "equivalent"), 1 not equivalent / witness rejected, 2 parse error,
3 semantic error.
"""
from __future__ import annotations

import argparse
import json
import shlex
import sys
from fractions import Fraction
from typing import Sequence

from .farey import AffineWitness
from .lattice import lattice_canon
from .oracle import SearchBudget, bfs_orbit, c_by_definition, n1_classify, verify_witness
from .orbits import (
    GroupInvariant,
    SymBasis,
    SymPoint,
    count_orbits,
    invariant_of,
    minimal_space,
    witness,
)
from .parsing import ParseError, parse_equation, parse_point, parse_rational, parse_sym_decls
from .spaces import canonical_space, space_from_equations

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Exit(EXIT_PARSE, message)


def _rows(lat) -> list[list[str]]:
    return [[str(x) for x in row] for row in lat.rows]


def _point_json(p: SymPoint) -> list[str]:
    return [s.strip() for s in str(p)[1:-1].split(", ")] if p.n else []


def _invariant_json(x: SymPoint) -> dict:
    inv = invariant_of(x)
    fx = minimal_space(x)
    return {
        "n": x.n,
        "basis": ["1", *x.basis.symbols],
        "rank": inv.rank,
        "dim_Fx": fx.dim,
        "d": inv.d,
        "c": inv.c,
        "G": _rows(inv.group.lattice),
        "Fx": fx.equation_strings(),
    }


def _points(args, *texts) -> list[SymPoint]:
    basis = parse_sym_decls(args.sym)
    return [parse_point(t, basis, args.n) for t in texts]


def cmd_invariants(args) -> tuple[int, dict]:
    (x,) = _points(args, args.point)
    return EXIT_OK, _invariant_json(x)


def _difference(x: SymPoint, y: SymPoint) -> str:
    ix, iy = invariant_of(x), invariant_of(y)
    if ix.group != iy.group:
        if ix.rank != iy.rank:
            return f"rank: {ix.rank} ≠ {iy.rank}"
        if ix.d != iy.d:
            return f"d: {ix.d} ≠ {iy.d}"
        return f"G: {ix.group.lattice} ≠ {iy.group.lattice}"
    return f"c: {ix.c} ≠ {iy.c}"


def cmd_equiv(args) -> tuple[int, dict]:
    x, y = _points(args, args.x, args.y)
    g = witness(x, y)
    if g is None:
        return EXIT_NO, {"equivalent": False, "reason": _difference(x, y)}
    return EXIT_OK, {"equivalent": True, "witness": g.to_json()}


def cmd_verify(args) -> tuple[int, dict]:
    x, y = _points(args, args.x, args.y)
    try:
        with open(args.witness_file, encoding="utf-8") as fh:
            obj = json.load(fh)
        g = AffineWitness.from_json(obj.get("witness", obj))
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise _Exit(EXIT_PARSE, f"cannot read witness: {exc}") from exc
    ok = verify_witness(g, x, y)
    return (EXIT_OK if ok else EXIT_NO), {"valid": ok}


def cmd_canon(args) -> tuple[int, dict]:
    space, p = canonical_space((args.e, args.d, args.c), args.n)
    rep = SymPoint.rational([0] * args.e + [Fraction(p, args.d)] * (args.n - args.e))
    return EXIT_OK, {
        "n": args.n,
        "e": args.e,
        "d": args.d,
        "c": args.c,
        "p": p,
        "space": space.equation_strings(),
        "representative": _point_json(rep),
    }


def _count_group(args) -> GroupInvariant:
    rank = args.n if args.rank is None else args.rank
    if rank < 1:
        raise _Exit(EXIT_SEMANTIC, "rank must be at least 1")
    if args.d < 1:
        raise _Exit(EXIT_SEMANTIC, "d must be positive")
    basis = parse_sym_decls(args.sym)
    if basis.k < rank - 1:
        basis = SymBasis(tuple(f"s{i}" for i in range(1, rank)))
    m = basis.k + 1
    gens = [[Fraction(int(j == 0), args.d) for j in range(m)]]
    gens += [[Fraction(int(j == i)) for j in range(m)] for i in range(1, rank)]
    return GroupInvariant(basis, lattice_canon(gens, m))


def cmd_count(args) -> tuple[int, dict]:
    g = _count_group(args)
    count, reps = count_orbits(g, args.n)
    return EXIT_OK, {
        "n": args.n,
        "d": args.d,
        "rank": g.rank,
        "basis": ["1", *g.basis.symbols],
        "count": count,
        "representatives": [_point_json(r) for r in reps],
        "c": [invariant_of(r).c for r in reps],
    }


def cmd_space(args) -> tuple[int, dict]:
    space = space_from_equations([parse_equation(t, args.n) for t in args.equations], args.n)
    e, d, c = space.invariants
    return EXIT_OK, {"n": args.n, "e": e, "d": d, "c": c, "equations": space.equation_strings()}


def cmd_oracle_bfs(args) -> tuple[int, dict]:
    (x,) = _points(args, args.point)
    budget = SearchBudget(args.budget_depth, args.budget_bound, args.budget_nodes)
    window = bfs_orbit(x.as_rational(), budget)
    out = {"size": len(window), "complete": window.complete}
    if args.target is not None:
        (y,) = _points(args, args.target)
        out["reached"] = y.as_rational() in window
    else:
        out["points"] = sorted(_point_json(SymPoint.rational(p)) for p in window.points)
    return EXIT_OK, out


def cmd_oracle_cdef(args) -> tuple[int, dict]:
    space = space_from_equations([parse_equation(t, args.n) for t in args.equations], args.n)
    if space.dim != args.n - 1:
        raise _Exit(EXIT_SEMANTIC, "the literal search is meant for hyperplanes")
    return EXIT_OK, {"c": c_by_definition(space, args.cap), "c_of": space.c}


def cmd_oracle_n1(args) -> tuple[int, dict]:
    d, c = n1_classify(parse_rational(args.value))
    return EXIT_OK, {"d": d, "c": c}


def _positive_rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-n", "--n", dest="n", type=int, help="ambient dimension")
    common.add_argument("--sym", action="append", default=[], metavar="NAME=VALUE",
                        help="declare a real symbol (repeatable)")
    common.add_argument("--json", action="store_true", help="JSON output (the default)")
    common.add_argument("-v", "--verbose", action="store_true", help="summary on stderr")

    parser = _Parser(prog="affine-orbits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[common], help="(G_x, c) of a point")
    p.add_argument("point")
    p.set_defaults(func=cmd_invariants, need_n=True)

    p = sub.add_parser("equiv", parents=[common], help="decide equivalence, print a witness")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_equiv, need_n=True)

    p = sub.add_parser("verify", parents=[common], help="re-check a witness file exactly")
    p.add_argument("witness_file")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_verify, need_n=True)

    p = sub.add_parser("canon", parents=[common], help="canonical space for (e, d, c)")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--c", type=int, default=1)
    p.set_defaults(func=cmd_canon, need_n=True)

    p = sub.add_parser("count", parents=[common], help="orbits sharing a group")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rank", type=int, default=None, help="rank of the group (default n)")
    p.set_defaults(func=cmd_count, need_n=True)

    p = sub.add_parser("space", parents=[common], help="(e, d, c) of a space given by equations")
    p.add_argument("equations", nargs="+", metavar="EQUATION")
    p.set_defaults(func=cmd_space, need_n=True)

    p = sub.add_parser("oracle", help="brute-force checks for debugging")
    osub = p.add_subparsers(dest="oracle_command", required=True, parser_class=_Parser)
    q = osub.add_parser("bfs", parents=[common], help="bounded orbit search")
    q.add_argument("point")
    q.add_argument("--target", default=None)
    q.add_argument("--budget-depth", type=int, default=8)
    q.add_argument("--budget-bound", type=_positive_rational, default=Fraction(3))
    q.add_argument("--budget-nodes", type=int, default=1_000_000)
    q.set_defaults(func=cmd_oracle_bfs, need_n=True)
    q = osub.add_parser("cdef", parents=[common], help="c of a hyperplane by literal search")
    q.add_argument("equations", nargs="+", metavar="EQUATION")
    q.add_argument("--cap", type=int, default=30)
    q.set_defaults(func=cmd_oracle_cdef, need_n=True)
    q = osub.add_parser("n1", parents=[common], help="closed-form (d, c) on the line")
    q.add_argument("value")
    q.set_defaults(func=cmd_oracle_n1, need_n=False)

    sub.add_parser("batch", help="read one command per stdin line, print one JSON per line").set_defaults(
        func=None, need_n=False)
    return parser


def run(argv: Sequence[str]) -> tuple[int, dict]:
    """Parse and execute one command; returns ``(exit_code, payload)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command == "batch":
            raise _Exit(EXIT_PARSE, "batch cannot be nested")
        if args.need_n and (args.n is None or args.n < 1):
            raise _Exit(EXIT_PARSE, "a positive -n is required")
        return args.func(args)
    except _Exit as exc:
        return exc.code, {"error": str(exc)}
    except ParseError as exc:
        return EXIT_PARSE, {"error": str(exc)}
    except ValueError as exc:
        return EXIT_SEMANTIC, {"error": f"{type(exc).__name__}: {exc}"}


def _dump(payload: dict, indent=None) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=indent)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if argv[:1] == ["batch"]:
        worst = EXIT_OK
        for line in sys.stdin:
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                code, payload = run(shlex.split(line))
            except ValueError as exc:
                code, payload = EXIT_PARSE, {"error": str(exc)}
            payload["exit"] = code
            print(_dump(payload), flush=True)
            worst = max(worst, code)
        return worst
    code, payload = run(argv)
    print(_dump(payload, indent=2))
    if "-v" in argv or "--verbose" in argv:
        summary = payload.get("error") or ", ".join(
            f"{k}={v}" for k, v in payload.items() if not isinstance(v, (list, dict)))
        print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

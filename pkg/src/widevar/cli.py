"""Command-line entry point: ``widevar catalog|analyze|triangle|clifford-check``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from .catalog import NAMES, catalog
from .clifford import clifford_suite
from .critsolve import DegenerateSystemError, SolverConfig
from .inputs import InputError, load_problem, problem_from_catalog, problem_to_dict
from .report import EXIT_CHECK, EXIT_INPUT, EXIT_OK, analyze, to_json, to_text
from .torus2 import TriangleCounts, triangle_report


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="widevar", description="Wide varieties, discriminants and residue identities.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log warnings and progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="list or show built-in examples")
    cat_sub = cat.add_subparsers(dest="action", required=True)
    cat_sub.add_parser("list")
    show = cat_sub.add_parser("show")
    show.add_argument("name", choices=NAMES)

    an = sub.add_parser("analyze", help="run the full pipeline on an example or a fan file")
    src = an.add_mutually_exclusive_group(required=True)
    src.add_argument("--example", metavar="NAME")
    src.add_argument("--input", metavar="PATH")
    an.add_argument("--format", choices=("json", "text"), default="text")
    an.add_argument("--tol", type=float, default=1e-9, help="check tolerance (default 1e-9)")
    an.add_argument("--starts", type=int, default=None, help="number of Newton starts")
    an.add_argument("--seed", type=int, default=42)
    an.add_argument("--expected", type=int, default=None, help="expected number of critical points")
    an.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")

    tr = sub.add_parser("triangle", help="two-torus triangle algebra and mod-2 checks")
    tr.add_argument("--np", dest="n_p", type=int, required=True)
    tr.add_argument("--nq", dest="n_q", type=int, required=True)
    tr.add_argument("--nr", dest="n_r", type=int, required=True)
    tr.add_argument("--npqr", dest="n_pqr", type=int, required=True)
    tr.add_argument("--shift", type=Fraction, default=None, help="basepoint shift r (integer or p/q)")

    cl = sub.add_parser("clifford-check", help="associativity and relation checks for Cliff(Q)")
    cl.add_argument("--n", type=int, default=3)
    cl.add_argument("--trials", type=int, default=200)
    cl.add_argument("--seed", type=int, default=0)
    cl.add_argument("--matrix", type=str, default=None,
                    help='JSON matrix, entries as numbers or "p/q" strings')
    return ap


def _catalog(args) -> int:
    if args.action == "list":
        for name, e in catalog().items():
            print(f"{name:10s} {e.expected_count:3d}  {e.title}")
        return EXIT_OK
    e = catalog(args.name)
    data = problem_to_dict(problem_from_catalog(args.name))
    data.update(title=e.title, delta=e.delta_text, provenance=e.provenance, notes=list(e.notes))
    print(json.dumps(data, indent=2))
    return EXIT_OK


def _analyze(args) -> int:
    try:
        problem = problem_from_catalog(args.example) if args.example else load_problem(args.input)
        if args.expected is not None:
            problem = type(problem)(**{**problem.__dict__, "expected": args.expected})
        cfg = SolverConfig(starts=args.starts, seed=args.seed)
        report, code = analyze(problem, cfg, tol=args.tol, timing=args.timing)
    except (InputError, DegenerateSystemError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if code == EXIT_INPUT:
        print(f"error: {report['error']}", file=sys.stderr)
        return code
    print(to_json(report) if args.format == "json" else to_text(report))
    return code


def _triangle(args) -> int:
    c = TriangleCounts(args.n_p, args.n_q, args.n_r, args.n_pqr)
    rep = triangle_report(c, args.shift)
    print(json.dumps(rep, indent=2))
    ok = rep["identity_holds"] and all(ch["passed"] for ch in rep["checks"])
    if "shift" in rep:
        ok = ok and rep["shift"]["invariant"]
    return EXIT_OK if ok else EXIT_CHECK


def _clifford(args) -> int:
    Q = None
    if args.matrix is not None:
        try:
            Q = [[Fraction(x) if isinstance(x, (int, str)) else x for x in row] for row in json.loads(args.matrix)]
        except (json.JSONDecodeError, ValueError, TypeError) as exc:
            print(f"error: clifford: bad matrix: {exc}", file=sys.stderr)
            return EXIT_INPUT
    try:
        rep = clifford_suite(args.n, args.trials, args.seed, Q)
    except ValueError as exc:
        print(f"error: clifford: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(rep, indent=2))
    return EXIT_OK if rep["passed"] else EXIT_CHECK


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(name)s: %(message)s")
    handler = {"catalog": _catalog, "analyze": _analyze, "triangle": _triangle, "clifford-check": _clifford}
    return handler[args.command](args)


if __name__ == "__main__":
    sys.exit(main())

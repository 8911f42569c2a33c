"""Command-line front end: a thin client over the typed handler layer.

Exit codes: 0 success, 2 route disagreement (and argparse usage errors),
3 non-integrable input, 4 unstable input, 5 parse errors, 1 verification
failure or other domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import api
from .checks import run_all
from .errors import (
    CoHiggsError,
    NonHomogeneous,
    NotIntegrable,
    NotStable,
    ParseError,
    RouteDisagreement,
    ZeroSection,
)

EXIT_ROUTE_DISAGREEMENT = 2
EXIT_NOT_INTEGRABLE = 3
EXIT_NOT_STABLE = 4
EXIT_PARSE_ERROR = 5


def _parse_k_range(args, parser, lo=3, hi=64) -> tuple[int, int]:
    if args.k is not None and args.k_range is not None:
        parser.error("give either --k or --k-range, not both")
    if args.k is not None:
        k_min = k_max = args.k
    elif args.k_range is not None:
        try:
            a, b = args.k_range.split("..")
            k_min, k_max = int(a), int(b)
        except ValueError:
            parser.error(f"bad --k-range {args.k_range!r} (expected a..b)")
    else:
        parser.error("need --k or --k-range")
    if not (lo <= k_min <= k_max <= hi):
        parser.error(f"k out of range [{lo}, {hi}]")
    return k_min, k_max


def cmd_tables(args, parser) -> int:
    k_min, k_max = _parse_k_range(args, parser)
    routes = args.routes.split(",") if args.routes else None
    resp = api.handle_tables(
        api.TablesRequest(k_min=k_min, k_max=k_max, routes=routes)
    )
    if args.format == "json":
        print(resp.model_dump_json(indent=2))
    else:
        for table in resp.tables:
            print(table.markdown)
            print()
        print(f"routes checked: {', '.join(resp.tables[0].routes)}; all agree")
    return 0


def cmd_solve(args, parser) -> int:
    resp = api.handle_solve(
        api.SolveRequest(bundle=args.bundle, c=args.C, a=args.A, b=args.B)
    )
    if args.format == "json":
        print(resp.model_dump_json(indent=2))
        return 0
    print(f"bundle {resp.bundle}: stable = {resp.stable}")
    print(f"solution space: λ-dim {resp.lambda_dim}, μ-dim {resp.mu_dim}")
    print(f"λ = {resp.lam}, μ = {resp.mu}")
    print(f"normal form: q = {resp.q}, C = {resp.c_normalized}")
    print(f"determinant zero: {resp.determinant_zero} (nilpotent: {resp.nilpotent})")
    print("regularity samples:")
    for r in resp.regularity:
        flag = "field vanishes (non-regular)" if r["field_vanishes"] else "nonzero"
        print(f"  {r['point']}: {flag}")
    return 0


def cmd_h1(args, parser) -> int:
    resp = api.handle_h1(
        api.H1Request(family=args.family, k=args.k, seed=args.seed)
    )
    if args.format == "json":
        print(resp.model_dump_json(indent=2))
        return 0
    print(f"family {resp.family}: h1 = {resp.h1}")
    print(
        f"E2 terms: e2_10 = {resp.e2_10}, e2_01 = {resp.e2_01},"
        f" d2 rank = {resp.d2_rank_on_01}"
    )
    for line in resp.ledger:
        print(f"  {line}")
    return 0


def cmd_chern(args, parser) -> int:
    k_min, k_max = _parse_k_range(args, parser, lo=0)
    resp = api.handle_chern(api.ChernRequest(k_min=k_min, k_max=k_max))
    if args.format == "json":
        print(resp.model_dump_json(indent=2))
        return 0
    print("| k | c1 | c2 | dual c1 | dual c2 | normalized | family index |")
    print("| --- | --- | --- | --- | --- | --- | --- |")
    for r in resp.rows:
        print(
            f"| {r.k} | {r.c1} | {r.c2} | {r.dual_c1} | {r.dual_c2} |"
            f" ({r.normalized_c1}, {r.normalized_c2}) | {r.family_index} |"
        )
    return 0


def cmd_conic(args, parser) -> int:
    resp = api.handle_conic(api.ConicRequest(rho=args.rho))
    if args.format == "json":
        print(resp.model_dump_json(indent=2))
        return 0
    kind = "singular" if resp.singular else "nonsingular"
    print(f"{resp.rho}: {kind} (symmetric matrix rank {resp.matrix_rank})")
    return 0


def cmd_verify_all(args, parser) -> int:
    report = run_all(args.seed)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_markdown())
        print()
        for c in sorted(report.checks, key=lambda c: c.id):
            print(f"{c.status.upper():4s} {c.id} [{c.citation}]")
    if report.passed:
        return 0
    print(
        "failing checks: " + ", ".join(report.failing_ids()), file=sys.stderr
    )
    return 1


def cmd_serve(args, parser) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohiggs",
        description="Exact co-Higgs bundle calculator for the projective plane",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("md", "json"), default="md")

    p_tables = sub.add_parser("tables", help="twisted-endomorphism cohomology tables")
    p_tables.add_argument("--k", type=int)
    p_tables.add_argument("--k-range", dest="k_range")
    p_tables.add_argument("--routes", help="comma list: closed,kunneth,rr")
    add_format(p_tables)

    p_solve = sub.add_parser("solve", help="solve and normalize a split-bundle field")
    p_solve.add_argument("--bundle", required=True, help="split:m1,m2")
    p_solve.add_argument("--C", required=True, help="vector-field triple literal")
    p_solve.add_argument("--A", help="optional A component (triple literal)")
    p_solve.add_argument("--B", help="optional B component (triple literal)")
    add_format(p_solve)

    p_h1 = sub.add_parser("h1", help="first-order deformation dimension")
    p_h1.add_argument(
        "--family",
        required=True,
        help="split:0,-1 | split:0,0 | tangent | schwarzenberger",
    )
    p_h1.add_argument("--k", type=int)
    p_h1.add_argument("--seed", type=int, default=0)
    add_format(p_h1)

    p_chern = sub.add_parser("chern", help="Chern data and normalized coverage")
    p_chern.add_argument("--k", type=int)
    p_chern.add_argument("--k-range", dest="k_range")
    add_format(p_chern)

    p_conic = sub.add_parser("conic", help="classify a conic")
    p_conic.add_argument("--rho", required=True, help="degree-2 polynomial literal")
    add_format(p_conic)

    p_verify = sub.add_parser("verify-all", help="run the full verification suite")
    p_verify.add_argument("--seed", type=int, default=0)
    add_format(p_verify)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


COMMANDS = {
    "tables": cmd_tables,
    "solve": cmd_solve,
    "h1": cmd_h1,
    "chern": cmd_chern,
    "conic": cmd_conic,
    "verify-all": cmd_verify_all,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser)
    except (ParseError, NonHomogeneous) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (NotIntegrable, ZeroSection) as e:
        print(f"not integrable: {e}", file=sys.stderr)
        return EXIT_NOT_INTEGRABLE
    except NotStable as e:
        print(f"not stable: {e}", file=sys.stderr)
        return EXIT_NOT_STABLE
    except RouteDisagreement as e:
        print(f"route disagreement: {e}", file=sys.stderr)
        for line in e.ledger:
            print(f"  {line}", file=sys.stderr)
        return EXIT_ROUTE_DISAGREEMENT
    except ValueError as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except CoHiggsError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

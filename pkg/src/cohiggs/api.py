"""Typed request/response layer shared by the HTTP service and the CLI.

Handlers take a request model, run the exact computation, and return a
response model; they raise the package's domain errors, which the
service maps to HTTP errors and the CLI maps to exit codes.
"""

from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, Field

from . import defcomplex
from .checks import run_all
from .errors import NotIntegrable, NotStable
from .eulercalc import TwistedVectorField, tfield_context, zero_locus
from .exactlin import ExactMatrix, solve
from .higgsfields import (
    gauge_normalize,
    hitchin_det,
    is_nilpotent,
    is_stable_split,
    parse_bundle,
    parse_tvf,
    random_split_sample,
    random_tangent_sample,
    regularity_check,
    solve_integrable,
)
from .polyring import GradedPoly, basis, parse, to_str
from .schwarz import (
    ROUTES,
    build_table,
    chern_coverage,
    conic_matrix,
    conic_singular,
)
from .sheafdim import ROUTE_CLOSED, ROUTE_KUNNETH, ROUTE_RR, schwarz_chern

ROUTE_ALIASES = {
    "closed": ROUTE_CLOSED,
    "closed-form": ROUTE_CLOSED,
    "kunneth": ROUTE_KUNNETH,
    "künneth": ROUTE_KUNNETH,
    "künneth-chase": ROUTE_KUNNETH,
    "rr": ROUTE_RR,
    "riemann-roch": ROUTE_RR,
}


def resolve_routes(names: list[str] | None) -> tuple[str, ...]:
    if not names:
        return ROUTES
    out = []
    for n in names:
        key = n.strip().lower()
        if key not in ROUTE_ALIASES:
            raise ValueError(f"unknown route {n!r} (closed|kunneth|rr)")
        out.append(ROUTE_ALIASES[key])
    return tuple(dict.fromkeys(out))


class TablesRequest(BaseModel):
    k_min: int = Field(ge=3, le=64)
    k_max: int = Field(ge=3, le=64)
    routes: list[str] | None = None


class TableRow(BaseModel):
    sheaf: str
    h0: int
    h1: int
    h2: int


class TableResult(BaseModel):
    k: int
    routes: list[str]
    rows: list[TableRow]
    markdown: str


class TablesResponse(BaseModel):
    tables: list[TableResult]
    all_routes_agree: bool


def handle_tables(req: TablesRequest) -> TablesResponse:
    routes = resolve_routes(req.routes)
    tables = []
    for k in range(req.k_min, req.k_max + 1):
        table = build_table(k, routes)  # raises RouteDisagreement on mismatch
        rows = [
            TableRow(sheaf=key, h0=h0, h1=h1, h2=h2)
            for key, (h0, h1, h2) in zip(table.rows.keys(), table.triples())
        ]
        tables.append(
            TableResult(k=k, routes=list(routes), rows=rows, markdown=table.to_markdown())
        )
    return TablesResponse(tables=tables, all_routes_agree=True)


class SolveRequest(BaseModel):
    bundle: str
    c: str
    a: str | None = None
    b: str | None = None


class SolveResponse(BaseModel):
    bundle: str
    stable: bool
    semistable: bool
    stability_witness: str | None
    lambda_dim: int
    mu_dim: int
    lam: str
    mu: str
    q: str
    c_normalized: str
    determinant_zero: bool
    nilpotent: bool
    regularity: list[dict]
    ledger: list[str]


def _express_as_multiple(field: TwistedVectorField, c: TwistedVectorField, degree: int):
    """Solve field = λ C for λ of the given degree, or raise."""
    ctx = tfield_context(field.twist)
    mono = basis(degree).exponents
    columns = [
        ctx.reduce(c.scale(GradedPoly.monomial("plane", e)).coords()) for e in mono
    ]
    rhs = ctx.reduce(field.coords())
    matrix = ExactMatrix.from_rows(
        [[columns[t][r] for t in range(len(columns))] for r in range(ctx.ambient_dim)]
    )
    sol = solve(matrix, rhs)
    if sol is None:
        raise NotIntegrable("component is not a polynomial multiple of C")
    lam = GradedPoly("plane", dict(zip(mono, sol)), degree if any(sol) else None)
    if field != c.scale(lam):
        raise NotIntegrable("component is not a polynomial multiple of C")
    return lam


def handle_solve(req: SolveRequest) -> SolveResponse:
    m1, m2 = parse_bundle(req.bundle)
    if m1 < m2:
        m1, m2 = m2, m1
    gap = m1 - m2
    if gap >= 2:
        raise NotStable(
            f"twist gap {gap} >= 2: T({m2 - m1}) has no sections, so the"
            " C-component space is empty and no stable field exists"
        )
    c = parse_tvf(req.c, m2 - m1)
    family = solve_integrable(c, m1, m2)  # NotIntegrable/ZeroSection on failure
    lam = (
        _express_as_multiple(parse_tvf(req.a, 0), c, gap) if req.a else GradedPoly.zero()
    )
    if req.b:
        mu = _express_as_multiple(parse_tvf(req.b, gap), c, 2 * gap)
    elif gap == 0:
        # the zero member is only semistable on the even split; default
        # to the smallest stable member of the family
        mu = GradedPoly.constant(1)
    else:
        mu = GradedPoly.zero()
    h = family.higgs(lam, mu)
    verdict = is_stable_split(h)
    if not verdict.stable:
        raise NotStable(verdict.witness or "not stable")
    nf = gauge_normalize(h, lam, mu)
    det = hitchin_det(nf)
    points = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]
    if c.twist == -1:
        locus = zero_locus(c)
        if locus not in [tuple(map(Fraction, p)) for p in points]:
            points.append(locus)
    reports = regularity_check(nf, points)
    return SolveResponse(
        bundle=f"split:{m1},{m2}",
        stable=verdict.stable,
        semistable=verdict.semistable,
        stability_witness=verdict.witness,
        lambda_dim=len(family.a_kernel),
        mu_dim=len(family.b_kernel),
        lam=to_str(lam),
        mu=to_str(mu),
        q=to_str(nf.q),
        c_normalized=",".join(to_str(p) for p in nf.c.components),
        determinant_zero=det.is_zero(),
        nilpotent=is_nilpotent(nf),
        regularity=[
            {
                "point": "[" + ":".join(str(x) for x in r.point) + "]",
                "field_vanishes": r.field_vanishes,
            }
            for r in reports
        ],
        ledger=list(family.ledger),
    )


class H1Request(BaseModel):
    family: str
    k: int | None = None
    seed: int = 0


class H1Response(BaseModel):
    family: str
    h1: int
    e2_10: int
    e2_01: int
    d2_rank_on_01: int
    ledger: list[str]


def handle_h1(req: H1Request) -> H1Response:
    fam = req.family.strip().lower()
    if fam == "schwarzenberger":
        if req.k is None:
            raise ValueError("the direct-image family needs --k")
        summary = defcomplex.schwarz_e2(req.k)
        label = f"schwarzenberger k={req.k}"
    elif fam == "tangent":
        phi = random_tangent_sample(req.seed)
        summary = defcomplex.tangent_e2(phi)
        label = "tangent"
    elif fam.startswith("split:"):
        m1, m2 = parse_bundle(fam)
        h, *_ = random_split_sample(m1, m2, req.seed)
        summary = defcomplex.split_e2(h)
        label = fam
    else:
        raise ValueError(
            "family must be one of split:0,-1 | split:0,0 | tangent | schwarzenberger"
        )
    return H1Response(
        family=label,
        h1=summary.h1,
        e2_10=summary.e2_10,
        e2_01=summary.e2_01,
        d2_rank_on_01=summary.d2_rank_on_01,
        ledger=list(summary.ledger),
    )


class ChernRequest(BaseModel):
    k_min: int = Field(ge=0, le=64)
    k_max: int = Field(ge=0, le=64)


class ChernRow(BaseModel):
    k: int
    c1: int
    c2: int
    dual_c1: int
    dual_c2: int
    normalized_c1: int
    normalized_c2: int
    family_index: int
    twist: int


class ChernResponse(BaseModel):
    rows: list[ChernRow]


def handle_chern(req: ChernRequest) -> ChernResponse:
    rows = []
    for k in range(req.k_min, req.k_max + 1):
        data, dual = schwarz_chern(k)
        norm = chern_coverage(k)
        rows.append(
            ChernRow(
                k=k,
                c1=data.c1,
                c2=data.c2,
                dual_c1=dual.c1,
                dual_c2=dual.c2,
                normalized_c1=norm.family_c1,
                normalized_c2=norm.family_c2,
                family_index=norm.family_index,
                twist=norm.twist,
            )
        )
    return ChernResponse(rows=rows)


class ConicRequest(BaseModel):
    rho: str


class ConicResponse(BaseModel):
    rho: str
    singular: bool
    matrix_rank: int


def handle_conic(req: ConicRequest) -> ConicResponse:
    rho = parse(req.rho)
    return ConicResponse(
        rho=to_str(rho),
        singular=conic_singular(rho),
        matrix_rank=conic_matrix(rho).rank(),
    )


class VerifyRequest(BaseModel):
    seed: int = 0


class VerifyResponse(BaseModel):
    version: str
    seed: int
    passed: bool
    failing: list[str]
    checks: list[dict]


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    report = run_all(req.seed)
    data = report.to_dict()
    return VerifyResponse(
        version=data["version"],
        seed=report.seed,
        passed=report.passed,
        failing=report.failing_ids(),
        checks=data["checks"],
    )

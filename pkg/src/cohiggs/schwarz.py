"""Dimension engine for the direct-image bundles over branched covers.

For each k >= 3 (and a nonsingular branch conic) the twisted trace-free
endomorphism cohomology of the k-th direct-image bundle is produced by
three independent routes — closed form, a Künneth chase over the
quadric, and Riemann-Roch — and the five-row table (twists 0..3 plus the
tangent tensor) is asserted cell by cell across routes. Also houses the
Chern data with its {0, -H} normalization and conic nonsingularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ChaseUnresolved,
    DomainError,
    RouteDisagreement,
    ZeroConic,
)
from .exactlin import ExactMatrix
from .polyring import GradedPoly
from .sheafdim import (
    ROUTE_CLOSED,
    ROUTE_KUNNETH,
    ROUTE_RR,
    ChaseInterval,
    ChernData,
    CohomProfile,
    chase_quadric,
    chern_twist,
    chi_rr,
    endo_ch,
    les_chase,
    profile_p2,
    schwarz_chern,
    tensor_ch,
    TANGENT_CH,
)

ROW_KEYS = ("endo", "endo(1)", "endo(2)", "endo⊗T", "endo(3)")
TENSOR_T = "tensor-T"
ROUTES = (ROUTE_CLOSED, ROUTE_KUNNETH, ROUTE_RR)


def _check_domain(k: int, d: int = 0):
    if k < 3:
        raise DomainError(f"k = {k} out of range (need k >= 3)")
    if d < 0:
        raise DomainError(f"d = {d} out of range (need d >= 0)")


def delta_switch(k: int, d: int) -> int:
    """Indicator [d >= k-1] that switches on the extra section count."""
    return 1 if d >= k - 1 else 0


def h0_twisted_endo(k: int, d: int) -> int:
    """Closed form: h0 of the trace-free endomorphisms twisted by d.

    d(d+1)/2, plus (d+2)² - k² once d >= k-1.
    """
    _check_domain(k, d)
    return d * (d + 1) // 2 + delta_switch(k, d) * ((d + 2) ** 2 - k * k)


def h1_twisted_endo(k: int, d: int) -> int:
    """Closed form: 0 once d >= k-1, else k² - d² - 4d - 4."""
    _check_domain(k, d)
    if d >= k - 1:
        return 0
    return k * k - d * d - 4 * d - 4


def h0_endo_tensor_tangent(k: int) -> tuple[int, tuple[str, ...]]:
    """Closed form for h0 of End0 V ⊗ T with the replayable arithmetic.

    The count comes from the cover: 11 sections upstairs, 5 extra
    exactly at k = 3, minus the 8 trace directions.
    """
    _check_domain(k)
    if k == 3:
        ledger = ("h0 upstairs: 11 + 5 = 16", "remove traces: 16 - 8 = 8")
        return 8, ledger
    ledger = ("h0 upstairs: 11 + 0 = 11", "remove traces: 11 - 8 = 3")
    return 3, ledger


def closed_route(k: int, d) -> CohomProfile:
    """Table row from the closed forms (h2 = 0 by Serre duality)."""
    if d == TENSOR_T:
        h0, ledger = h0_endo_tensor_tangent(k)
        h1 = 0 if k == 3 else 2 * k * k - 23
        return CohomProfile(
            h0,
            h1,
            0,
            ROUTE_CLOSED,
            ledger + (f"h1 = {'0 (k = 3)' if k == 3 else '2k² - 23 = %d' % h1}",
                      "h2 = 0 (dual of a negative-twist h0)"),
        )
    h0 = h0_twisted_endo(k, d)
    h1 = h1_twisted_endo(k, d)
    return CohomProfile(
        h0,
        h1,
        0,
        ROUTE_CLOSED,
        (
            f"h0 = d(d+1)/2 + [d >= k-1]((d+2)² - k²) = {h0}",
            f"h1 = {h1}",
            "h2 = 0 (dual of a negative-twist h0)",
        ),
    )


def pulled_tangent_profile() -> CohomProfile:
    """Profile of the pulled-back tangent bundle on the quadric."""
    return chase_quadric((2, 0), (1, 3), label="0 -> O(2,0) -> f*T -> O(1,3) -> 0")


def pulled_tangent_twisted_profile(k: int) -> CohomProfile:
    """Profile of f*T(1-k, 1+k) on the quadric."""
    return chase_quadric(
        (3 - k, 1 + k),
        (2 - k, 4 + k),
        label=f"0 -> O({3-k},{1+k}) -> f*T(1-k,1+k) -> O({2-k},{4+k}) -> 0",
    )


def plane_tangent_profile() -> CohomProfile:
    """h^•(T) on the plane, chased along the defining presentation."""
    result = les_chase(
        [
            ("sub", profile_p2(0)),
            ("mid", profile_p2(1).scaled(3)),
            ("quot", None),
        ],
        label="0 -> O -> O(1)^3 -> T -> 0",
    )
    assert isinstance(result, CohomProfile)
    return result


def kunneth_route(k: int, d) -> CohomProfile:
    """Independent recomputation by push-pull over the quadric cover.

    Twist rows chase 0 -> O(d,d) -> pullback(dual)(d,d+k) -> O(d+1-k,
    d+k+1) -> 0 and strip the trace line; the tensor-T row nests the
    three cover sequences. The sub-bundle bidegree (k-1,-1) is the one
    forced by the determinant; the conflicting printed form (1-k, 1) is
    recorded, not used.
    """
    _check_domain(k, 0 if d == TENSOR_T else d)
    note = "sub-bundle fixed as O(k-1,-1) by the determinant constraint (printed variant (1-k,1) recorded as typo)"
    if d == TENSOR_T:
        upstairs = pulled_tangent_profile()
        twisted = pulled_tangent_twisted_profile(k)
        full = les_chase(
            [("sub", upstairs), ("mid", None), ("quot", twisted)],
            label=f"0 -> f*T -> f*((dual V_{k})⊗T)(0,{k}) -> f*T(1-{k},1+{k}) -> 0",
        )
        if isinstance(full, ChaseInterval):
            raise ChaseUnresolved(f"tensor-T chase unresolved at k = {k}: {full}")
        tangent = plane_tangent_profile()
        ledger = (
            note,
            *upstairs.ledger,
            *twisted.ledger,
            *full.ledger,
            f"strip traces: h^• minus h^•(T) = {tangent.triple()}",
        )
        return CohomProfile(
            full.h0 - tangent.h0,
            full.h1 - tangent.h1,
            full.h2 - tangent.h2,
            ROUTE_KUNNETH,
            ledger,
        )
    full = chase_quadric(
        (d, d),
        (d + 1 - k, d + k + 1),
        label=f"0 -> O({d},{d}) -> f*((dual V_{k}))({d},{d+k}) -> O({d+1-k},{d+k+1}) -> 0",
    )
    trace = profile_p2(d)
    ledger = (
        note,
        *full.ledger,
        f"strip traces: h^• minus h^•(O({d})) = {trace.triple()}",
    )
    return CohomProfile(
        full.h0 - trace.h0,
        full.h1 - trace.h1,
        full.h2 - trace.h2,
        ROUTE_KUNNETH,
        ledger,
    )


def rr_route(k: int, d) -> CohomProfile:
    """Euler characteristic by Riemann-Roch, promoted to a profile.

    chi fixes only one unknown, so the promotion borrows h0 from the
    closed forms and h2 = 0 from duality; h1 = h0 - chi.
    """
    _check_domain(k, 0 if d == TENSOR_T else d)
    ch = endo_ch(schwarz_chern(k)[0])
    if d == TENSOR_T:
        chi = chi_rr(tensor_ch(ch, TANGENT_CH))
        h0, _ = h0_endo_tensor_tangent(k)
        ledger = (f"chi(End0 V ⊗ T) = 26 - 2k² = {chi}",)
    else:
        chi = chi_rr(ch, d)
        h0 = h0_twisted_endo(k, d)
        ledger = (f"chi(End0 V({d})) = 3(d+1)(d+2)/2 - (k²-1) = {chi}",)
    h1 = h0 - chi
    if h1 < 0:
        raise RouteDisagreement(f"negative h1 = {h1} at k={k}, d={d}", ledger)
    return CohomProfile(
        h0,
        h1,
        0,
        ROUTE_RR,
        ledger
        + (
            "h2 = 0 (Serre dual of a negative twist)",
            f"h1 = h0 - chi = {h0} - {chi} = {h1}",
        ),
    )


ROUTE_FUNCS = {
    ROUTE_CLOSED: closed_route,
    ROUTE_KUNNETH: kunneth_route,
    ROUTE_RR: rr_route,
}


@dataclass(frozen=True)
class DimTable:
    """Five-row cohomology table with per-route profiles, all agreeing."""

    k: int
    rows: dict

    def cell(self, key: str) -> tuple[int, int, int]:
        return next(iter(self.rows[key].values())).triple()

    def triples(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(self.cell(key) for key in ROW_KEYS)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "rows": {
                key: {
                    route: {
                        "h0": p.h0,
                        "h1": p.h1,
                        "h2": p.h2,
                        "ledger": list(p.ledger),
                    }
                    for route, p in by_route.items()
                }
                for key, by_route in self.rows.items()
            },
        }

    def to_markdown(self) -> str:
        lines = [
            f"### k = {self.k}",
            "| sheaf | h0 | h1 | h2 |",
            "| --- | --- | --- | --- |",
        ]
        for key in ROW_KEYS:
            h0, h1, h2 = self.cell(key)
            lines.append(f"| {key} | {h0} | {h1} | {h2} |")
        return "\n".join(lines)


def build_table(k: int, routes=ROUTES) -> DimTable:
    """Populate the five rows by every requested route; exact agreement
    cell by cell or RouteDisagreement with the ledger diff."""
    _check_domain(k)
    row_twists = {
        "endo": 0,
        "endo(1)": 1,
        "endo(2)": 2,
        "endo⊗T": TENSOR_T,
        "endo(3)": 3,
    }
    rows = {}
    for key, d in row_twists.items():
        by_route = {}
        for route in routes:
            by_route[route] = ROUTE_FUNCS[route](k, d)
        values = {route: p.triple() for route, p in by_route.items()}
        if len(set(values.values())) > 1:
            diff = [f"{route}: {trip}" for route, trip in values.items()]
            for p in by_route.values():
                diff.extend(p.ledger)
            raise RouteDisagreement(
                f"row {key} at k = {k} disagrees across routes", diff
            )
        rows[key] = by_route
    return DimTable(k, rows)


# -- conics and Chern coverage -------------------------------------------


def conic_matrix(rho: GradedPoly) -> ExactMatrix:
    if rho.is_zero():
        raise ZeroConic("the zero polynomial defines no conic")
    if rho.family != "plane" or rho.grading != 2:
        raise ValueError("a conic is a nonzero plane polynomial of degree 2")
    half = Fraction(1, 2)
    entries = []
    for i in range(3):
        for j in range(3):
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            c = rho.coeffs.get(tuple(e), Fraction(0))
            entries.append(c if i == j else half * c)
    return ExactMatrix(3, 3, entries)


def conic_singular(rho: GradedPoly) -> bool:
    """True iff the symmetric coefficient matrix is degenerate."""
    return conic_matrix(rho).rank() < 3


@dataclass(frozen=True)
class SchwarzParams:
    """k plus an optional branch conic; conic-dependent checks insist on
    a nonsingular conic."""

    k: int
    rho: GradedPoly | None = None

    def __post_init__(self):
        if self.k < 0:
            raise DomainError("k must be nonnegative")
        if self.rho is not None and conic_singular(self.rho):
            raise ZeroConic(
                "singular branch conic: direct-image sheaf theory for the"
                " singular locus is out of scope"
            )


@dataclass(frozen=True)
class NormalizedChern:
    k: int
    family_c1: int  # 0 or -1
    family_c2: int
    twist: int  # the normalizing twist applied
    family_index: int  # j with k = 2j+1 (odd) or k = 2j (even)


def chern_coverage(k: int) -> NormalizedChern:
    """Normalize the k-th bundle's Chern data to c1 in {0, -1}.

    Odd k = 2j+1 lands in the (0, j(j+1)) family; even k = 2j lands in
    the (-1, j²) family. The family index j is this normalized slot, not
    the construction's k.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    data, _ = schwarz_chern(k)
    if (k - 1) % 2 == 0:
        j = (k - 1) // 2
        m = -j
    else:
        j = k // 2
        m = -j
    norm = chern_twist(data, m)
    if norm.c1 not in (0, -1):
        raise RouteDisagreement(f"normalization failed: c1 = {norm.c1}")
    return NormalizedChern(k, norm.c1, norm.c2, m, j)


def tangent_chern_consistency() -> bool:
    """c2 of T(-1) is a single point: (2,3,3) twisted by -1 gives c2 = 1."""
    return chern_twist(ChernData(2, 3, 3), -1) == ChernData(2, 1, 1)

"""First-order deformation spaces via the twisted-endomorphism complex.

The five-term sequence of the hypercohomology spectral sequence reduces
every dimension count here to two numbers: the E2^{1,0} term (wedge
kernel modulo inner fields) and the E2^{0,1} term (bundle deformations
preserving the field), glued by h1 = e2_10 + e2_01 - rank(d2). d2 is
never computed at the cochain level; where it matters it vanishes for a
recorded reason, and that justification travels in the ledger.

Split-bundle and tangent-family terms are computed as explicit exact
matrices of the wedge maps; the direct-image families are table-driven
from independently verified dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    NotIntegrable,
    NotSimpleTensor,
    NotStable,
    RankExceedsSource,
)
from .eulercalc import (
    TwistedVectorField,
    sections_vanishing_at,
    tfield_basis,
    tfield_context,
    wedge,
)
from .exactlin import ExactMatrix, Vector
from .higgsfields import (
    SplitHiggs,
    TangentHiggs,
    is_integrable,
    is_stable_split,
    tangent_wedge_linearized,
)
from .polyring import GradedPoly, basis, coord_vector
from .schwarz import h0_endo_tensor_tangent, h1_twisted_endo


@dataclass(frozen=True)
class E2Summary:
    """E2 terms with the d2 bookkeeping; h1 follows by exactness."""

    e2_10: int
    e2_01: int
    d2_rank_on_01: int
    h1: int
    ledger: tuple[str, ...] = ()

    def __post_init__(self):
        if self.h1 != self.e2_10 + self.e2_01 - self.d2_rank_on_01:
            raise ValueError("h1 violates the five-term exactness")

    def to_dict(self) -> dict:
        return {
            "e2_10": self.e2_10,
            "e2_01": self.e2_01,
            "d2_rank_on_01": self.d2_rank_on_01,
            "h1": self.h1,
            "ledger": list(self.ledger),
        }


def hyper_h1(e2_10: int, e2_01: int, d2_rank: int) -> int:
    """h1 = e2_10 + (e2_01 - rank d2|_{E2^{0,1}})."""
    if d2_rank > e2_01:
        raise RankExceedsSource(f"d2 rank {d2_rank} exceeds source dim {e2_01}")
    if min(e2_10, e2_01, d2_rank) < 0:
        raise ValueError("dimensions must be nonnegative")
    return e2_10 + e2_01 - d2_rank


# -- split bundles ---------------------------------------------------------


def _split_twists(m1: int, m2: int) -> tuple[int, int, int]:
    # off-diagonal Hom twists for (a b; c -a)
    return 0, m1 - m2, m2 - m1


def _endo_coords(polys, degrees) -> Vector:
    out = []
    for p, d in zip(polys, degrees):
        out.extend(coord_vector(p, d))
    return tuple(out)


def _field_coords(fields) -> Vector:
    out = []
    for f in fields:
        out.extend(tfield_context(f.twist).coords(f.coords()))
    return tuple(out)


def _matrix_from_columns(columns, nrows) -> ExactMatrix:
    return ExactMatrix.from_rows(
        [[col[r] for col in columns] for r in range(nrows)]
    )


def _d1_entries(h: SplitHiggs, alpha, beta, gamma):
    """Entries of (Θ∧Φ + Φ∧Θ) for Θ = (alpha beta; gamma -alpha),
    with (X*Y)_ik = Σ_j X_ij ∧ Y_jk."""
    a_f, b_f, c_f = h.A, h.B, h.C
    t11 = wedge(beta, c_f) + wedge(b_f, gamma)
    t12 = wedge(alpha, b_f) + wedge(beta, -a_f) + wedge(a_f, beta) + wedge(b_f, -alpha)
    t21 = wedge(gamma, a_f) + wedge(-alpha, c_f) + wedge(c_f, alpha) + wedge(-a_f, gamma)
    return t11, t12, t21


def split_wedge_maps(h: SplitHiggs) -> tuple[ExactMatrix, ExactMatrix, dict]:
    """The two wedge maps of the deformation complex as exact matrices.

    d0 sends an endomorphism (a b; c -a) to [ψ, Φ] in the tangent-valued
    sections; d1 sends a tangent-valued endomorphism to its graded
    commutator with Φ in the squared-tangent-valued sections. Both are
    expressed over the canonical summand-by-summand coordinates.
    """
    m1, m2 = h.m1, h.m2
    t_a, t_b, t_c = _split_twists(m1, m2)
    a_f, b_f, c_f = h.A, h.B, h.C

    # H^0(End0 V): triples (a, b, c) of polynomials
    endo_degs = (0, t_b, t_c)
    endo_monomials = []
    for slot, deg in enumerate(endo_degs):
        for exps in basis(deg).exponents:
            endo_monomials.append((slot, GradedPoly.monomial("plane", exps)))

    # H^0(End0 V ⊗ T): triples of vector fields at twists (0, t_b, t_c)
    field_bases = tuple(tfield_basis(t) for t in (t_a, t_b, t_c))
    coords_t_len = sum(tfield_context(t).dim for t in (t_a, t_b, t_c))

    # H^0(End0 V ⊗ Λ²T): triples of polynomials of degrees (3, 3+t_b, 3+t_c)
    sq_degs = (3, 3 + t_b, 3 + t_c)
    coords_sq_len = sum(basis(d).size for d in sq_degs)

    # entrywise commutator [psi, Φ]:
    #   (1,1): bC - cB      (1,2): 2(aB - bA)    (2,1): 2(cA - aC)
    def d0_column(slot: int, m: GradedPoly) -> Vector:
        zero_p = GradedPoly.zero()
        a = m if slot == 0 else zero_p
        b = m if slot == 1 else zero_p
        c = m if slot == 2 else zero_p
        alpha = c_f.scale(b) - b_f.scale(c)
        beta = (b_f.scale(a) - a_f.scale(b)).scale(Fraction(2))
        gamma = (a_f.scale(c) - c_f.scale(a)).scale(Fraction(2))
        if alpha.is_zero():
            alpha = TwistedVectorField.zero(t_a)
        if beta.is_zero():
            beta = TwistedVectorField.zero(t_b)
        if gamma.is_zero():
            gamma = TwistedVectorField.zero(t_c)
        return _field_coords((alpha, beta, gamma))

    def d1_column(slot: int, v: TwistedVectorField) -> Vector:
        zero = TwistedVectorField.zero
        alpha = v if slot == 0 else zero(t_a)
        beta = v if slot == 1 else zero(t_b)
        gamma = v if slot == 2 else zero(t_c)
        return _endo_coords(_d1_entries(h, alpha, beta, gamma), sq_degs)

    d0_cols = [d0_column(slot, m) for slot, m in endo_monomials]
    d1_cols = []
    for slot, fb in enumerate(field_bases):
        for v in fb:
            d1_cols.append(d1_column(slot, v))

    d0 = (
        _matrix_from_columns(d0_cols, coords_t_len)
        if d0_cols
        else ExactMatrix.zeros(coords_t_len, 0)
    )
    d1 = (
        _matrix_from_columns(d1_cols, coords_sq_len)
        if d1_cols
        else ExactMatrix.zeros(coords_sq_len, 0)
    )
    dims = {
        "endo": len(endo_monomials),
        "fields": sum(len(fb) for fb in field_bases),
        "squares": coords_sq_len,
    }
    return d0, d1, dims


def split_e2(h: SplitHiggs) -> E2Summary:
    """E2 terms for a stable integrable field on O(m1)⊕O(m2).

    Assembles the wedge maps on explicit section bases, summand by
    summand: endomorphisms -> tangent-valued -> squared-tangent-valued.
    The E2^{0,1} term is zero because each line-bundle summand has no h1
    on the plane, which also forces d2 = 0.
    """
    verdict = is_stable_split(h)
    if not verdict.stable:
        raise NotStable(verdict.witness or "not stable")
    if not is_integrable(h):
        raise NotIntegrable("Φ∧Φ != 0")
    d0, d1, dims = split_wedge_maps(h)
    rank_d0 = d0.rank()
    ker_d1 = dims["fields"] - d1.rank()
    e2_10 = ker_d1 - rank_d0
    ledger = (
        f"dim H^0(End0 V) = {dims['endo']}",
        f"dim H^0(End0 V ⊗ T) = {dims['fields']}",
        f"rank of inner fields [ψ, Φ] = {rank_d0}",
        f"dim ker(∧Φ on tangent-valued endomorphisms) = {ker_d1}",
        f"E2^{{1,0}} = {ker_d1} - {rank_d0} = {e2_10}",
        "E2^{0,1} = 0: h1 of every line-bundle summand vanishes on the plane",
        "d2 rank 0 recorded: source E2^{0,1} = 0",
    )
    h1 = hyper_h1(e2_10, 0, 0)
    return E2Summary(e2_10, 0, 0, h1, ledger + (f"h1 = {e2_10} + 0 - 0 = {h1}",))


def solution_directions_killed(h: SplitHiggs, family) -> bool:
    """Exact containment of the solved family's tangent directions in
    the wedge kernel: for every solution direction (λ'C, μ'C; 0) the
    graded commutator with Φ vanishes identically."""
    t_a, t_b, t_c = _split_twists(h.m1, h.m2)
    zero = TwistedVectorField.zero
    directions = [(v, zero(t_b)) for v in family.a_kernel]
    directions += [(zero(t_a), v) for v in family.b_kernel]
    for alpha, beta in directions:
        t11, t12, t21 = _d1_entries(h, alpha, beta, zero(t_c))
        if any(not t.is_zero() for t in (t11, t12, t21)):
            return False
    return True


def split_d1_kernel_contains_d0(h: SplitHiggs) -> bool:
    """Exact containment im(∧Φ on endos) ⊆ ker(∧Φ on fields)."""
    t_a, t_b, t_c = _split_twists(h.m1, h.m2)
    endo_degs = (0, t_b, t_c)
    zero_p = GradedPoly.zero()
    for slot, deg in enumerate(endo_degs):
        for exps in basis(deg).exponents:
            m = GradedPoly.monomial("plane", exps)
            a = m if slot == 0 else zero_p
            b = m if slot == 1 else zero_p
            c = m if slot == 2 else zero_p
            alpha = h.C.scale(b) - h.B.scale(c)
            beta = (h.B.scale(a) - h.A.scale(b)).scale(Fraction(2))
            gamma = (h.A.scale(c) - h.C.scale(a)).scale(Fraction(2))
            if alpha.is_zero():
                alpha = TwistedVectorField.zero(t_a)
            if beta.is_zero():
                beta = TwistedVectorField.zero(t_b)
            if gamma.is_zero():
                gamma = TwistedVectorField.zero(t_c)
            if any(not t.is_zero() for t in _d1_entries(h, alpha, beta, gamma)):
                return False
    return True


# -- tangent family --------------------------------------------------------


def tangent_e2(phi: TangentHiggs) -> E2Summary:
    """E2 terms for a simple-tensor tangent-valued field.

    The inner-field image vanishes (no twisted endomorphisms at twist 0)
    and rigidity kills E2^{0,1}; everything reduces to the kernel of the
    linearized wedge on the 18-dim coefficient space.
    """
    if phi.is_zero():
        raise NotSimpleTensor("the zero field is excluded")
    if phi.rank() > 1:
        raise NotSimpleTensor("coefficient table has rank > 1")
    lin = tangent_wedge_linearized(phi)
    ker = 18 - lin.rank()
    e2_10 = ker  # image from H^0(End0 T) = 0
    ledger = (
        "dim H^0(End0 T ⊗ T) = 18",
        f"dim ker(linearized ∧Φ) = {ker}",
        "image of inner fields = 0 (End0 T has no twist-0 sections)",
        "E2^{0,1} = 0: the tangent bundle is rigid (h1(End0 T) = 0)",
        "d2 rank 0 recorded: source E2^{0,1} = 0",
    )
    h1 = hyper_h1(e2_10, 0, 0)
    return E2Summary(e2_10, 0, 0, h1, ledger + (f"h1 = {e2_10} + 0 - 0 = {h1}",))


# -- direct-image families -------------------------------------------------


def point_constraint_ledger(point=(1, 0, 0)) -> tuple[int, tuple[str, ...]]:
    """The k = 3 subspace count, with the point conditions computed.

    Linear forms through the vanishing point of C give 2 degrees of
    freedom; twisted endomorphisms through the point give 3 - 1 = 2; the
    wedge-kernel preimage is then 1 + 2 = 3 dimensional.
    """
    lin_basis = [
        GradedPoly.monomial("plane", e) for e in basis(1).exponents
    ]
    through = sections_vanishing_at(lin_basis, point)
    ledger = (
        f"h0(O(1)) sections through the point: 3 - 1 = {len(through)}",
        "h0(End0 V(2) ⊗ ideal of the point) = 3 - 1 = 2",
        "kernel line plus matched image: 1 + 2 = 3",
    )
    return len(through), ledger


def schwarz_e2(k: int) -> E2Summary:
    """Table-driven E2 terms for the k-th direct-image family.

    Case k > 3: every tangent-valued section is a multiple of the
    generator, so the wedge kernel is all of the 3-dim section space;
    the E2^{0,1} count is the 6 - 1 = 5 from the determinant
    factorization. Case k = 3: the 3-dim subspace comes from the point
    constraints; e2_01 = 5 = h1(End0 V) with zero target. d2 vanishes
    because the field's own C wedges to zero against itself.
    """
    if k < 3:
        raise DomainError(f"k = {k} out of range (need k >= 3)")
    h0_t, chase_ledger = h0_endo_tensor_tangent(k)
    if k == 3:
        dim_sub, point_ledger = point_constraint_ledger()
        if dim_sub != 2:
            raise DomainError("point-constraint count is off")
        e2_10 = 3
        e2_01 = 5
        case_ledger = (
            "case k = 3:",
            *point_ledger,
            f"wedge-kernel subspace of the {h0_t}-dim section space is 3-dim",
            f"e2_01 = h1(End0 V_3) = {h1_twisted_endo(3, 0)} with"
            f" h1(End0 V_3 ⊗ T) = 0: the wedge map kills everything",
        )
    else:
        e2_10 = 3
        e2_01 = 5
        case_ledger = (
            f"case k = {k} > 3:",
            *chase_ledger,
            f"all {h0_t} tangent-valued sections are simple-tensor multiples"
            " of the generator, so the wedge kernel is everything",
            "e2_01 = h0(O(2)) - h0(End0 V_k(1)) = 6 - 1 = 5",
        )
    d2_ledger = (
        "d2 rank 0 recorded: [θC, φC] = [θ, φ] C∧C = 0 (the field's C wedges"
        " itself to zero)",
    )
    h1 = hyper_h1(e2_10, e2_01, 0)
    return E2Summary(
        e2_10,
        e2_01,
        0,
        h1,
        case_ledger + d2_ledger + (f"h1 = {e2_10} + {e2_01} - 0 = {h1}",),
    )

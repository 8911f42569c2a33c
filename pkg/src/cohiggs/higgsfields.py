"""Higgs-field algebra on split bundles and on the tangent bundle.

Covers the integrability tensor Φ∧Φ, the stability verdicts for
O(m1)⊕O(m2), the solver that parametrizes integrable fields over a fixed
nonzero C, the gauge normal form (0 q; 1 0)⊗C with its scaling orbit,
the determinant (value in S²T) with nilpotency/regularity checks, and
the coefficient-table model of tangent-valued fields with its
simple-tensor rank criterion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import polyring
from .errors import NotIntegrable, NotStable, ZeroSection
from .eulercalc import (
    EndoTSection,
    Sym2Section,
    TwistedVectorField,
    end0T_basis,
    end0T_context,
    end0T_quotient_coords,
    endoT_commutator,
    endoT_det,
    normalize_point,
    sym_prod,
    tfield_basis,
    tfield_context,
    wedge,
)
from .exactlin import ExactMatrix, Vector, rank_of, vector
from .polyring import GradedPoly, basis, coord_vector, parse, to_str
from .sampling import rand_int, rand_nonzero_int, random_poly, rng_for


class SplitHiggs:
    """Trace-free Higgs field (A B; C -A) on O(m1) ⊕ O(m2).

    A is a vector field, B lives in T(m1-m2) and C in T(m2-m1), matching
    the off-diagonal Hom twists.
    """

    __slots__ = ("m1", "m2", "A", "B", "C")

    def __init__(
        self,
        m1: int,
        m2: int,
        a: TwistedVectorField,
        b: TwistedVectorField,
        c: TwistedVectorField,
    ):
        expect = {"A": 0, "B": m1 - m2, "C": m2 - m1}
        for name, field in (("A", a), ("B", b), ("C", c)):
            if field.twist != expect[name] and not field.is_zero():
                raise ValueError(f"{name} has twist {field.twist}, expected {expect[name]}")
        object.__setattr__(self, "m1", m1)
        object.__setattr__(self, "m2", m2)
        object.__setattr__(self, "A", a if a.twist == 0 else TwistedVectorField.zero(0))
        object.__setattr__(self, "B", b if b.twist == m1 - m2 else TwistedVectorField.zero(m1 - m2))
        object.__setattr__(self, "C", c if c.twist == m2 - m1 else TwistedVectorField.zero(m2 - m1))

    def __setattr__(self, name, value):
        raise AttributeError("SplitHiggs is immutable")

    def entries(self):
        return ((self.A, self.B), (self.C, -self.A))

    def bundle_label(self) -> str:
        return f"split:{self.m1},{self.m2}"

    def to_json(self) -> str:
        def triple(v: TwistedVectorField) -> str:
            return ",".join(to_str(p) for p in v.components)

        return json.dumps(
            {
                "bundle": self.bundle_label(),
                "A": triple(self.A),
                "B": triple(self.B),
                "C": triple(self.C),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SplitHiggs":
        data = json.loads(text)
        m1, m2 = parse_bundle(data["bundle"])
        return cls(
            m1,
            m2,
            parse_tvf(data["A"], 0),
            parse_tvf(data["B"], m1 - m2),
            parse_tvf(data["C"], m2 - m1),
        )


def parse_bundle(label: str) -> tuple[int, int]:
    if not label.startswith("split:"):
        raise ValueError(f"not a split-bundle label: {label!r}")
    parts = label[len("split:") :].split(",")
    if len(parts) != 2:
        raise ValueError(f"bundle label needs two twists: {label!r}")
    return int(parts[0]), int(parts[1])


def parse_tvf(text: str, twist: int) -> TwistedVectorField:
    components = text.split(",")
    if len(components) != 3:
        raise ValueError("a vector-field literal is a comma-separated triple")
    polys = []
    for comp in components:
        p = parse(comp.strip())
        if not p.is_zero() and p.grading != twist + 1:
            raise ValueError(
                f"component {comp.strip()!r} has degree {p.grading}, expected {twist + 1}"
            )
        polys.append(p)
    return TwistedVectorField(twist, polys)


def phi_wedge_phi(h: SplitHiggs):
    """The 2x2 integrability tensor ((B∧C, 2A∧B), (2C∧A, C∧B))."""
    a, b, c = h.A, h.B, h.C
    return (
        (wedge(b, c), Fraction(2) * wedge(a, b)),
        (Fraction(2) * wedge(c, a), wedge(c, b)),
    )


def is_integrable(h: SplitHiggs) -> bool:
    return all(p.is_zero() for row in phi_wedge_phi(h) for p in row)


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    semistable: bool
    witness: str | None = None

    def __bool__(self):
        return self.stable


def is_stable_split(h: SplitHiggs) -> StabilityVerdict:
    """Stability of (O(m1)⊕O(m2), Φ) by the sub-line-bundle criteria.

    For a twist gap >= 2 no C-component exists, so the larger summand is
    invariant and destabilizing. For gap 1 stability is C != 0. For
    O(m)⊕O(m) the checked lines are the two summands: stable iff both
    B != 0 and C != 0, semistable otherwise (never unstable).
    """
    m1, m2, gap = h.m1, h.m2, h.m1 - h.m2
    if abs(gap) >= 2:
        big = "O({})".format(max(m1, m2))
        return StabilityVerdict(False, False, f"{big} is invariant and destabilizing")
    if gap > 0:
        if h.C.is_zero():
            return StabilityVerdict(
                False, False, f"O({m1}) is invariant and destabilizing (C = 0)"
            )
        return StabilityVerdict(True, True)
    if gap < 0:
        if h.B.is_zero():
            return StabilityVerdict(
                False, False, f"O({m2}) is invariant and destabilizing (B = 0)"
            )
        return StabilityVerdict(True, True)
    if h.B.is_zero() or h.C.is_zero():
        which = "B = 0" if h.B.is_zero() else "C = 0"
        return StabilityVerdict(
            False, True, f"a degree-{m1} sub-line bundle is preserved ({which})"
        )
    return StabilityVerdict(True, True)


@dataclass(frozen=True)
class IntegrableFamily:
    """Solutions of A∧C = 0, B∧C = 0 over a fixed nonzero C."""

    m1: int
    m2: int
    c: TwistedVectorField
    a_kernel: tuple[TwistedVectorField, ...]
    b_kernel: tuple[TwistedVectorField, ...]
    lam_degree: int
    mu_degree: int
    ledger: tuple[str, ...]

    def higgs(self, lam: GradedPoly, mu: GradedPoly) -> SplitHiggs:
        return SplitHiggs(
            self.m1, self.m2, self.c.scale(lam), self.c.scale(mu), self.c
        )


def _wedge_kernel(c: TwistedVectorField, twist: int) -> tuple[TwistedVectorField, ...]:
    """Canonical basis of {v in H^0(T(twist)) : v ∧ c = 0}."""
    sections = tfield_basis(twist)
    if not sections:
        return ()
    target_deg = twist + c.twist + 3
    columns = [coord_vector(wedge(v, c), target_deg) for v in sections]
    matrix = ExactMatrix.from_rows(
        [[columns[t][r] for t in range(len(sections))] for r in range(len(columns[0]))]
    )
    out = []
    for w in matrix.kernel_basis():
        acc = TwistedVectorField.zero(twist)
        for coeff, s in zip(w, sections):
            if coeff:
                acc = acc + s.scale(coeff)
        out.append(acc.canonical())
    return tuple(out)


def solve_integrable(c: TwistedVectorField, m1: int, m2: int) -> IntegrableFamily:
    """Parametrize {A = λC, B = μC} and verify it exhausts the kernels.

    λ runs over H^0(O(m1-m2)) and μ over H^0(O(2(m1-m2))); the wedge
    kernels are computed independently and checked to coincide with
    those parametrized spans.
    """
    if m1 < m2:
        raise ValueError("order the bundle so m1 >= m2")
    if c.is_zero():
        raise ZeroSection("the solver needs a nonzero C")
    gap = m1 - m2
    if c.twist != m2 - m1:
        raise ValueError(f"C must have twist {m2 - m1}")
    a_kernel = _wedge_kernel(c, 0)
    b_kernel = _wedge_kernel(c, gap)
    lam_dim = basis(gap).size
    mu_dim = basis(2 * gap).size
    ledger = [
        f"kernel of ∧C on H^0(T) has dim {len(a_kernel)} (λ-space dim {lam_dim})",
        f"kernel of ∧C on H^0(T({gap})) has dim {len(b_kernel)} (μ-space dim {mu_dim})",
    ]
    if len(a_kernel) != lam_dim or len(b_kernel) != mu_dim:
        raise NotIntegrable(
            "degenerate C: wedge kernels do not match the λ/μ parametrization; " + "; ".join(ledger)
        )
    # the parametrized span {λC} must equal the kernel exactly
    for twist, kernel, deg in ((0, a_kernel, gap), (gap, b_kernel, 2 * gap)):
        ctx = tfield_context(twist)
        span = [
            ctx.reduce(c.scale(GradedPoly.monomial(polyring.PLANE, e)).coords())
            for e in basis(deg).exponents
        ]
        kern = [ctx.reduce(v.coords()) for v in kernel]
        if rank_of(span) != len(kernel) or rank_of(list(span) + list(kern)) != len(kernel):
            raise NotIntegrable("parametrized span differs from the wedge kernel")
    ledger.append("span {λC} (resp. {μC}) equals the wedge kernel exactly")
    return IntegrableFamily(
        m1, m2, c.canonical(), a_kernel, b_kernel, gap, 2 * gap, tuple(ledger)
    )


# -- normal form ---------------------------------------------------------


@dataclass(frozen=True)
class NormalForm:
    """(0 q; 1 0) ⊗ C with the C-entry normalized to leading coefficient 1.

    The pair (q, C) is defined up to (q, C) ~ (t^-2 q, t C).
    """

    m1: int
    m2: int
    q: GradedPoly
    c: TwistedVectorField

    def reconstruct(self) -> SplitHiggs:
        return SplitHiggs(
            self.m1,
            self.m2,
            TwistedVectorField.zero(0),
            self.c.scale(self.q) if not self.q.is_zero() else TwistedVectorField.zero(self.m1 - self.m2),
            self.c,
        )


def conjugate_split(h: SplitHiggs, psi: Sequence[Sequence[GradedPoly]]) -> SplitHiggs:
    """Ψ^-1 Φ Ψ for a gauge Ψ with constant nonzero determinant."""
    (p11, p12), (p21, p22) = psi
    det = p11 * p22 - p12 * p21
    if det.is_zero() or (not det.is_zero() and det.grading != 0):
        raise ValueError("gauge determinant must be a nonzero constant")
    det_val = det.coeffs[(0, 0, 0)]
    inv = Fraction(1) / det_val
    # Ψ^-1 = adj(Ψ)/det
    q11, q12, q21, q22 = p22 * inv, -p12 * inv, -p21 * inv, p11 * inv
    (a, b), (c, d) = h.entries()
    # M = Φ Ψ
    m11 = a.scale(p11) + b.scale(p21)
    m12 = a.scale(p12) + b.scale(p22)
    m21 = c.scale(p11) + d.scale(p21)
    m22 = c.scale(p12) + d.scale(p22)
    # Ψ^-1 M
    r11 = m11.scale(q11) + m21.scale(q12)
    r12 = m12.scale(q11) + m22.scale(q12)
    r21 = m11.scale(q21) + m21.scale(q22)
    r22 = m12.scale(q21) + m22.scale(q22)
    if not (r11 + r22).is_zero():
        raise ValueError("conjugation lost trace-freeness (bad gauge twists)")
    return SplitHiggs(h.m1, h.m2, r11, r12, r21)


def gauge_normalize(h: SplitHiggs, lam: GradedPoly, mu: GradedPoly) -> NormalForm:
    """Bring an integrable stable field with A = λC, B = μC to normal form.

    q = λ² + μ up to the scale fixing C's leading coefficient to 1; the
    reconstruction Ψ^-1 Φ Ψ = (0 q; 1 0) ⊗ C is checked exactly.
    """
    verdict = is_stable_split(h)
    if not verdict.stable:
        raise NotStable(verdict.witness or "field is not stable")
    if not is_integrable(h):
        raise NotIntegrable("Φ∧Φ != 0")
    if h.A != h.C.scale(lam) or h.B != h.C.scale(mu):
        raise ValueError("(λ, μ) do not reproduce the A and B components")
    gap = h.m1 - h.m2
    c_red = h.C.canonical()
    lead = next(x for x in c_red.coords() if x != 0)
    c_norm = c_red.scale(Fraction(1) / lead)
    q_raw = lam * lam + mu if not (lam.is_zero() and mu.is_zero()) else GradedPoly.zero()
    q_norm = q_raw * (lead * lead) if not q_raw.is_zero() else GradedPoly.zero(grading=2 * gap)
    form = NormalForm(h.m1, h.m2, q_norm, c_norm)
    # explicit gauge: shear by λ then diagonal diag(1, s) with s the old
    # leading coefficient (only valid representative-level check when C
    # was already given by its canonical representative)
    one = GradedPoly.constant(1)
    shear = ((one, lam), (GradedPoly.zero(), one))
    sheared = conjugate_split(h, shear)
    scale_gauge = ((one, GradedPoly.zero()), (GradedPoly.zero(), GradedPoly.constant(lead)))
    transformed = conjugate_split(sheared, scale_gauge)
    expect = form.reconstruct()
    if not (
        transformed.A == expect.A
        and transformed.B == expect.B
        and transformed.C == expect.C
    ):
        raise NotIntegrable("gauge reconstruction check failed")
    return form


def orbit_equal(n1: NormalForm, n2: NormalForm) -> bool:
    """Same point of the weight (-2, +1) scaling action, exactly."""
    if (n1.m1, n1.m2) != (n2.m1, n2.m2):
        return False
    c1 = n1.c.reduced_coords()
    c2 = n2.c.reduced_coords()
    z1 = all(x == 0 for x in c1)
    z2 = all(x == 0 for x in c2)
    if z1 != z2:
        return False
    if z1:
        # degenerate: compare q up to an arbitrary square scale
        if n1.q.is_zero() != n2.q.is_zero():
            return False
        if n1.q.is_zero():
            return True
        ratio = None
        for e in set(n1.q.coeffs) | set(n2.q.coeffs):
            v1, v2 = n1.q.coeffs.get(e, Fraction(0)), n2.q.coeffs.get(e, Fraction(0))
            if (v1 == 0) != (v2 == 0):
                return False
            if v1 != 0:
                r = v2 / v1
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return False
        return ratio > 0 and _is_rational_square(ratio)
    t = None
    for a, b in zip(c1, c2):
        if (a == 0) != (b == 0):
            return False
        if a != 0:
            r = b / a
            if t is None:
                t = r
            elif r != t:
                return False
    # q2 must equal t^-2 q1
    return n2.q == n1.q * (Fraction(1) / (t * t))


def _is_rational_square(r: Fraction) -> bool:
    if r < 0:
        return False
    from math import isqrt

    n, d = r.numerator, r.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def hitchin_det(obj) -> Sym2Section:
    """Determinant of a trace-free 2x2 field as a section of S²T.

    For (A B; C -A) this is -(A⊙A) - (B⊙C); on a normal form it equals
    -q·(C⊙C). Gauge conjugation leaves it fixed.
    """
    if isinstance(obj, NormalForm):
        base = sym_prod(obj.c, obj.c)
        if obj.q.is_zero():
            return Sym2Section.zero(0)
        return base.scale(obj.q).scale(Fraction(-1))
    h = obj
    return (sym_prod(h.A, h.A) + sym_prod(h.B, h.C)).scale(Fraction(-1))


def is_nilpotent(obj) -> bool:
    """tr = 0 always holds here, so nilpotency is exactly det = 0."""
    return hitchin_det(obj).is_zero()


@dataclass(frozen=True)
class PointReport:
    point: tuple[Fraction, ...]
    field_vanishes: bool


def regularity_check(obj, points: Sequence[Sequence]) -> list[PointReport]:
    """Evaluate the field at sample points; a zero value means the
    commutant jumps there (non-regular point)."""
    h = obj.reconstruct() if isinstance(obj, NormalForm) else obj
    out = []
    for pt in points:
        p = normalize_point(pt)
        vanishes = h.A.vanishes_at(p) and h.B.vanishes_at(p) and h.C.vanishes_at(p)
        out.append(PointReport(p, vanishes))
    return out


# -- tangent-bundle Higgs fields ------------------------------------------


class TangentHiggs:
    """Φ = Σ a_ij φ_i ⊗ C_j against the canonical bases of
    H^0(End0 T(1)) (6 elements) and H^0(T(-1)) (3 elements)."""

    __slots__ = ("table",)

    def __init__(self, table: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in table)
        if len(rows) != 6 or any(len(r) != 3 for r in rows):
            raise ValueError("coefficient table must be 6x3")
        object.__setattr__(self, "table", rows)

    def __setattr__(self, name, value):
        raise AttributeError("TangentHiggs is immutable")

    @classmethod
    def simple(cls, phi_coeffs: Sequence, c_coeffs: Sequence) -> "TangentHiggs":
        phi_coeffs = vector(phi_coeffs)
        c_coeffs = vector(c_coeffs)
        return cls([[u * v for v in c_coeffs] for u in phi_coeffs])

    @classmethod
    def from_flat(cls, coeffs: Sequence) -> "TangentHiggs":
        coeffs = list(coeffs)
        if len(coeffs) != 18:
            raise ValueError("18 coefficients expected")
        return cls([coeffs[3 * i : 3 * i + 3] for i in range(6)])

    def flat(self) -> Vector:
        return tuple(x for row in self.table for x in row)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.flat())

    def rank(self) -> int:
        return ExactMatrix.from_rows(self.table).rank()

    def to_json(self) -> str:
        return json.dumps(
            {"bundle": "tangent", "coeffs": [str(x) for x in self.flat()]}
        )

    @classmethod
    def from_json(cls, text: str) -> "TangentHiggs":
        data = json.loads(text)
        if data.get("bundle") != "tangent":
            raise ValueError("not a tangent-bundle field")
        return cls.from_flat([Fraction(x) for x in data["coeffs"]])


@lru_cache(maxsize=None)
def _pair_vectors() -> dict:
    """Coords of [φ_i, φ_k]·(C_j ∧ C_l) in H^0(End0 T(3)), for i<k, j<l."""
    phis = end0T_basis(1)
    cs = tfield_basis(-1)
    wedges = {}
    for j in range(3):
        for l in range(j + 1, 3):
            wedges[(j, l)] = wedge(cs[j], cs[l])
    out = {}
    for i in range(6):
        for k in range(i + 1, 6):
            comm = endoT_commutator(phis[i], phis[k])
            for (j, l), w in wedges.items():
                if w.is_zero():
                    coords = tuple(Fraction(0) for _ in range(end0T_context(3).dim))
                else:
                    coords = end0T_quotient_coords(comm.scale(w))
                out[(i, k, j, l)] = coords
    return out


def tangent_wedge(phi: TangentHiggs) -> Vector:
    """Coordinates of Φ∧Φ in H^0(End0 T(3)) (up to a global factor 2):
    Σ_{i<k, j<l} 2·(a_ij a_kl - a_il a_kj)·[φ_i, φ_k]·(C_j ∧ C_l)."""
    pairs = _pair_vectors()
    dim = end0T_context(3).dim
    acc = [Fraction(0)] * dim
    a = phi.table
    for (i, k, j, l), vec in pairs.items():
        minor = a[i][j] * a[k][l] - a[i][l] * a[k][j]
        if minor:
            f = 2 * minor
            for t in range(dim):
                if vec[t]:
                    acc[t] += f * vec[t]
    return tuple(acc)


def tangent_wedge_linearized(phi: TangentHiggs) -> ExactMatrix:
    """Matrix of Θ -> Θ∧Φ + Φ∧Θ on the 18-dim coefficient space,
    expressed in H^0(End0 T(3)) coordinates."""
    pairs = _pair_vectors()
    dim = end0T_context(3).dim
    a = phi.table

    def signed(i, k, j, l):
        s = 1
        if i == k or j == l:
            return None
        if i > k:
            i, k = k, i
            s = -s
        if j > l:
            j, l = l, j
            s = -s
        return s, pairs[(i, k, j, l)]

    columns = []
    for i0 in range(6):
        for j0 in range(3):
            col = [Fraction(0)] * dim
            for k in range(6):
                for l in range(3):
                    got = signed(i0, k, j0, l)
                    if got is None or a[k][l] == 0:
                        continue
                    s, vec = got
                    f = 2 * s * a[k][l]
                    for t in range(dim):
                        if vec[t]:
                            col[t] += f * vec[t]
            columns.append(col)
    return ExactMatrix.from_rows(
        [[columns[c][r] for c in range(18)] for r in range(dim)]
    )


def simple_tensor_test(phi: TangentHiggs) -> bool:
    """True iff the coefficient table has rank <= 1 (simple tensor)."""
    return phi.rank() <= 1


def tangent_section_det(coeffs: Sequence) -> GradedPoly:
    """det of Σ c_i φ_i over the canonical basis of H^0(End0 T(1))."""
    return endoT_det(combine_endoT(coeffs))


def endoT_ad_rank(phi: EndoTSection) -> int:
    """Rank of [-, φ] : H^0(End0 T(1)) -> H^0(End0 T(2))."""
    ctx2 = end0T_context(2)
    cols = [ctx2.coords(endoT_commutator(psi, phi).coords()) for psi in end0T_basis(1)]
    return ExactMatrix.from_rows(
        [[cols[c][r] for c in range(len(cols))] for r in range(ctx2.dim)]
    ).rank()


def combine_endoT(coeffs: Sequence) -> EndoTSection:
    phis = end0T_basis(1)
    acc = EndoTSection.zero(1)
    for c, p in zip(vector(coeffs), phis):
        if c:
            acc = acc + p.scale(c)
    return acc


@dataclass(frozen=True)
class ProbeSample:
    coeffs: tuple
    det_nonzero: bool
    even_ok: bool
    jacobian_rank: int | None


@dataclass(frozen=True)
class DoubleCoverReport:
    samples: tuple[ProbeSample, ...]
    passed: bool
    ledger: tuple[str, ...]


def _det_jacobian_rank(coeffs) -> int:
    phis = end0T_basis(1)
    phi = combine_endoT(coeffs)
    det = endoT_det(phi)
    cols = []
    for i in range(6):
        bilinear = endoT_det(phi + phis[i]) - det - endoT_det(phis[i])
        cols.append(coord_vector(bilinear, 2))
    return ExactMatrix.from_rows(
        [[cols[c][r] for c in range(6)] for r in range(6)]
    ).rank()


def det_double_cover_probe(samples: int, seed: int = 0) -> DoubleCoverReport:
    """Sampled evidence that det is locally 2:1 on H^0(End0 T(1)).

    det(-φ) = det(φ) exactly for every draw, and the differential of the
    quadratic map has full rank 6 at every sample in general position
    (nonsingular determinant conic, i.e. regular φ). The differential is
    NOT full-rank on the whole non-nilpotent locus: draws whose
    determinant is a nonzero singular conic are recorded in the ledger
    with their (necessarily smaller) rank rather than counted as
    verification samples.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    from .schwarz import conic_singular

    rng = rng_for(seed)
    results = []
    failures = []
    observations = []
    s = 0
    while s < samples:
        coeffs = tuple(rand_int(rng) for _ in range(6))
        det = tangent_section_det(coeffs)
        det_neg = tangent_section_det([-c for c in coeffs])
        even_ok = det == det_neg
        if not even_ok:
            failures.append(f"draw {coeffs}: det(-φ) != det(φ)")
        if det.is_zero():
            continue
        rank = _det_jacobian_rank(coeffs)
        if conic_singular(det):
            # critical locus: rank must drop exactly here
            if rank == 6:
                failures.append(
                    f"draw {coeffs}: full-rank differential on a singular-"
                    "determinant sample"
                )
            observations.append(
                f"non-regular draw (singular determinant): jacobian rank {rank}"
            )
            continue
        s += 1
        if rank != 6:
            failures.append(f"sample {s}: jacobian rank {rank} at a regular point")
        results.append(ProbeSample(coeffs, True, even_ok, rank))
    ledger = (
        f"{samples} regular samples, seed {seed}",
        f"det(0) = 0: {tangent_section_det([0] * 6).is_zero()}",
        *observations,
        *failures,
    )
    return DoubleCoverReport(tuple(results), not failures, ledger)


# -- seeded constructions used by the CLI and the verify umbrella ---------


def random_split_sample(m1: int, m2: int, seed: int):
    """A random stable integrable field on O(m1)⊕O(m2) with its (λ, μ)."""
    rng = rng_for(seed)
    gap = m1 - m2
    if gap < 0:
        raise ValueError("order the bundle so m1 >= m2")
    if gap >= 2:
        raise NotStable(
            f"twist gap {gap} >= 2: the C-component space is empty, so no"
            " stable field exists"
        )
    while True:
        c_coeffs = [rand_int(rng) for _ in tfield_basis(m2 - m1)]
        c = TwistedVectorField.zero(m2 - m1)
        for coeff, s in zip(c_coeffs, tfield_basis(m2 - m1)):
            if coeff:
                c = c + s.scale(coeff)
        if c.is_zero():
            continue
        try:
            family = solve_integrable(c, m1, m2)
        except NotIntegrable:
            continue
        lam = random_poly(gap, rng)
        mu = random_poly(2 * gap, rng)
        if gap == 0 and mu.is_zero():
            mu = GradedPoly.constant(rand_nonzero_int(rng))
        h = family.higgs(lam, mu)
        if not is_stable_split(h).stable:
            continue
        return h, family, lam, mu


def random_tangent_sample(seed: int) -> TangentHiggs:
    """A random rank-1 tangent field φ⊗C with det φ != 0."""
    rng = rng_for(seed)
    while True:
        phi_coeffs = [rand_int(rng) for _ in range(6)]
        c_coeffs = [rand_int(rng) for _ in range(3)]
        if all(c == 0 for c in phi_coeffs) or all(c == 0 for c in c_coeffs):
            continue
        if tangent_section_det(phi_coeffs).is_zero():
            continue
        return TangentHiggs.simple(phi_coeffs, c_coeffs)

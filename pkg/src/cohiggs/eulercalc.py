"""Section calculus on the plane through the Euler presentation.

Sections of the twisted tangent bundle T(d) are triples of degree-(d+1)
polynomials modulo the relation triples (Q·x0, Q·x1, Q·x2); symmetric
squares and trace-free endomorphisms of T get the analogous lifted
models. Every quotient has a fixed coordinate system (exactlin's
deterministic echelon forms), so "the" basis of H^0(T(d)) or
H^0(End0 T(d)) means one specific list of representatives, normalized so
the first nonzero coordinate in graded-lex order is 1.

All pairings (wedge into O(d1+d2+3), symmetric product, commutator) are
computed on lifted representatives; vanishing on the relation subspace
is a tested property, not an assumption.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import polyring
from .errors import ZeroSection
from .exactlin import ExactMatrix, QuotientContext, Vector, vector
from .polyring import PLANE, GradedPoly, basis, coord_vector, from_coords

X = tuple(GradedPoly.variable(v) for v in polyring.PLANE_VARS)


def _plane_dim(d: int) -> int:
    return basis(d).size


def _triple_coords(polys: Sequence[GradedPoly], degree: int) -> Vector:
    out: list[Fraction] = []
    for p in polys:
        out.extend(coord_vector(p, degree))
    return tuple(out)


def _triple_from_coords(coords: Sequence, degree: int) -> tuple[GradedPoly, ...]:
    n = _plane_dim(degree)
    return tuple(
        from_coords(degree, coords[i * n : (i + 1) * n]) for i in range(3)
    )


def cross(p: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    return (
        p[1] * v[2] - p[2] * v[1],
        p[2] * v[0] - p[0] * v[2],
        p[0] * v[1] - p[1] * v[0],
    )


def normalize_point(coords: Sequence) -> tuple[Fraction, ...]:
    """Projective normalization: first nonzero coordinate scaled to 1."""
    pt = vector(coords)
    if len(pt) != 3:
        raise ValueError("projective point needs 3 coordinates")
    for c in pt:
        if c != 0:
            return tuple(x / c for x in pt)
    raise ValueError("(0:0:0) is not a projective point")


# -- twisted vector fields ----------------------------------------------


class TwistedVectorField:
    """A section of T(d): triple of degree-(d+1) polynomials mod the
    relation subspace. Two triples represent the same section iff their
    difference is (Q x0, Q x1, Q x2)."""

    __slots__ = ("twist", "components")

    def __init__(self, twist: int, components: Sequence[GradedPoly]):
        components = tuple(components)
        if len(components) != 3:
            raise ValueError("need exactly three components")
        want = twist + 1
        for p in components:
            if not p.is_zero() and (p.family != PLANE or p.grading != want):
                raise ValueError(
                    f"component degree {p.grading} does not match twist {twist}"
                )
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("TwistedVectorField is immutable")

    @classmethod
    def zero(cls, twist: int) -> "TwistedVectorField":
        z = GradedPoly.zero()
        return cls(twist, (z, z, z))

    @classmethod
    def from_coords(cls, twist: int, coords: Sequence) -> "TwistedVectorField":
        return cls(twist, _triple_from_coords(coords, twist + 1))

    def coords(self) -> Vector:
        return _triple_coords(self.components, self.twist + 1)

    def reduced_coords(self) -> Vector:
        return tfield_context(self.twist).reduce(self.coords())

    def canonical(self) -> "TwistedVectorField":
        return TwistedVectorField.from_coords(self.twist, self.reduced_coords())

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.reduced_coords())

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedVectorField):
            return NotImplemented
        if self.twist != other.twist:
            return self.is_zero() and other.is_zero()
        return self.reduced_coords() == other.reduced_coords()

    def __hash__(self):
        return hash((self.twist, self.reduced_coords()))

    def __repr__(self):
        comps = ", ".join(polyring.to_str(p) for p in self.components)
        return f"TwistedVectorField(T({self.twist}): [{comps}])"

    def __add__(self, other: "TwistedVectorField") -> "TwistedVectorField":
        if self.twist != other.twist:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise ValueError("twist mismatch")
        return TwistedVectorField(
            self.twist,
            tuple(a + b for a, b in zip(self.components, other.components)),
        )

    def __neg__(self) -> "TwistedVectorField":
        return TwistedVectorField(self.twist, tuple(-c for c in self.components))

    def __sub__(self, other: "TwistedVectorField") -> "TwistedVectorField":
        return self + (-other)

    def scale(self, factor) -> "TwistedVectorField":
        """Multiply by a rational or by a homogeneous polynomial of
        degree e (shifting the twist by e)."""
        if isinstance(factor, GradedPoly):
            if factor.is_zero():
                return TwistedVectorField.zero(self.twist)
            return TwistedVectorField(
                self.twist + factor.grading,
                tuple(factor * c for c in self.components),
            )
        c = Fraction(factor)
        return TwistedVectorField(self.twist, tuple(c * p for p in self.components))

    def value_at(self, point: Sequence) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(p.evaluate(point) for p in self.components)

    def vanishes_at(self, point: Sequence) -> bool:
        """Zero as a section at the point: the value is proportional to
        the point's own coordinate vector (relation triples vanish
        nowhere, so this is representative-independent)."""
        pt = normalize_point(point)
        return all(c == 0 for c in cross(pt, self.value_at(pt)))


def euler_triple(d: int, q: GradedPoly) -> TwistedVectorField:
    """The relation triple (q x0, q x1, q x2) in the twist-d model."""
    return TwistedVectorField(d, tuple(q * x for x in X))


@lru_cache(maxsize=None)
def tfield_context(d: int) -> QuotientContext:
    ambient = 3 * _plane_dim(d + 1)
    moves = []
    for exps in basis(d).exponents:
        q = GradedPoly.monomial(PLANE, exps)
        moves.append(euler_triple(d, q).coords())
    return QuotientContext(ambient, moves)


@lru_cache(maxsize=None)
def tfield_basis(d: int) -> tuple[TwistedVectorField, ...]:
    """Canonical basis of H^0(T(d)); empty for d <= -2."""
    ctx = tfield_context(d)
    return tuple(TwistedVectorField.from_coords(d, v) for v in ctx.basis)


def tfield_quotient_coords(v: TwistedVectorField) -> Vector:
    return tfield_context(v.twist).coords(v.coords())


def wedge(u: TwistedVectorField, v: TwistedVectorField) -> GradedPoly:
    """Pairing into Λ²T(d1+d2) = O(d1+d2+3): the determinant with rows
    (x0, x1, x2), u's triple, v's triple."""
    p, q = u.components, v.components
    return (
        X[0] * (p[1] * q[2] - p[2] * q[1])
        - X[1] * (p[0] * q[2] - p[2] * q[0])
        + X[2] * (p[0] * q[1] - p[1] * q[0])
    )


# -- symmetric squares ---------------------------------------------------

SYM_INDEX = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


class Sym2Section:
    """A section of S²T(d): symmetric matrix of degree-(d+2) polynomials
    modulo symmetrized relation moves S -> S + x v^T + v x^T."""

    __slots__ = ("twist", "entries")

    def __init__(self, twist: int, entries: Sequence[GradedPoly]):
        entries = tuple(entries)
        if len(entries) != 6:
            raise ValueError("need the 6 upper-triangle entries")
        want = twist + 2
        for p in entries:
            if not p.is_zero() and (p.family != PLANE or p.grading != want):
                raise ValueError(f"entry degree {p.grading} does not match twist {twist}")
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Sym2Section is immutable")

    @classmethod
    def zero(cls, twist: int) -> "Sym2Section":
        z = GradedPoly.zero()
        return cls(twist, (z,) * 6)

    @classmethod
    def from_coords(cls, twist: int, coords: Sequence) -> "Sym2Section":
        n = _plane_dim(twist + 2)
        return cls(
            twist,
            tuple(from_coords(twist + 2, coords[i * n : (i + 1) * n]) for i in range(6)),
        )

    def entry(self, i: int, j: int) -> GradedPoly:
        if i > j:
            i, j = j, i
        return self.entries[SYM_INDEX.index((i, j))]

    def coords(self) -> Vector:
        out: list[Fraction] = []
        for p in self.entries:
            out.extend(coord_vector(p, self.twist + 2))
        return tuple(out)

    def reduced_coords(self) -> Vector:
        return sym2_context(self.twist).reduce(self.coords())

    def canonical(self) -> "Sym2Section":
        return Sym2Section.from_coords(self.twist, self.reduced_coords())

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.reduced_coords())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sym2Section):
            return NotImplemented
        if self.twist != other.twist:
            return self.is_zero() and other.is_zero()
        return self.reduced_coords() == other.reduced_coords()

    def __hash__(self):
        return hash((self.twist, self.reduced_coords()))

    def __add__(self, other: "Sym2Section") -> "Sym2Section":
        if self.twist != other.twist:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise ValueError("twist mismatch")
        return Sym2Section(
            self.twist, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "Sym2Section":
        return Sym2Section(self.twist, tuple(-p for p in self.entries))

    def __sub__(self, other: "Sym2Section") -> "Sym2Section":
        return self + (-other)

    def scale(self, factor) -> "Sym2Section":
        if isinstance(factor, GradedPoly):
            if factor.is_zero():
                return Sym2Section.zero(self.twist)
            return Sym2Section(
                self.twist + factor.grading, tuple(factor * p for p in self.entries)
            )
        c = Fraction(factor)
        return Sym2Section(self.twist, tuple(c * p for p in self.entries))


def sym_prod(u: TwistedVectorField, v: TwistedVectorField) -> Sym2Section:
    """Symmetric pairing into S²T(d1+d2): (P Q^T + Q P^T) / 2."""
    p, q = u.components, v.components
    half = Fraction(1, 2)
    return Sym2Section(
        u.twist + v.twist,
        tuple(half * (p[i] * q[j] + q[i] * p[j]) for i, j in SYM_INDEX),
    )


@lru_cache(maxsize=None)
def sym2_context(d: int) -> QuotientContext:
    ambient = 6 * _plane_dim(d + 2)
    moves = []
    for k in range(3):
        for exps in basis(d + 1).exponents:
            m = GradedPoly.monomial(PLANE, exps)
            entries = []
            for i, j in SYM_INDEX:
                e = GradedPoly.zero()
                if j == k:
                    e = e + X[i] * m
                if i == k:
                    e = e + X[j] * m
                entries.append(e)
            moves.append(Sym2Section(d, entries).coords())
    return QuotientContext(ambient, moves)


@lru_cache(maxsize=None)
def sym2_basis(d: int = 0) -> tuple[Sym2Section, ...]:
    """Canonical basis of H^0(S²T(d)); 27 elements at d = 0."""
    ctx = sym2_context(d)
    return tuple(Sym2Section.from_coords(d, v) for v in ctx.basis)


def sym2_move_rank(d: int = 0) -> int:
    return len(sym2_context(d).move_rref)


def sym2_quotient_coords(s: Sym2Section) -> Vector:
    return sym2_context(s.twist).coords(s.coords())


# -- trace-free endomorphisms of T ---------------------------------------


class EndoTSection:
    """A section of End0 T(d), lifted to a 3x3 matrix M of degree-d
    polynomials with M x = g x (g the scalar witness) and tr M = g,
    modulo moves M -> M + x w^T."""

    __slots__ = ("twist", "matrix", "g")

    def __init__(self, twist: int, matrix: Sequence[GradedPoly], g: GradedPoly = None):
        matrix = tuple(matrix)
        if len(matrix) != 9:
            raise ValueError("need a 3x3 matrix, row-major")
        for p in matrix:
            if not p.is_zero() and (p.family != PLANE or p.grading != twist):
                raise ValueError(f"entry degree {p.grading} does not match twist {twist}")
        trace = matrix[0] + matrix[4] + matrix[8]
        if g is None:
            g = trace
        if not (trace - g).is_zero():
            raise ValueError("induced trace tr(M) - g is nonzero")
        for i in range(3):
            resid = sum(
                (matrix[3 * i + j] * X[j] for j in range(3)), GradedPoly.zero()
            ) - g * X[i]
            if not resid.is_zero():
                raise ValueError("M x = g x fails: not a lifted endomorphism of T")
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "g", g)

    def __setattr__(self, name, value):
        raise AttributeError("EndoTSection is immutable")

    @classmethod
    def zero(cls, twist: int) -> "EndoTSection":
        z = GradedPoly.zero()
        return cls(twist, (z,) * 9, z)

    @classmethod
    def from_coords(cls, twist: int, coords: Sequence) -> "EndoTSection":
        n = _plane_dim(twist)
        matrix = tuple(
            from_coords(twist, coords[i * n : (i + 1) * n]) for i in range(9)
        )
        return cls(twist, matrix)

    def coords(self) -> Vector:
        out: list[Fraction] = []
        for p in self.matrix:
            out.extend(coord_vector(p, self.twist))
        return tuple(out)

    def reduced_coords(self) -> Vector:
        return end0T_context(self.twist).reduce(self.coords())

    def canonical(self) -> "EndoTSection":
        return EndoTSection.from_coords(self.twist, self.reduced_coords())

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.reduced_coords())

    def __eq__(self, other) -> bool:
        if not isinstance(other, EndoTSection):
            return NotImplemented
        if self.twist != other.twist:
            return self.is_zero() and other.is_zero()
        return self.reduced_coords() == other.reduced_coords()

    def __hash__(self):
        return hash((self.twist, self.reduced_coords()))

    def __add__(self, other: "EndoTSection") -> "EndoTSection":
        if self.twist != other.twist:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise ValueError("twist mismatch")
        return EndoTSection(
            self.twist,
            tuple(a + b for a, b in zip(self.matrix, other.matrix)),
            self.g + other.g,
        )

    def __neg__(self) -> "EndoTSection":
        return EndoTSection(self.twist, tuple(-p for p in self.matrix), -self.g)

    def __sub__(self, other: "EndoTSection") -> "EndoTSection":
        return self + (-other)

    def scale(self, factor) -> "EndoTSection":
        if isinstance(factor, GradedPoly):
            if factor.is_zero():
                return EndoTSection.zero(self.twist)
            return EndoTSection(
                self.twist + factor.grading,
                tuple(factor * p for p in self.matrix),
                factor * self.g,
            )
        c = Fraction(factor)
        return EndoTSection(
            self.twist, tuple(c * p for p in self.matrix), c * self.g
        )

    def value_at(self, point: Sequence) -> list[list[Fraction]]:
        return [
            [self.matrix[3 * i + j].evaluate(point) for j in range(3)]
            for i in range(3)
        ]

    def vanishes_at(self, point: Sequence) -> bool:
        """Zero as an endomorphism of the fiber T_p: every column of the
        value matrix is proportional to p."""
        pt = normalize_point(point)
        m = self.value_at(pt)
        for j in range(3):
            col = (m[0][j], m[1][j], m[2][j])
            if any(c != 0 for c in cross(pt, col)):
                return False
        return True


@lru_cache(maxsize=None)
def end0T_context(d: int) -> QuotientContext:
    """Coordinates on H^0(End0 T(d)): solutions of {M x = tr(M) x}
    modulo the moves x w^T."""
    n = _plane_dim(d)
    ambient = 9 * n
    # constraint: coefficient vector -> coords of M x - tr(M) x, three
    # components of degree d+1
    rows_dim = 3 * _plane_dim(d + 1)
    columns = []
    for pos in range(ambient):
        entry_idx, mono_idx = divmod(pos, n)
        i, j = divmod(entry_idx, 3)
        m = GradedPoly.monomial(PLANE, basis(d).exponents[mono_idx])
        resid = [GradedPoly.zero() for _ in range(3)]
        resid[i] = resid[i] + m * X[j]
        if i == j:
            for t in range(3):
                resid[t] = resid[t] - m * X[t]
        columns.append(_triple_coords(resid, d + 1))
    constraint = ExactMatrix.from_rows(
        [[columns[c][r] for c in range(ambient)] for r in range(rows_dim)]
    )
    solutions = constraint.kernel_basis()
    moves = []
    for j in range(3):
        for exps in basis(d - 1).exponents:
            m = GradedPoly.monomial(PLANE, exps)
            mat = [GradedPoly.zero() for _ in range(9)]
            for i in range(3):
                mat[3 * i + j] = X[i] * m
            moves.append(
                _triple_coords(mat[0:3], d)
                + _triple_coords(mat[3:6], d)
                + _triple_coords(mat[6:9], d)
            )
    return QuotientContext(ambient, moves, solutions)


@lru_cache(maxsize=None)
def end0T_basis(d: int) -> tuple[EndoTSection, ...]:
    """Canonical basis of H^0(End0 T(d)); empty for d = 0 (T is simple)."""
    ctx = end0T_context(d)
    return tuple(EndoTSection.from_coords(d, v) for v in ctx.basis)


def end0T_quotient_coords(e: EndoTSection) -> Vector:
    return end0T_context(e.twist).coords(e.coords())


def endoT_commutator(a: EndoTSection, b: EndoTSection) -> EndoTSection:
    """Matrix commutator; automatically a lifted trace-free endomorphism
    with scalar witness 0."""
    ma, mb = a.matrix, b.matrix
    out = []
    for i in range(3):
        for j in range(3):
            acc = GradedPoly.zero()
            for k in range(3):
                acc = acc + ma[3 * i + k] * mb[3 * k + j] - mb[3 * i + k] * ma[3 * k + j]
            out.append(acc)
    return EndoTSection(a.twist + b.twist, out, GradedPoly.zero())


def endoT_det(e: EndoTSection) -> GradedPoly:
    """Determinant of the induced rank-2 endomorphism: -(tr(M²) - g²)/2."""
    m = e.matrix
    tr_sq = GradedPoly.zero()
    for i in range(3):
        for k in range(3):
            tr_sq = tr_sq + m[3 * i + k] * m[3 * k + i]
    return (tr_sq - e.g * e.g) * Fraction(-1, 2)


# -- zero loci and point conditions ---------------------------------------


def zero_locus(c: TwistedVectorField) -> tuple[Fraction, ...]:
    """The single point where a nonzero section of T(-1) vanishes."""
    if c.twist != -1:
        raise ValueError("zero_locus is defined for sections of T(-1)")
    coords = c.reduced_coords()
    if all(x == 0 for x in coords):
        raise ZeroSection("the zero section has no well-defined zero locus")
    return normalize_point(coords)


def _condition_rows(section, pt) -> list[Vector]:
    if isinstance(section, GradedPoly):
        return [(section.evaluate(pt),)]
    if isinstance(section, TwistedVectorField):
        return [cross(pt, section.value_at(pt))]
    if isinstance(section, EndoTSection):
        m = section.value_at(pt)
        return [cross(pt, (m[0][j], m[1][j], m[2][j])) for j in range(3)]
    raise TypeError(f"unsupported section type {type(section).__name__}")


def sections_vanishing_at(sections: Sequence, point: Sequence) -> list:
    """Canonical basis of the subspace of sections vanishing at a point.

    Works uniformly for polynomial sections, twisted vector fields and
    lifted endomorphisms; returns linear combinations of the input
    basis, canonicalized.
    """
    if not sections:
        return []
    pt = normalize_point(point)
    condition_blocks = [_condition_rows(s, pt) for s in sections]
    n_rows = sum(len(b[0]) for b in condition_blocks[:1]) * len(condition_blocks[0][0])
    # rows: each scalar condition; cols: the sections
    per_section = [
        [c for row in block for c in row] for block in condition_blocks
    ]
    n_conditions = len(per_section[0])
    if any(len(p) != n_conditions for p in per_section):
        raise ValueError("sections of mixed kinds in one basis")
    matrix = ExactMatrix.from_rows(
        [[per_section[t][r] for t in range(len(sections))] for r in range(n_conditions)]
    )
    combos = matrix.kernel_basis()
    out = []
    for w in combos:
        acc = None
        for coeff, s in zip(w, sections):
            if coeff == 0:
                continue
            term = s.scale(coeff) if not isinstance(s, GradedPoly) else coeff * s
            acc = term if acc is None else acc + term
        if acc is None:
            continue
        out.append(acc.canonical() if not isinstance(acc, GradedPoly) else acc)
    return out


# -- explicit model of H^0(End0 T ⊗ T) ------------------------------------


@lru_cache(maxsize=None)
def end0T_tensor_t_dim() -> tuple[int, tuple[str, ...]]:
    """dim H^0(End0 T ⊗ T) by a lifted linear model (independent of the
    tensor-decomposition route).

    Ambient: a 3x3 matrix W of vector-field lifts (triples of linear
    forms) plus a common witness triple G with sum_j W_ij x_j = x_i G in
    T(1); trace-free means sum_i W_ii = G in T(0). Moves: entrywise
    relation triples, maps through the sub-line x, and the witness's own
    relation shift.
    """
    n1 = 3  # coords of a linear form
    ambient = 81 + 9  # 9 entries x (3 components x 3 coeffs) + G
    lin_basis = basis(1).exponents
    ctx1 = tfield_context(1)
    ctx0 = tfield_context(0)

    def unpack(vec):
        w = [
            [
                [Fraction(x) for x in vec[(3 * i + j) * 9 + 3 * c : (3 * i + j) * 9 + 3 * c + 3]]
                for c in range(3)
            ]
            for i in range(3)
            for j in range(3)
        ]
        g = [
            [Fraction(x) for x in vec[81 + 3 * c : 81 + 3 * c + 3]] for c in range(3)
        ]
        return w, g

    def lin(coeffs):
        return from_coords(1, coeffs)

    def residual_coords(vec):
        w_flat, g_coeffs = unpack(vec)
        w = [[None] * 3 for _ in range(3)]
        for idx in range(9):
            i, j = divmod(idx, 3)
            w[i][j] = [lin(w_flat[idx][c]) for c in range(3)]
        g = [lin(g_coeffs[c]) for c in range(3)]
        rows: list[Fraction] = []
        for i in range(3):
            resid = [
                sum((w[i][j][c] * X[j] for j in range(3)), GradedPoly.zero())
                - X[i] * g[c]
                for c in range(3)
            ]
            rows.extend(ctx1.reduce(_triple_coords(resid, 2)))
        trace = [
            sum((w[i][i][c] for i in range(3)), GradedPoly.zero()) - g[c]
            for c in range(3)
        ]
        rows.extend(ctx0.reduce(_triple_coords(trace, 1)))
        return tuple(rows)

    unit = [Fraction(0)] * ambient
    columns = []
    for pos in range(ambient):
        unit[pos] = Fraction(1)
        columns.append(residual_coords(unit))
        unit[pos] = Fraction(0)
    n_rows = len(columns[0])
    constraint = ExactMatrix.from_rows(
        [[columns[c][r] for c in range(ambient)] for r in range(n_rows)]
    )
    solutions = constraint.kernel_basis()

    moves = []
    # entrywise relation triples: W_ij += c (x0, x1, x2)
    for idx in range(9):
        v = [Fraction(0)] * ambient
        for c in range(3):
            # component c of entry idx gains the linear form x_c
            xc = coord_vector(X[c], 1)
            for t in range(3):
                v[idx * 9 + 3 * c + t] = xc[t]
        moves.append(tuple(v))
    # maps through the sub-line: W_ij = x_i delta_{j j0} e_m, G_m += x_{j0}
    for j0 in range(3):
        for m in range(3):
            v = [Fraction(0)] * ambient
            for i in range(3):
                idx = 3 * i + j0
                xi = coord_vector(X[i], 1)
                for t in range(3):
                    v[idx * 9 + 3 * m + t] = xi[t]
            xj = coord_vector(X[j0], 1)
            for t in range(3):
                v[81 + 3 * m + t] = xj[t]
            moves.append(tuple(v))
    # witness relation shift: G += c (x0, x1, x2)
    v = [Fraction(0)] * ambient
    for c in range(3):
        xc = coord_vector(X[c], 1)
        for t in range(3):
            v[81 + 3 * c + t] = xc[t]
    moves.append(tuple(v))

    ctx = QuotientContext(ambient, moves, solutions)
    ledger = (
        f"lifted model: {ambient} parameters, {len(solutions)} solutions of the"
        " sub-line and trace constraints",
        f"moves subspace rank {len(ctx.move_rref)}",
        f"dim H^0(End0 T ⊗ T) = {ctx.dim}",
    )
    return ctx.dim, ledger

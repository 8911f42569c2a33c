"""Dense exact linear algebra over the rationals.

Scalars are stdlib ``fractions.Fraction`` values (always lowest terms,
positive denominator), so every equality test is exact and no tolerance
appears anywhere. Matrices are small and dense — row reduction with a
fixed pivot rule (leftmost nonzero column, topmost nonzero entry) keeps
every echelon form, kernel basis and quotient representative canonical,
which is what the rest of the package relies on for reproducible output.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContainmentViolation

ExactScalar = Fraction

Vector = tuple[Fraction, ...]


def scalar(x) -> Fraction:
    """Coerce ints / strings / Fractions to an exact scalar."""
    return Fraction(x)


def vector(entries: Iterable) -> Vector:
    return tuple(Fraction(e) for e in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return all(a == 0 for a in v)


class ExactMatrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [tuple(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)],
        )

    def matvec(self, v: Sequence) -> Vector:
        v = vector(v)
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(
            sum((self[i, j] * v[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(str(self[i, j]) for j in range(self.cols)) for i in range(self.rows)
        )
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"

    def rank(self) -> int:
        return len(rref(self.row_list())[0])

    def kernel_basis(self) -> list[Vector]:
        """Canonical basis of the right kernel, in reduced echelon form.

        The raw free-column vectors from the RREF are re-echelonized so
        the returned basis depends only on the kernel subspace, not on
        the presentation of the matrix.
        """
        reduced, pivots = rref(self.row_list())
        free = [j for j in range(self.cols) if j not in pivots]
        raw = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -reduced[r][f]
            raw.append(tuple(v))
        return rref_basis(raw)


def solve(m: "ExactMatrix", rhs: Sequence) -> Vector | None:
    """One solution of m x = rhs, or None when inconsistent.

    With the fixed pivot rule the returned solution is canonical (free
    variables set to zero).
    """
    rhs = vector(rhs)
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length mismatch")
    aug = [list(m.row(i)) + [rhs[i]] for i in range(m.rows)]
    reduced, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for row, p in zip(reduced, pivots):
        x[p] = row[m.cols]
    return tuple(x)


def rref(rows: Sequence[Sequence]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form with the fixed pivot rule.

    Pivot rule: scan columns left to right, take the topmost nonzero
    entry at or below the current row. Returns (nonzero rows, pivot
    columns); zero rows are dropped.
    """
    m = [list(vector(r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [inv * e for e in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(m[i]) for i in range(len(pivots))], pivots


def rref_basis(vectors: Iterable[Sequence]) -> list[Vector]:
    """Canonical (RREF) basis of the span of the given vectors."""
    return rref(list(vectors))[0]


def rank_of(vectors: Iterable[Sequence]) -> int:
    return len(rref_basis(vectors))


def reduce_mod(v: Sequence, basis_rref: Sequence[Vector], pivots: Sequence[int]) -> Vector:
    """Canonical representative of ``v`` modulo the span of an RREF basis."""
    v = list(vector(v))
    for row, p in zip(basis_rref, pivots):
        if v[p] != 0:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return tuple(v)


def in_span(v: Sequence, vectors: Sequence[Sequence]) -> bool:
    basis, pivots = rref(list(vectors))
    return is_zero_vector(reduce_mod(v, basis, pivots))


def subspace_quotient_dim(span_a: Sequence[Sequence], span_b: Sequence[Sequence]) -> int:
    """dim(A/B) for subspaces B ⊆ A, with the containment checked."""
    basis_a, pivots_a = rref(list(span_a))
    for i, b in enumerate(span_b):
        if not is_zero_vector(reduce_mod(b, basis_a, pivots_a)):
            raise ContainmentViolation(f"vector #{i} of span_b is outside span_a")
    return len(basis_a) - len(rref_basis(span_b))


class QuotientContext:
    """Coordinates on ``span(solutions) / span(moves)``.

    Everything downstream that says "canonical representative" goes
    through one of these: reduce against the move-space RREF, then read
    coordinates off the pivot columns of the RREF'd reduced solution
    basis. ``solutions=None`` means the full ambient space.
    """

    def __init__(self, ambient_dim: int, moves: Sequence[Sequence], solutions=None):
        self.ambient_dim = ambient_dim
        self.move_rref, self.move_pivots = rref(list(moves))
        if solutions is None:
            reduced = []
            occupied = set(self.move_pivots)
            for j in range(ambient_dim):
                if j not in occupied:
                    v = [Fraction(0)] * ambient_dim
                    v[j] = Fraction(1)
                    reduced.append(tuple(v))
        else:
            reduced = [self.reduce(s) for s in solutions]
        self.basis, self.basis_pivots = rref(reduced)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence) -> Vector:
        return reduce_mod(v, self.move_rref, self.move_pivots)

    def coords(self, v: Sequence) -> Vector:
        """Coordinates of [v] over the canonical basis; checks membership."""
        red = self.reduce(v)
        coeffs = tuple(red[p] for p in self.basis_pivots)
        recon = [Fraction(0)] * self.ambient_dim
        for c, row in zip(coeffs, self.basis):
            for j, e in enumerate(row):
                if e:
                    recon[j] += c * e
        if tuple(recon) != red:
            raise ContainmentViolation("vector is not in the solution space")
        return coeffs

    def from_coords(self, coeffs: Sequence) -> Vector:
        coeffs = vector(coeffs)
        if len(coeffs) != self.dim:
            raise ValueError("coordinate length mismatch")
        out = [Fraction(0)] * self.ambient_dim
        for c, row in zip(coeffs, self.basis):
            if c:
                for j, e in enumerate(row):
                    if e:
                        out[j] += c * e
        return tuple(out)

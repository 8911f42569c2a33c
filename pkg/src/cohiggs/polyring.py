"""Graded polynomial algebra with canonical monomial-basis coordinates.

Two variable families are supported:

* ``plane``   — homogeneous polynomials in x0, x1, x2 of a single degree d;
* ``quadric`` — bihomogeneous polynomials in (s0, s1) x (t0, t1) of
  bidegree (a, b), each pair graded independently.

Monomials are ordered graded-lexicographically with x0 > x1 > x2
(resp. s0 > s1 > t0 > t1); since every polynomial here is homogeneous,
this is descending lex on exponent tuples within the fixed grading.
The order is global so coordinate vectors, quotient representatives and
serialized output are byte-reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import GradingMismatch, NonHomogeneous, ParseError

PLANE = "plane"
QUADRIC = "quadric"

PLANE_VARS = ("x0", "x1", "x2")
QUADRIC_VARS = ("s0", "s1", "t0", "t1")

# grading values: int d for the plane, (a, b) pair for the quadric


def _exp_degree(family: str, exps: tuple[int, ...]):
    if family == PLANE:
        return sum(exps)
    return (exps[0] + exps[1], exps[2] + exps[3])


@dataclass(frozen=True)
class MonomialBasis:
    family: str
    grading: object
    exponents: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.exponents)

    def index(self, exps: tuple[int, ...]) -> int:
        return self.exponents.index(exps)


@lru_cache(maxsize=None)
def basis(grading, family: str = PLANE) -> MonomialBasis:
    """Ordered monomial basis; empty when any degree is negative."""
    if isinstance(grading, tuple):
        family = QUADRIC
        a, b = grading
        if a < 0 or b < 0:
            return MonomialBasis(family, grading, ())
        exps = tuple(
            (i, a - i, j, b - j)
            for i in range(a, -1, -1)
            for j in range(b, -1, -1)
        )
        return MonomialBasis(family, grading, exps)
    d = grading
    if d < 0:
        return MonomialBasis(PLANE, d, ())
    exps = tuple(
        sorted(
            (
                (e0, e1, d - e0 - e1)
                for e0 in range(d + 1)
                for e1 in range(d - e0 + 1)
            ),
            reverse=True,
        )
    )
    return MonomialBasis(PLANE, d, exps)


class GradedPoly:
    """Homogeneous polynomial with exact rational coefficients.

    Zero coefficients are never stored. The zero polynomial keeps a
    declared grading when one is known (so coordinate vectors have a
    length); a bare zero with ``grading=None`` is compatible with any
    graded piece of the same family.
    """

    __slots__ = ("family", "grading", "coeffs")

    def __init__(self, family: str, coeffs: dict, grading=None):
        clean = {}
        inferred = None
        for exps, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            exps = tuple(exps)
            d = _exp_degree(family, exps)
            if inferred is None:
                inferred = d
            elif d != inferred:
                raise NonHomogeneous(inferred, d)
            clean[exps] = c
        if inferred is not None:
            if grading is not None and grading != inferred:
                raise NonHomogeneous(grading, inferred)
            grading = inferred
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "grading", grading)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GradedPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, family: str = PLANE, grading=None) -> "GradedPoly":
        return cls(family, {}, grading)

    @classmethod
    def constant(cls, value, family: str = PLANE) -> "GradedPoly":
        value = Fraction(value)
        zero_exp = (0, 0, 0) if family == PLANE else (0, 0, 0, 0)
        grading = 0 if family == PLANE else (0, 0)
        return cls(family, {zero_exp: value}, grading)

    @classmethod
    def monomial(cls, family: str, exps: Sequence[int], coeff=1) -> "GradedPoly":
        return cls(family, {tuple(exps): Fraction(coeff)})

    @classmethod
    def variable(cls, name: str) -> "GradedPoly":
        if name in PLANE_VARS:
            exps = [0, 0, 0]
            exps[PLANE_VARS.index(name)] = 1
            return cls(PLANE, {tuple(exps): Fraction(1)})
        if name in QUADRIC_VARS:
            exps = [0, 0, 0, 0]
            exps[QUADRIC_VARS.index(name)] = 1
            return cls(QUADRIC, {tuple(exps): Fraction(1)})
        raise ValueError(f"unknown variable {name!r}")

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_family(self, other: "GradedPoly"):
        if self.family != other.family and not (self.is_zero() or other.is_zero()):
            raise GradingMismatch(f"{self.family} vs {other.family}")

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._check_family(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.grading != other.grading:
            raise NonHomogeneous(self.grading, other.grading)
        out = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return GradedPoly(self.family, out, self.grading)

    def __neg__(self) -> "GradedPoly":
        return GradedPoly(self.family, {e: -c for e, c in self.coeffs.items()}, self.grading)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, GradedPoly):
            c = Fraction(other)
            return GradedPoly(
                self.family, {e: c * v for e, v in self.coeffs.items()}, self.grading
            )
        self._check_family(other)
        if self.is_zero() or other.is_zero():
            fam = self.family if not self.is_zero() else other.family
            return GradedPoly.zero(fam)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return GradedPoly(self.family, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.family == other.family and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.family, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        return f"GradedPoly({to_str(self)!r})"

    def evaluate(self, point: Sequence) -> Fraction:
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for exps, c in self.coeffs.items():
            term = c
            for p, e in zip(point, exps):
                if e:
                    term *= p**e
            total += term
        return total


def coord_vector(p: GradedPoly, grading=None) -> tuple[Fraction, ...]:
    """Coordinates of ``p`` over ``basis(grading)``; round-trips with from_coords."""
    if grading is None:
        grading = p.grading
    if grading is None:
        raise ValueError("zero polynomial with no declared grading: pass one")
    b = basis(grading, p.family)
    if not p.is_zero() and p.grading != grading:
        raise NonHomogeneous(grading, p.grading)
    return tuple(p.coeffs.get(e, Fraction(0)) for e in b.exponents)


def from_coords(grading, coords: Iterable, family: str = PLANE) -> GradedPoly:
    if isinstance(grading, tuple):
        family = QUADRIC
    b = basis(grading, family)
    coords = list(coords)
    if len(coords) != b.size:
        raise ValueError(f"expected {b.size} coordinates, got {len(coords)}")
    return GradedPoly(b.family, dict(zip(b.exponents, coords)), grading)


# -- parsing -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x[012]|s[01]|t[01])|([+\-*/^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = pos + len(text[pos:]) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", at)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return tokens


def parse(text: str, family: str = PLANE) -> GradedPoly:
    """Parse a polynomial literal.

    Grammar: poly := ["-"] term (("+"|"-") term)*;
    term := rational ["*" factor ("*" factor)*] | factor ("*" factor)*;
    factor := var ["^" nat]; rational := nat ["/" nat].
    Homogeneity is validated; the family is inferred from the variables
    (``family`` only disambiguates pure constants).
    """
    tokens = _tokenize(text)
    n = len(tokens)
    if n == 0:
        raise ParseError("empty input", 0)
    idx = 0

    def peek():
        return tokens[idx] if idx < n else ("end", None, len(text))

    def take():
        nonlocal idx
        t = peek()
        idx += 1
        return t

    def parse_rational(sign: int) -> Fraction:
        kind, val, pos = take()
        if kind != "num":
            raise ParseError("expected a number", pos)
        num = val
        if peek()[0] == "op" and peek()[1] == "/":
            take()
            kind, den, pos = take()
            if kind != "num":
                raise ParseError("expected a denominator", pos)
            if den == 0:
                raise ParseError("zero denominator", pos)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def parse_factor() -> tuple[str, int]:
        kind, name, pos = take()
        if kind != "var":
            raise ParseError("expected a variable", pos)
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            kind, e, pos = take()
            if kind != "num":
                raise ParseError("expected an exponent", pos)
            return name, e
        return name, 1

    seen_families = set()

    def parse_term(sign: int):
        coeff = Fraction(sign)
        factors = []
        if peek()[0] == "num":
            coeff = parse_rational(sign)
            if peek()[0] == "op" and peek()[1] == "*":
                take()
                factors.append(parse_factor())
            else:
                return coeff, factors
        else:
            factors.append(parse_factor())
        while peek()[0] == "op" and peek()[1] == "*":
            take()
            factors.append(parse_factor())
        return coeff, factors

    terms = []
    sign = 1
    if peek()[0] == "op" and peek()[1] == "-":
        take()
        sign = -1
    terms.append(parse_term(sign))
    while idx < n:
        kind, op, pos = take()
        if kind != "op" or op not in "+-":
            raise ParseError(f"expected '+' or '-', got {op!r}", pos)
        terms.append(parse_term(1 if op == "+" else -1))

    coeffs: dict = {}
    for coeff, factors in terms:
        fams = {PLANE if f[0].startswith("x") else QUADRIC for f in factors}
        if len(fams) > 1:
            raise ParseError("mixed plane and quadric variables", 0)
        seen_families |= fams
    if len(seen_families) > 1:
        raise ParseError("mixed plane and quadric variables", 0)
    fam = seen_families.pop() if seen_families else family
    varnames = PLANE_VARS if fam == PLANE else QUADRIC_VARS
    degree = None
    for coeff, factors in terms:
        exps = [0] * len(varnames)
        for name, e in factors:
            exps[varnames.index(name)] += e
        exps = tuple(exps)
        d = _exp_degree(fam, exps)
        if degree is None:
            degree = d
        elif d != degree:
            raise NonHomogeneous(degree, d)
        key = exps
        coeffs[key] = coeffs.get(key, Fraction(0)) + coeff
    return GradedPoly(fam, coeffs, degree)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_str(p: GradedPoly) -> str:
    """Canonical literal: terms in basis order; parse(to_str(p)) == p."""
    if p.is_zero():
        return "0"
    varnames = PLANE_VARS if p.family == PLANE else QUADRIC_VARS
    b = basis(p.grading, p.family)
    parts = []
    for exps in b.exponents:
        c = p.coeffs.get(exps)
        if not c:
            continue
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(varnames, exps)
            if e
        ]
        mag = abs(c)
        if not factors:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _fmt_coeff(mag) + "*" + "*".join(factors)
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out

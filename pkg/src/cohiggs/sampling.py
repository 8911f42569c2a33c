"""Deterministic random sampling for property checks.

Every randomized check in the package takes an explicit seed and builds
its generator here, so verify runs are reproducible byte for byte.
Coefficients are small integers: genericity only needs to avoid proper
subvarieties, and small exact rationals keep the arithmetic fast.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .eulercalc import TwistedVectorField, tfield_basis
from .polyring import PLANE, GradedPoly, basis


def rng_for(seed: int) -> random.Random:
    return random.Random(seed)


def rand_int(rng: random.Random, span: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span))


def rand_nonzero_int(rng: random.Random, span: int = 4) -> Fraction:
    while True:
        v = rng.randint(-span, span)
        if v != 0:
            return Fraction(v)


def random_poly(degree: int, rng: random.Random, family: str = PLANE, span: int = 3) -> GradedPoly:
    b = basis(degree if family == PLANE else degree, family)
    return GradedPoly(
        family,
        {e: rand_int(rng, span) for e in b.exponents},
        degree,
    )


def random_nonzero_poly(degree: int, rng: random.Random, span: int = 3) -> GradedPoly:
    while True:
        p = random_poly(degree, rng, span=span)
        if not p.is_zero():
            return p


def random_tvf(twist: int, rng: random.Random, span: int = 3) -> TwistedVectorField:
    sections = tfield_basis(twist)
    out = TwistedVectorField.zero(twist)
    for s in sections:
        c = rand_int(rng, span)
        if c:
            out = out + s.scale(c)
    return out


def random_nonzero_tvf(twist: int, rng: random.Random, span: int = 3) -> TwistedVectorField:
    while True:
        v = random_tvf(twist, rng, span)
        if not v.is_zero():
            return v


def random_point(rng: random.Random) -> tuple[Fraction, Fraction, Fraction]:
    while True:
        pt = tuple(rand_int(rng, 5) for _ in range(3))
        if any(c != 0 for c in pt):
            return pt

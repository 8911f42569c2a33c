"""Higgs fields: integrability, stability, solver, normal forms, tangent model."""

from fractions import Fraction

import pytest

from cohiggs.errors import NotIntegrable, NotStable, ZeroSection
from cohiggs.eulercalc import TwistedVectorField, end0T_basis, sym_prod, tfield_basis
from cohiggs.higgsfields import (
    NormalForm,
    SplitHiggs,
    TangentHiggs,
    combine_endoT,
    conjugate_split,
    det_double_cover_probe,
    endoT_ad_rank,
    gauge_normalize,
    hitchin_det,
    is_integrable,
    is_nilpotent,
    is_stable_split,
    orbit_equal,
    parse_bundle,
    parse_tvf,
    phi_wedge_phi,
    random_split_sample,
    random_tangent_sample,
    regularity_check,
    simple_tensor_test,
    solve_integrable,
    tangent_section_det,
    tangent_wedge,
)
from cohiggs.polyring import GradedPoly, parse, to_str
from cohiggs.sampling import rng_for


def const_tvf(a, b, c):
    return TwistedVectorField(-1, tuple(GradedPoly.constant(v) for v in (a, b, c)))


def zero_field(t):
    return TwistedVectorField.zero(t)


def test_parse_bundle():
    assert parse_bundle("split:0,-1") == (0, -1)
    with pytest.raises(ValueError):
        parse_bundle("tangent")


def test_phi_wedge_phi_zero_cases():
    c = const_tvf(1, 0, 0)
    h = SplitHiggs(0, -1, zero_field(0), zero_field(1), c)
    assert is_integrable(h)
    lam, mu = parse("x1"), parse("x1*x2")
    h2 = SplitHiggs(0, -1, c.scale(lam), c.scale(mu), c)
    assert is_integrable(h2)
    m = phi_wedge_phi(h2)
    assert all(p.is_zero() for row in m for p in row)


def test_phi_wedge_phi_generic_nonzero():
    rng = rng_for(9)
    from cohiggs.sampling import random_tvf

    hits = 0
    for _ in range(10):
        a = random_tvf(0, rng)
        b = random_tvf(1, rng)
        c = random_tvf(-1, rng)
        h = SplitHiggs(0, -1, a, b, c)
        m = phi_wedge_phi(h)
        if any(not p.is_zero() for row in m for p in row):
            hits += 1
    assert hits >= 8  # the integrable locus is a proper subvariety


def test_phi_wedge_phi_diagonal_antisymmetry():
    h, *_ = random_split_sample(0, -1, seed=4)
    # perturb to a non-integrable field and check the diagonal identity
    rng = rng_for(12)
    from cohiggs.sampling import random_tvf

    h2 = SplitHiggs(0, -1, random_tvf(0, rng), random_tvf(1, rng), h.C)
    m = phi_wedge_phi(h2)
    assert m[0][0] == -m[1][1]


def test_stability_verdicts():
    c = const_tvf(1, 0, 0)
    h = SplitHiggs(0, -1, zero_field(0), zero_field(1), c)
    assert is_stable_split(h).stable
    h0 = SplitHiggs(0, -1, zero_field(0), zero_field(1), zero_field(-1))
    verdict = is_stable_split(h0)
    assert not verdict.stable and not verdict.semistable
    assert "O(0)" in verdict.witness
    # even split: B = 0 gives semistable-not-stable
    cc = tfield_basis(0)[0]
    even = SplitHiggs(0, 0, zero_field(0), zero_field(0), cc)
    v = is_stable_split(even)
    assert v.semistable and not v.stable
    both = SplitHiggs(0, 0, zero_field(0), cc, cc)
    assert is_stable_split(both).stable
    # gap >= 2 is rejected outright
    wide = SplitHiggs(0, -2, zero_field(0), zero_field(2), zero_field(-2))
    v2 = is_stable_split(wide)
    assert not v2.stable and not v2.semistable


def test_solver_dims_odd_split():
    fam = solve_integrable(const_tvf(1, 0, 0), 0, -1)
    assert len(fam.a_kernel) == 3
    assert len(fam.b_kernel) == 6
    with pytest.raises(ZeroSection):
        solve_integrable(zero_field(-1), 0, -1)


def test_solver_dims_even_split():
    # a vector field with isolated zeros
    c = parse_tvf("x1,-x0,0", 0)
    fam = solve_integrable(c, 0, 0)
    assert len(fam.a_kernel) == 1
    assert len(fam.b_kernel) == 1


def test_solver_rejects_degenerate_even_field():
    # (x1, x0, x2) vanishes along the line x0 = x1: kernels jump
    c = parse_tvf("x1,x0,x2", 0)
    with pytest.raises(NotIntegrable):
        solve_integrable(c, 0, 0)


def test_gauge_normalize_examples():
    c = const_tvf(1, 0, 0)
    fam = solve_integrable(c, 0, -1)
    zero1, zero2 = GradedPoly.zero(), GradedPoly.zero()
    nf = gauge_normalize(fam.higgs(zero1, zero2), zero1, zero2)
    assert nf.q.is_zero()
    lam, mu = parse("x0"), parse("-x0^2")
    nf2 = gauge_normalize(fam.higgs(lam, mu), lam, mu)
    assert nf2.q.is_zero()
    lam3, mu3 = parse("x0"), parse("x1*x2")
    nf3 = gauge_normalize(fam.higgs(lam3, mu3), lam3, mu3)
    assert to_str(nf3.q) == "x0^2 + x1*x2"


def test_gauge_normalize_guards():
    c = const_tvf(1, 0, 0)
    fam = solve_integrable(c, 0, -1)
    lam, mu = parse("x0"), parse("x1*x2")
    h = fam.higgs(lam, mu)
    with pytest.raises(ValueError):
        gauge_normalize(h, parse("x1"), parse("x1*x2"))  # wrong λ
    unstable = SplitHiggs(0, -1, zero_field(0), zero_field(1), zero_field(-1))
    with pytest.raises(NotStable):
        gauge_normalize(unstable, GradedPoly.zero(), GradedPoly.zero())
    rng = rng_for(3)
    from cohiggs.sampling import random_tvf

    crooked = SplitHiggs(0, -1, random_tvf(0, rng), random_tvf(1, rng), c)
    if not is_integrable(crooked):
        with pytest.raises((NotIntegrable, ValueError)):
            gauge_normalize(crooked, GradedPoly.zero(), GradedPoly.zero())


def test_gauge_normalize_scales_leading_coefficient():
    c = const_tvf(2, 4, 0)
    fam = solve_integrable(c, 0, -1)
    lam, mu = parse("x0"), parse("x2^2")
    nf = gauge_normalize(fam.higgs(lam, mu), lam, mu)
    lead = next(x for x in nf.c.coords() if x != 0)
    assert lead == 1
    # q picks up the square of the old leading coefficient
    assert nf.q == (lam * lam + mu) * Fraction(4)


def test_orbit_equal():
    c = const_tvf(1, 0, 0)
    q = parse("x0^2 + x1*x2")
    n1 = NormalForm(0, -1, q, c)
    n2 = NormalForm(0, -1, q * Fraction(1, 4), c.scale(Fraction(2)))
    assert orbit_equal(n1, n2)
    n3 = NormalForm(0, -1, q, c.scale(Fraction(2)))
    assert not orbit_equal(n1, n3)
    z1 = NormalForm(0, -1, GradedPoly.zero(), c)
    z2 = NormalForm(0, -1, GradedPoly.zero(), c.scale(Fraction(7)))
    assert orbit_equal(z1, z2)


def test_orbit_equal_is_equivalence_on_samples():
    rng = rng_for(20)
    from cohiggs.sampling import rand_int, random_poly

    forms = []
    for _ in range(6):
        coeffs = [rand_int(rng) for _ in range(3)]
        if all(x == 0 for x in coeffs):
            coeffs[0] = Fraction(1)
        forms.append(NormalForm(0, -1, random_poly(2, rng), const_tvf(*coeffs)))
    for a in forms:
        assert orbit_equal(a, a)
        for b in forms:
            assert orbit_equal(a, b) == orbit_equal(b, a)
            for c in forms:
                if orbit_equal(a, b) and orbit_equal(b, c):
                    assert orbit_equal(a, c)


def test_hitchin_det_normal_form():
    c = const_tvf(1, 0, 0)
    nf = NormalForm(0, -1, GradedPoly.zero(), c)
    assert hitchin_det(nf).is_zero()
    assert is_nilpotent(nf)
    even = NormalForm(0, 0, GradedPoly.constant(1), tfield_basis(0)[0])
    det = hitchin_det(even)
    assert det == sym_prod(even.c, even.c).scale(Fraction(-1))


def test_hitchin_det_matches_reconstruction():
    h, fam, lam, mu = random_split_sample(0, -1, seed=6)
    nf = gauge_normalize(h, lam, mu)
    assert hitchin_det(h) == hitchin_det(nf.reconstruct())
    assert hitchin_det(nf) == hitchin_det(nf.reconstruct())


def test_generic_field_not_nilpotent():
    for seed in (6, 16, 26):
        h, fam, lam, mu = random_split_sample(0, -1, seed=seed)
        nf = gauge_normalize(h, lam, mu)
        if nf.q.is_zero():
            continue
        assert not is_nilpotent(nf)
        assert not is_nilpotent(h)


def test_hitchin_det_gauge_invariance():
    h, *_ = random_split_sample(0, 0, seed=13)
    det0 = hitchin_det(h)
    one, zero = GradedPoly.constant(1), GradedPoly.zero()
    shear = ((one, GradedPoly.constant(3)), (zero, one))
    diag = ((GradedPoly.constant(2), zero), (zero, GradedPoly.constant(5)))
    assert hitchin_det(conjugate_split(h, shear)) == det0
    assert hitchin_det(conjugate_split(h, diag)) == det0


def test_regularity_flags_zero_locus_only():
    c = const_tvf(0, 1, 0)
    nf = NormalForm(0, -1, parse("x0^2"), c)
    reports = regularity_check(nf, [(1, 0, 0), (0, 1, 0), (1, 1, 1)])
    flags = {r.point: r.field_vanishes for r in reports}
    assert flags[(0, 1, 0)] is True
    assert flags[(1, 0, 0)] is False
    assert flags[(1, 1, 1)] is False


def test_tangent_higgs_table_laws():
    t = TangentHiggs.simple([1, 0, 2, 0, 1, 0], [1, 2, 3])
    assert t.rank() == 1
    assert simple_tensor_test(t)
    assert all(x == 0 for x in tangent_wedge(t))
    zero = TangentHiggs.from_flat([0] * 18)
    assert simple_tensor_test(zero)
    assert all(x == 0 for x in tangent_wedge(zero))


def test_tangent_wedge_rank_two_nonzero():
    # e1xe1 + e2xe2 with a nonvanishing commutator
    phis = end0T_basis(1)
    from cohiggs.eulercalc import endoT_commutator

    assert not endoT_commutator(phis[0], phis[1]).is_zero()
    table = [[0] * 3 for _ in range(6)]
    table[0][0] = 1
    table[1][1] = 1
    t = TangentHiggs(table)
    assert t.rank() == 2
    assert any(x != 0 for x in tangent_wedge(t))


def test_tangent_json_roundtrip():
    t = TangentHiggs.simple([1, 0, 2, 0, 1, 0], [1, Fraction(1, 2), 3])
    assert TangentHiggs.from_json(t.to_json()).table == t.table


def test_split_json_roundtrip():
    h, *_ = random_split_sample(0, -1, seed=21)
    h2 = SplitHiggs.from_json(h.to_json())
    assert h2.A == h.A and h2.B == h.B and h2.C == h.C


def test_ad_rank_five_at_regular_elements():
    rng = rng_for(14)
    from cohiggs.sampling import rand_int
    from cohiggs.schwarz import conic_singular

    found = 0
    while found < 3:
        coeffs = [rand_int(rng) for _ in range(6)]
        det = tangent_section_det(coeffs)
        if det.is_zero() or conic_singular(det):
            continue
        found += 1
        assert endoT_ad_rank(combine_endoT(coeffs)) == 5


def test_double_cover_probe():
    rep = det_double_cover_probe(6, seed=2)
    assert rep.passed
    assert tangent_section_det([0] * 6).is_zero()
    with pytest.raises(ValueError):
        det_double_cover_probe(0)


def test_random_tangent_sample_properties():
    phi = random_tangent_sample(42)
    assert phi.rank() == 1
    assert not phi.is_zero()


def test_random_split_sample_gates():
    with pytest.raises(NotStable):
        random_split_sample(0, -2, seed=0)
    with pytest.raises(ValueError):
        random_split_sample(-1, 0, seed=0)


def test_tvf_literal_validation():
    with pytest.raises(ValueError):
        parse_tvf("x0,x1", -1)
    with pytest.raises(ValueError):
        parse_tvf("x0,x1,x2", -1)  # degree 1 components in a twist -1 slot

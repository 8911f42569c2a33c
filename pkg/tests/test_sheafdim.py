"""Cohomology closed forms, Chern arithmetic, and the sequence chaser."""

from fractions import Fraction

import pytest

from cohiggs.errors import InconsistentData, IntegralityError, RankUnsupported
from cohiggs.sheafdim import (
    ChaseInterval,
    ChernCharacter,
    ChernData,
    CohomProfile,
    TANGENT_CH,
    chern_twist,
    chi_rr,
    endo_ch,
    h_p2,
    h_quadric,
    les_chase,
    profile_p2,
    profile_quadric,
    schwarz_chern,
    sym2_ch,
    tensor_ch,
)


def test_h_p2_closed_forms():
    assert h_p2(0, 2) == 6
    assert all(h_p2(1, d) == 0 for d in range(-10, 10))
    assert h_p2(2, -3) == 1
    assert h_p2(0, -1) == 0


def test_serre_duality_grid():
    for d in range(-12, 13):
        assert h_p2(0, d) == h_p2(2, -d - 3)


def test_h_quadric():
    for d in range(0, 5):
        assert h_quadric(0, d, d) == (d + 1) ** 2
        assert h_quadric(1, d, d) == 0
    assert h_quadric(0, 0, 4) == 5
    assert h_quadric(1, -2, 3) == 4


def test_kunneth_symmetry():
    for a in range(-6, 7):
        for b in range(-6, 7):
            for i in range(3):
                assert h_quadric(i, a, b) == h_quadric(i, b, a)


def test_chern_twist():
    # the k = 4 data twisted into the odd family, and k = 3 into the even
    assert chern_twist(ChernData(2, 3, 6), -2) == ChernData(2, -1, 4)
    assert chern_twist(ChernData(2, 2, 3), -1) == ChernData(2, 0, 2)
    c = ChernData(2, 5, 7)
    assert chern_twist(c, 0) == c
    with pytest.raises(RankUnsupported):
        chern_twist(ChernData(3, 0, 0), 1)


def test_schwarz_chern_and_dual():
    data, dual = schwarz_chern(3)
    assert (data.c1, data.c2) == (2, 3)
    assert (dual.c1, dual.c2) == (-2, 3)
    assert schwarz_chern(0)[0] == ChernData(2, -1, 0)
    assert schwarz_chern(1)[0] == ChernData(2, 0, 0)


def test_chi_rr_structure_sheaf():
    for d in range(0, 8):
        assert chi_rr(ChernCharacter.line(0), d) == (d + 1) * (d + 2) // 2
        assert chi_rr(ChernCharacter.line(0), d) == h_p2(0, d)


def test_chi_rr_tangent_endo():
    end_t = endo_ch(ChernData(2, 3, 3))
    assert (end_t.ch0, end_t.ch1, end_t.ch2) == (3, 0, -3)
    assert chi_rr(end_t, 1) == 6
    assert chi_rr(end_t, 0) == 0


def test_endo_ch_direct_image_family():
    # hand expansion of ch(V) ch(dual V) - 1 for (2, k-1, k(k-1)/2)
    for k in range(0, 13):
        ch = endo_ch(schwarz_chern(k)[0])
        assert (ch.ch0, ch.ch1, ch.ch2) == (3, 0, 1 - k * k)
        assert chi_rr(ch, 0) == 4 - k * k
    assert chi_rr(endo_ch(schwarz_chern(5)[0]), 0) == -21


def test_tensor_ch_identity():
    one = ChernCharacter.line(0)
    assert tensor_ch(TANGENT_CH, one) == TANGENT_CH


def test_chern_character_roundtrip():
    # rank-2 data -> character -> data: c1 = ch1, c2 = (ch1² - 2 ch2)/2
    for c in (ChernData(2, 3, 3), ChernData(2, -1, 4), ChernData(2, 0, 2)):
        ch = ChernCharacter.of(c)
        assert ch.ch0 == 2
        c1 = int(ch.ch1)
        c2 = (c1 * c1 - 2 * ch.ch2) / 2
        assert ChernData(2, c1, int(c2)) == c
    d = ChernData(2, 5, 7)
    assert d.dual() == ChernData(2, -5, 7)


def test_sym2_ch_tangent():
    ch = sym2_ch(TANGENT_CH)
    assert (ch.ch0, ch.ch1, ch.ch2) == (3, 9, Fraction(21, 2))
    assert chi_rr(ch) == 27


def test_integrality_error():
    bad = ChernCharacter(Fraction(1), Fraction(1, 2), Fraction(0))
    with pytest.raises(IntegralityError):
        chi_rr(bad, 0)


# -- the chaser ----------------------------------------------------------


def test_chase_pulled_tangent():
    mid = les_chase(
        [("sub", profile_quadric(2, 0)), ("mid", None), ("quot", profile_quadric(1, 3))],
        label="pulled tangent",
    )
    assert isinstance(mid, CohomProfile)
    assert mid.triple() == (11, 0, 0)


def test_chase_twisted_pulled_tangent():
    five = les_chase(
        [("sub", profile_quadric(0, 4)), ("mid", None), ("quot", profile_quadric(-1, 7))],
        label="k = 3 twist",
    )
    assert five.triple() == (5, 0, 0)
    vanish = les_chase(
        [("sub", profile_quadric(-2, 6)), ("mid", None), ("quot", profile_quadric(-3, 9))],
        label="k = 5 twist",
    )
    assert vanish.h0 == 0 and vanish.h1 == 27


def test_chase_left_exactness_for_sub():
    # unknown sub with zero mid h0 forces zero sub h0
    mid = CohomProfile(0, 9, 0)
    quot = CohomProfile(0, 0, 0)
    out = les_chase([("sub", None), ("mid", mid), ("quot", quot)])
    assert out.h0 == 0 and out.h1 == 9


def test_chase_chi_additivity():
    sub = profile_quadric(1, 1)
    quot = profile_quadric(0, 3)
    mid = les_chase([("sub", sub), ("mid", None), ("quot", quot)])
    assert mid.chi == sub.chi + quot.chi


def test_chase_interval_and_assumptions():
    # an ambiguous connecting map: 0 -> A -> E -> B -> 0 with h0(A) = 1,
    # h1(A) = 1, h0(B) = 1 and everything else zero leaves the rank of
    # h0(B) -> h1(A) open: the middle h^• is an interval
    sub = CohomProfile(1, 1, 0)
    quot = CohomProfile(1, 0, 0)
    out = les_chase([("sub", sub), ("mid", None), ("quot", quot)])
    assert isinstance(out, ChaseInterval)
    assert out.lo == (1, 0, 0) and out.hi == (2, 1, 0)
    assert any("h0->h1" in u for u in out.unresolved)
    forced = les_chase(
        [("sub", sub), ("mid", None), ("quot", quot)], assumptions=("h0->h1",)
    )
    assert isinstance(forced, CohomProfile)
    assert forced.triple() == (2, 1, 0)


def test_chase_inconsistent():
    with pytest.raises(InconsistentData):
        les_chase(
            [
                ("sub", CohomProfile(2, 0, 0)),
                ("mid", CohomProfile(1, 0, 0)),
                ("quot", None),
            ]
        )


def test_chase_ledger_records_inputs():
    mid = les_chase(
        [("sub", profile_quadric(2, 0)), ("mid", None), ("quot", profile_quadric(1, 3))],
        label="ledger probe",
    )
    text = " ".join(mid.ledger)
    assert "(3, 0, 0)" in text and "(8, 0, 0)" in text and "(11, 0, 0)" in text


def test_profile_scaled():
    assert profile_p2(1).scaled(3).triple() == (9, 0, 0)

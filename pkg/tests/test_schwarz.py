"""Direct-image dimension engine: closed forms, routes, tables, conics."""

import pytest

from cohiggs.errors import DomainError, ZeroConic
from cohiggs.polyring import parse
from cohiggs.schwarz import (
    ROUTES,
    SchwarzParams,
    TENSOR_T,
    build_table,
    chern_coverage,
    conic_matrix,
    conic_singular,
    delta_switch,
    h0_endo_tensor_tangent,
    h0_twisted_endo,
    h1_twisted_endo,
    kunneth_route,
    plane_tangent_profile,
    pulled_tangent_profile,
    pulled_tangent_twisted_profile,
    rr_route,
)
from cohiggs.sheafdim import chi_rr, endo_ch, schwarz_chern

TABLE_K3 = ((0, 5, 0), (1, 0, 0), (10, 0, 0), (8, 0, 0), (22, 0, 0))


def test_h0_closed_form_values():
    assert h0_twisted_endo(3, 2) == 10
    assert h0_twisted_endo(3, 3) == 22
    assert h0_twisted_endo(4, 3) == 15
    assert h0_twisted_endo(5, 3) == 6
    with pytest.raises(DomainError):
        h0_twisted_endo(2, 0)
    with pytest.raises(DomainError):
        h0_twisted_endo(3, -1)


def test_h1_closed_form_values():
    assert h1_twisted_endo(3, 0) == 5
    assert h1_twisted_endo(3, 1) == 0
    for k in range(3, 10):
        assert h1_twisted_endo(k, 1) == (k * k - 9 if k > 3 else 0)
        if k > 3:
            assert h1_twisted_endo(k, 1) == k * k - 9


def test_tensor_tangent_values_and_ledger():
    v3, ledger3 = h0_endo_tensor_tangent(3)
    assert v3 == 8
    assert "11 + 5 = 16" in ledger3[0]
    assert "16 - 8 = 8" in ledger3[1]
    assert h0_endo_tensor_tangent(5)[0] == 3
    assert h0_endo_tensor_tangent(4)[0] == 3


def test_delta_boundary():
    # at d = k-1 the switched-on term is (k+1)² - k² = 2k+1 > 0 and h1 = 0
    for k in range(3, 13):
        d = k - 1
        assert delta_switch(k, d) == 1
        assert (d + 2) ** 2 - k * k == 2 * k + 1
        assert h1_twisted_endo(k, d) == 0


def test_cover_chase_profiles():
    assert pulled_tangent_profile().triple() == (11, 0, 0)
    assert pulled_tangent_twisted_profile(3).h0 == 5
    assert pulled_tangent_twisted_profile(4).h0 == 0
    assert pulled_tangent_twisted_profile(5).h0 == 0
    assert plane_tangent_profile().triple() == (8, 0, 0)


def test_kunneth_route_matches_closed_forms():
    for k in range(3, 13):
        for d in range(0, 7):
            assert kunneth_route(k, d).triple() == (
                h0_twisted_endo(k, d),
                h1_twisted_endo(k, d),
                0,
            )


def test_kunneth_route_tensor_values():
    assert kunneth_route(3, TENSOR_T).triple() == (8, 0, 0)
    assert kunneth_route(5, TENSOR_T).h1 == 27 == 2 * 25 - 23


def test_kunneth_ledger_notes_sub_bundle_choice():
    ledger = " ".join(kunneth_route(4, 1).ledger)
    assert "O(k-1,-1)" in ledger
    assert "typo" in ledger


def test_rr_route():
    assert rr_route(5, 0).chi == -21
    assert rr_route(3, TENSOR_T).chi == 8
    assert rr_route(4, TENSOR_T).chi == -6
    for k in range(3, 13):
        ch = endo_ch(schwarz_chern(k)[0])
        for d in range(0, 7):
            assert rr_route(k, d).chi == chi_rr(ch, d)
            assert rr_route(k, d).chi == 3 * (d + 1) * (d + 2) // 2 - (k * k - 1)


def test_build_table_k3():
    table = build_table(3)
    assert table.triples() == TABLE_K3
    md = table.to_markdown()
    assert "| endo | 0 | 5 | 0 |" in md
    assert "| endo⊗T | 8 | 0 | 0 |" in md


def test_build_table_frozen_k4_k6():
    assert build_table(4).triples() == (
        (0, 12, 0),
        (1, 7, 0),
        (3, 0, 0),
        (3, 9, 0),
        (15, 0, 0),
    )
    assert build_table(6).triples() == (
        (0, 32, 0),
        (1, 27, 0),
        (3, 20, 0),
        (3, 49, 0),
        (6, 11, 0),
    )


def test_build_table_route_subsets():
    t = build_table(5, routes=(ROUTES[1], ROUTES[2]))
    assert t.triples()[3] == (3, 27, 0)


def test_build_table_domain():
    with pytest.raises(DomainError):
        build_table(2)


def test_table_dict_serialization():
    d = build_table(3).to_dict()
    assert d["k"] == 3
    assert set(d["rows"]) == {"endo", "endo(1)", "endo(2)", "endo⊗T", "endo(3)"}
    cell = d["rows"]["endo"]["closed-form"]
    assert (cell["h0"], cell["h1"], cell["h2"]) == (0, 5, 0)


def test_conic_classification():
    assert not conic_singular(parse("x0^2 + x1^2 + x2^2"))
    assert conic_singular(parse("x0*x1"))
    assert not conic_singular(parse("x0*x1 - x2^2"))
    assert conic_matrix(parse("x0*x1")).rank() == 2
    with pytest.raises(ZeroConic):
        conic_singular(parse("0"))
    with pytest.raises(ValueError):
        conic_singular(parse("x0"))


def test_schwarz_params_rejects_singular_conic():
    SchwarzParams(4, parse("x0^2 + x1^2 + x2^2"))
    with pytest.raises(ZeroConic):
        SchwarzParams(4, parse("x0*x1"))
    with pytest.raises(DomainError):
        SchwarzParams(-1)


def test_chern_coverage_families():
    assert (chern_coverage(3).family_c1, chern_coverage(3).family_c2) == (0, 2)
    assert (chern_coverage(4).family_c1, chern_coverage(4).family_c2) == (-1, 4)
    assert (chern_coverage(0).family_c1, chern_coverage(0).family_c2) == (-1, 0)
    # strict monotonicity per parity
    odd = [chern_coverage(k).family_c2 for k in range(1, 13, 2)]
    even = [chern_coverage(k).family_c2 for k in range(0, 13, 2)]
    assert all(a < b for a, b in zip(odd, odd[1:]))
    assert all(a < b for a, b in zip(even, even[1:]))


def test_chi_identity_closed_forms():
    for k in range(3, 13):
        for d in range(0, 7):
            lhs = h0_twisted_endo(k, d) - h1_twisted_endo(k, d)
            assert lhs == 3 * (d + 1) * (d + 2) // 2 - (k * k - 1)

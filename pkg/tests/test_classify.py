import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncalg.classify12221 import (SAMPLES, SOLUTIONS, GenericParams, case_dispatch, case_factors, catalog,
                                 coeff_tables, gm_check, nonzero, perturbation_report, regularity_screen,
                                 residual_report, series_coeffs, si_residuals, solution_params)
from ncalg.classify12221.solutions import FIELD_J
from ncalg.classify12221.tables import a_table, x_case5, x_from_si5, y_table
from ncalg.freealg import QQ, rational


def Q(a, b=1):
    return QQ(rational(a)) / b
from ncalg.rewrite import complete

from conftest import REGULAR, completed, model
from ncalg.ainf import frobenius_data


def test_series_coeffs():
    assert series_coeffs(15) == [1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67, 83, 102, 123, 147, 174]


def test_gm_check():
    assert gm_check(Q(-8), Q(-1, 16), Q(0), Q(-4)) == {"gm2": True, "gm3": True}
    assert gm_check(Q(2), Q(-2))["gm2"] is False
    assert gm_check(Q(2), Q(3), Q(1), Q(-2))["gm3"] is False


def test_case_dispatch():
    assert case_factors(Q(2), Q(3), Q(1, 16))[1] == 0
    assert case_dispatch(Q(2), Q(3), Q(1, 16)) == 1
    assert case_dispatch(Q(2), Q(3), Q(1, 81)) == 2
    assert case_dispatch(Q(2), Q(3), Q(1, 36)) == 4
    assert case_dispatch(Q(2), Q(3), Q(1, 24)) == 5
    assert case_dispatch(Q(2), Q(3), Q(1)) is None
    with pytest.raises(ValueError):
        case_dispatch(Q(1), Q(1), Q(1))


@pytest.mark.parametrize("sid", sorted(SOLUTIONS))
def test_solution_samples_satisfy_identities(sid):
    assert len(SAMPLES[sid]) >= 3
    for values in SAMPLES[sid]:
        P, bad = residual_report(sid, values)
        assert bad == {}
        assert case_dispatch(P.g1, P.g2, P.t) == (5 if sid.startswith("1") else 4)
        assert P.t == -P.g1 * P.g2 ** 2
        assert gm_check(P.g1, P.g2, P.v, P.w) == {"gm2": True, "gm3": True}


@pytest.mark.parametrize("sid", sorted(SOLUTIONS))
def test_perturbations_are_detected(sid):
    for values in SAMPLES[sid]:
        P = solution_params(sid, values)
        assert all(perturbation_report(P).values())


def test_c_table_perturbation_is_detected():
    P = solution_params("2.1", {"h": 2, "f": 3})
    assert nonzero(si_residuals(coeff_tables(P.replace(c21=P.c[(2, 1)] + 1))))


@pytest.mark.parametrize("sid", ["2.1", "2.2", "2.3"])
def test_c11_is_free(sid):
    values = SAMPLES[sid][0]
    for c11 in (0, 7, "-1/3"):
        assert residual_report(sid, values, c11=rational(str(c11)))[1] == {}


def test_closed_form_x_matches_elimination():
    for sid in ("1.1", "1.2a", "1.2b", "1.3a"):
        for values in SAMPLES[sid]:
            P = solution_params(sid, values)
            T = coeff_tables(P)
            assert x_case5(P) == x_from_si5(P, T.a, T.c, T.y)


def test_solution_23_rejects_inconsistent_f():
    P = solution_params("2.3", {"h": 2, "p": 3})
    assert P.extra["f"] == Q(-19, 8)
    assert solution_params("2.3", {"h": 2, "p": 3, "f": "-19/8"}).g1 == P.g1
    with pytest.raises(ValueError):
        solution_params("2.3", {"h": 2, "p": 3, "f": 1})
    with pytest.raises(ValueError):
        solution_params("2.3", {"h": 2, "p": 2})
    with pytest.raises(ValueError):
        solution_params("1.1", {"f": 0, "v": 1})
    with pytest.raises(ValueError):
        solution_params("1.1", {"f": 1})


def test_solution_23_at_h_equal_p_is_solution_22():
    # the p -> h limit of family 2.3 is family 2.2 with f = -3/h
    for h in (2, 3, Q(-1, 2)):
        h = Q(h)
        a = catalog("Z", {"p": h, "h": h}).relations
        b = catalog("Y", {"h": h, "f": -3 / h}).relations
        assert [r.terms for r in a] == [r.terms for r in b]


def _table_of(rel):
    return {tuple(i + 1 for i in w): c for w, c in rel.terms.items()}


def _relation_tables(P):
    return ({k: c for k, c in a_table(P).items() if c}, {k: c for k, c in y_table(P).items() if c})


@pytest.mark.parametrize("key,params,sid,values", [
    ("A", {"p": 2}, "1.2a", {"p": 2}),
    ("A", {"p": "-1/3"}, "1.2a", {"p": "-1/3"}),
    ("D", {"v": 3, "p": 2}, "1.1", {"f": -2, "v": 3}),
    ("D", {"v": -1, "p": 5}, "1.1", {"f": -5, "v": -1}),
    ("X", {"p": 2, "h": 3}, "2.1", {"h": 3, "f": "2/9"}),
    ("Y", {"h": 2, "f": 5}, "2.2", {"h": 2, "f": 5}),
    ("Z", {"p": 2, "h": 3}, "2.3", {"h": 3, "p": 2}),
])
def test_catalog_relations_match_solutions(key, params, sid, values):
    r3, r4 = catalog(key, params).relations
    assert (_table_of(r3), _table_of(r4)) == _relation_tables(solution_params(sid, values))


@pytest.mark.parametrize("name,sid,values", [
    ("A2", "1.2a", {"p": 2}),
    ("B1", "1.2b", {"p": 1}),
    ("D32", "1.1", {"f": -2, "v": 3}),
])
def test_frobenius_data_matches_solution(name, sid, values):
    fd = frobenius_data(model(name))
    P = solution_params(sid, values)
    assert fd.eigenvalues == (P.g1, P.g2)
    assert fd.t == P.t


def test_frobenius_data_of_c1_matches_conjugate_solution():
    fd = frobenius_data(model("C1"))
    P = solution_params("1.3a", {"v": 1})
    j = FIELD_J.gen
    jbar = 1 - j
    assert P.g2 == j and P.t == j ** 2
    assert fd.eigenvalues == (P.g1, jbar)
    assert fd.t == jbar ** 2
    assert jbar == j ** -1


@settings(max_examples=30, deadline=None)
@given(st.fractions(max_denominator=5).filter(lambda x: x != 0),
       st.fractions(max_denominator=5))
def test_family_11_identities_hold_generically(f, v):
    P = solution_params("1.1", {"f": str(f), "v": str(v)})
    assert nonzero(si_residuals(coeff_tables(P))) == {}


@settings(max_examples=30, deadline=None)
@given(st.fractions(max_denominator=5).filter(lambda x: x != 0),
       st.fractions(max_denominator=5).filter(lambda x: x != 0))
def test_family_22_identities_hold_generically(h, f):
    P = solution_params("2.2", {"h": str(h), "f": str(f)})
    assert nonzero(si_residuals(coeff_tables(P))) == {}


def test_generic_params_require_units():
    with pytest.raises(ValueError):
        GenericParams(0, 1, 1, 0, 0, 0, 0, 0)


# screens

@pytest.mark.parametrize("key,params", [("A", {"p": 2}), ("B", {"p": 2}), ("C", {"p": 2}), ("D", {"v": 3, "p": 2})])
def test_regular_algebras_pass_screen(key, params):
    rep = regularity_screen(catalog(key, params))
    assert rep.ok, rep.summary()
    assert rep.passed == ["series", "betti", "frobenius"]


def test_screen_refutes_x():
    rep = regularity_screen(catalog("X", {"p": 2, "h": 3}))
    assert rep.summary() == "FAIL: H[5]=17 expected 16"


def test_screen_refutes_y_through_quotient():
    for f in (5, -1, "1/3"):
        rep = regularity_screen(catalog("Y", {"h": 2, "f": f}))
        assert rep.summary() == "FAIL: H(A/(z2^2))[5]=10 expected 9"


def test_y_series_without_quotient():
    sysm = complete(catalog("Y", {"h": 2, "f": 5}), 7)
    assert sysm.hilbert_coeffs(7) == [1, 2, 4, 7, 11, 16, 23, 32]


def test_screen_refutes_z():
    rep = regularity_screen(catalog("Z", {"p": 2, "h": 3}))
    assert rep.summary() == "FAIL: H[7]=32 expected 31"


def test_z_at_opposite_parameters():
    sysm = complete(catalog("Z", {"p": 2, "h": -2}), 7)
    assert sysm.hilbert_coeffs(7)[5:] == [17, 26, 39]
    assert regularity_screen(catalog("Z", {"p": 2, "h": -2})).summary() == "FAIL: H[5]=17 expected 16"


def test_monomial_algebra_fails_betti_screen():
    rep = regularity_screen(catalog("O"))
    assert rep.passed == ["series"]
    assert rep.failure.startswith("betti degrees")


def test_small_gm_vectors():
    assert gm_check(Q(1), Q(1))["gm2"] is False
    assert gm_check(Q(2), Q(3), Q(0), Q(-1))["gm3"] is False
    assert case_dispatch(Q(-8), Q(-1, 16), Q(1, 32)) == 5
    assert case_dispatch(Q(2), Q(3), Q(1) / Q(2) ** 4) == 1


def test_b_and_x_tables():
    from ncalg.classify12221.tables import b_table
    P = GenericParams(-8, Q(-1, 16), Q(1, 32), 3, 5, 1, 2, 8)
    b = b_table(P)
    assert b[(2, 2, 2, 1)] == -8
    assert b[(1, 1, 2, 2)] == Q(1, 256) * 5
    assert x_case5(P)[(1, 1, 2, 1, 1)] == -P.g1 ** 3 * P.g2 ** 3 * 8


def test_a_table_without_v_and_w():
    P = GenericParams(2, 3, 1, 0, 0, 1, 1, 1)
    assert {k: c for k, c in a_table(P).items() if c} == {(1, 2, 2): 1}


def test_perturbed_r_violates_si6():
    P = solution_params("1.1", {"f": 2, "v": 5})
    res = si_residuals(coeff_tables(P.replace(r=P.r + 1)))
    assert any(res["6a"].values())


@pytest.mark.parametrize("key,params,r3,r4", [
    ("D", {"v": 3, "p": 2}, "z1*z2^2 + 3*z2*z1*z2 + 4*z2^2*z1", "z1^3*z2 + 5*z1^2*z2*z1 + 10*z1*z2*z1^2 + 8*z2*z1^3"),
    ("B", {"p": 1}, "z1*z2^2 + i*z2^2*z1", None),
    ("Y", {"h": 2, "f": 5}, "z1*z2^2 - 4*z2^2*z1", None),
    ("A", {"p": 2}, "z1*z2^2 - 4*z2^2*z1", None),
])
def test_catalog_relations(key, params, r3, r4):
    P = catalog(key, params)
    rels = P.relations
    assert rels[0].terms == P.parse_poly(r3).terms
    if r4:
        assert rels[1].terms == P.parse_poly(r4).terms

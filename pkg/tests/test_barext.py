from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncalg.barext import BarComplex, DimensionCapExceeded, betti_numbers, resolution_shape, word_multidegrees
from ncalg.classify12221 import catalog
from ncalg.freealg import NCPoly, parse_presentation
from ncalg.rewrite import complete
from ncalg.rewrite.anick import anick_chains

from conftest import completed

A2_BETTI = {(0, 0): 1, (1, 1): 2, (2, 3): 1, (2, 4): 1, (3, 6): 2, (4, 7): 1}


def series_product(a, b, n):
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n + 1)]


def test_a2_betti_by_resolution():
    t = betti_numbers(completed("A2", 10), 5, 10, method="resolution")
    assert t.by_degree() == A2_BETTI
    assert resolution_shape(t, 4) == (True, 7)


def test_a2_bar_route_agrees_with_resolution():
    S = completed("A2", 10)
    bar = betti_numbers(S, 5, 7, method="bar")
    res = betti_numbers(S, 5, 7, method="resolution")
    assert bar.entries == res.entries
    assert bar.by_degree() == A2_BETTI


def test_multigraded_betti_of_a2():
    t = betti_numbers(completed("A2", 8), 5, 8, method="resolution")
    assert t.entries == {
        (0, (0, 0, 0)): 1, (1, (1, 1, 0)): 1, (1, (1, 0, 1)): 1,
        (2, (3, 1, 2)): 1, (2, (4, 3, 1)): 1,
        (3, (6, 3, 3)): 1, (3, (6, 4, 2)): 1, (4, (7, 4, 3)): 1,
    }


def test_euler_series_inverts_hilbert_series():
    S = completed("A2", 10)
    t = betti_numbers(S, 5, 10, method="resolution")
    assert series_product(t.euler_series(), S.hilbert_coeffs(10), 10) == [1] + [0] * 10


def test_bar_slices_and_betti_numbers_share_euler_characteristic():
    S = completed("A2", 10)
    bar = BarComplex(S)
    t = betti_numbers(S, 9, 9, method="resolution").by_degree()
    for n in range(1, 10):
        chi = sum((-1) ** s * bar.dim(s, md) for md in word_multidegrees(S.pres, n) for s in range(1, n + 1))
        assert chi == sum((-1) ** s * v for (s, m), v in t.items() if m == n), n


def test_bar_differential_squares_to_zero():
    S = completed("D32", 8)
    bar = BarComplex(S)
    for n in range(3, 7):
        for md in word_multidegrees(S.pres, n):
            for s in range(3, n + 1):
                assert bar.check_d_squared(s, md)


def test_koszul_polynomial_ring():
    P = parse_presentation("field Q\ngen x : 1\ngen y : 1\nrel x*y - y*x\n")
    S = complete(P, 6)
    for method in ("bar", "resolution"):
        t = betti_numbers(S, 4, 6, method=method)
        assert t.by_degree() == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
    assert resolution_shape(t, 2) == (True, 2)


def test_shape_rejects_non_gorenstein():
    P = parse_presentation("field Q\ngen x : 1\ngen y : 1\nrel x*x*y\n")
    t = betti_numbers(complete(P, 6), 4, 6, method="resolution")
    assert t.by_degree() == {(0, 0): 1, (1, 1): 2, (2, 3): 1}
    assert not resolution_shape(t, 2)[0]
    assert not resolution_shape(betti_numbers(completed("A2", 10), 5, 10, method="resolution"), 3)[0]


def test_dimension_cap():
    bar = BarComplex(completed("A2", 8), cap=10)
    with pytest.raises(DimensionCapExceeded):
        bar.differential(2, (6, 3, 3))


def test_dimension_cap_from_environment(monkeypatch):
    monkeypatch.setenv("NCALG_DIM_CAP", "5")
    bar = BarComplex(completed("A2", 8))
    assert bar.cap == 5


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(0, 1), min_size=2, max_size=3).map(tuple), min_size=1, max_size=3))
def test_monomial_betti_numbers_count_anick_chains(words):
    """For monomial algebras the Anick resolution is minimal."""
    P = parse_presentation("field Q\ngen a : 1\ngen b : 1\n")
    P = P.with_relations([NCPoly.word(w, P.field) for w in set(words)])
    S = complete(P, 6)
    V, _ = anick_chains(S, 5)
    want = {(0, 0): 1, (1, 1): 2}
    for n, ws in V.items():
        for w in ws:
            if len(w) <= 6:
                want[(n + 1, len(w))] = want.get((n + 1, len(w)), 0) + 1
    want = {k: v for k, v in want.items() if k[0] <= 4}
    for method in ("bar", "resolution"):
        assert betti_numbers(S, 4, 6, method=method).by_degree() == want


def test_bar_differential_on_small_tensors():
    S = completed("A2", 8)
    bar = BarComplex(S)
    z1, z2 = (0,), (1,)
    md = (2, 1, 1)
    assert bar.differential_of((z1, z2), md) == {bar.index(1, md)[(z1 + z2,)]: -1}
    # [z2|z2 z1] merges to z2^2 z1 = 1/4 z1 z2^2
    md = (3, 1, 2)
    assert bar.differential_of((z2, (1, 0)), md) == {bar.index(1, md)[((0, 1, 1),)]: Fraction(-1, 4)}
    assert bar.differential(1, (1, 1, 0)) == [{}]


def test_free_algebra_shapes():
    one = parse_presentation("field Q\ngen x : 1\n")
    t = betti_numbers(complete(one, 4), 3, 4)
    assert t.by_degree() == {(0, 0): 1, (1, 1): 1}
    assert resolution_shape(t, 1) == (True, 1)
    two = parse_presentation("field Q\ngen x : 1\ngen y : 1\n")
    t = betti_numbers(complete(two, 4), 3, 4)
    assert t.by_degree() == {(0, 0): 1, (1, 1): 2}
    assert resolution_shape(t, 1)[0] is False


def test_x23_betti_table_breaks_symmetry():
    S = complete(catalog("X", {"p": 2, "h": 3}), 8)
    t = betti_numbers(S, 5, 8, method="resolution")
    assert t.by_degree() == {(0, 0): 1, (1, 1): 2, (2, 3): 1, (2, 4): 1, (3, 5): 1, (3, 6): 1,
                             (4, 7): 1, (4, 8): 1}
    assert resolution_shape(t, 4) == (False, "homological degree 4 has 2 generators, expected 1")


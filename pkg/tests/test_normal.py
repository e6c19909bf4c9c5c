from fractions import Fraction

from ncalg.classify12221 import catalog
from ncalg.rewrite import complete
from ncalg.rewrite.normal import is_normal, search_normal

from oracle import in_ideal


def setup(key, p):
    P = catalog(key, {"p": p})
    return P, complete(P, 6)


def test_h_is_normal_in_a2():
    P, S = setup("A", 2)
    h = P.parse_poly("z1^2*z2 + 4*z2*z1^2")
    r = is_normal(h, S)
    assert r.normal
    # z1 h = -2 h z1 and h z2 = 4 z2 h
    assert r.left[0] == -2
    assert r.right[1] == 4


def test_reported_scalars_hold_in_the_ideal():
    P, S = setup("A", 2)
    rels = [{w: Fraction(str(c)) for w, c in r.terms.items()} for r in P.relations]
    h = {(0, 0, 1): Fraction(1), (1, 0, 0): Fraction(4)}
    # z1*h + 2*h*z1 and h*z2 - 4*z2*h vanish in A(2)
    a = {(0,) + w: c for w, c in h.items()}
    for w, c in h.items():
        a[w + (0,)] = a.get(w + (0,), 0) + 2 * c
    assert in_ideal(a, rels, 4)
    b = {w + (1,): c for w, c in h.items()}
    for w, c in h.items():
        b[(1,) + w] = b.get((1,) + w, 0) - 4 * c
    assert in_ideal(b, rels, 4)


def test_normal_powers_in_b2_and_c2():
    P, S = setup("B", 2)
    assert is_normal(P.parse_poly("z2^2"), S).normal
    assert is_normal(P.parse_poly("z1^4"), S).normal
    assert not is_normal(P.parse_poly("z1^2"), S).normal
    P, S = setup("C", 2)
    assert is_normal(P.parse_poly("z1^3"), S).normal
    assert is_normal(P.parse_poly("z2^3"), S).normal
    assert not is_normal(P.parse_poly("z1*z2"), S).normal


def test_no_degree_three_normal_elements_in_b2():
    P, S = setup("B", 2)
    for md in [(3, 3, 0), (3, 2, 1), (3, 1, 2), (3, 0, 3)]:
        assert search_normal(S, md) == [], md


def test_search_finds_h_in_a2():
    P, S = setup("A", 2)
    sols = search_normal(S, (3, 2, 1))
    assert len(sols) == 1
    (b,) = sols[0].basis
    assert b.format(P.names, key=S.key) == "4*z2*z1^2 + z1^2*z2"


def test_commutative_algebra_has_everything_normal():
    from ncalg.freealg import parse_presentation
    P = parse_presentation("field Q\ngen x : (1,1,0)\ngen y : (1,0,1)\nrel x*y - y*x\n")
    S = complete(P, 4)
    sols = search_normal(S, (2, 1, 1))
    assert len(sols) == 1 and len(sols[0].basis) == 1


def test_cube_is_not_normal_in_a2():
    P, S = setup("A", 2)
    assert not is_normal(P.parse_poly("z1^3"), S).normal

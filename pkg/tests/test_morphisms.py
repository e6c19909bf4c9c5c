from ncalg.classify12221 import MAPS, catalog, ore_maps, ore_presentation
from ncalg.freealg import parse_presentation
from ncalg.rewrite import complete
from ncalg.rewrite.morphisms import FreeComplex, parse_complex, verify_complex, verify_homomorphism


def resolution(key):
    name, params, text = MAPS[key]
    P = catalog(name, params)
    return P, parse_complex(text, P)


def test_b1_resolution_is_exact_to_degree_ten():
    P, cx = resolution("B1")
    r = verify_complex(cx, complete(P, 10), 10)
    assert r.is_complex
    assert r.homology[4] == [1] + [0] * 10
    assert all(not any(r.homology[k]) for k in range(4))


def test_c1_resolution_is_exact_to_degree_ten():
    P, cx = resolution("C1")
    r = verify_complex(cx, complete(P, 10), 10)
    assert r.is_complex
    assert r.homology[4] == [1] + [0] * 10
    assert all(not any(r.homology[k]) for k in range(4))


def test_broken_map_is_detected():
    P, cx = resolution("B1")
    bad = FreeComplex(cx.names, cx.modules, [cx.maps[0], cx.maps[1], cx.maps[2][::-1], cx.maps[3]])
    import pytest
    with pytest.raises(ValueError):
        verify_complex(bad, complete(P, 8), 8)
    # same degrees, wrong sign: no longer a complex
    m = [list(r) for r in cx.maps[3]]
    m[0] = [{w: -c for w, c in m[0][0].items()}]
    r = verify_complex(FreeComplex(cx.names, cx.modules, cx.maps[:3] + [m]), complete(P, 8), 8)
    assert not r.is_complex


def test_d32_and_ore_presentation_are_isomorphic_to_degree_eight():
    D = catalog("D", {"v": 3, "p": 2})
    ore = ore_presentation({"v": 3, "p": 2})
    to_ore, to_d, D_ext = ore_maps(ore, D)
    So, Sd = complete(ore, 8), complete(D_ext, 8)
    assert verify_homomorphism(D_ext, So, to_ore).ok
    assert verify_homomorphism(ore, Sd, to_d).ok
    assert So.hilbert_coeffs(8) == Sd.hilbert_coeffs(8) == [1, 2, 4, 7, 11, 16, 23, 31, 41]


def test_ore_with_rational_roots():
    # v = 5, p = 2: c, d = 4, 1
    D = catalog("D", {"v": 5, "p": 2})
    ore = ore_presentation({"v": 5, "p": 2})
    assert ore.field.is_rational
    to_ore, to_d, D_ext = ore_maps(ore, D)
    assert verify_homomorphism(D_ext, complete(ore, 6), to_ore).ok
    assert verify_homomorphism(ore, complete(D_ext, 6), to_d).ok


def test_non_homomorphism_is_reported():
    P = parse_presentation("field Q\ngen x : 1\ngen y : 1\nrel x*y - y*x\n")
    Q = parse_presentation("field Q\ngen a : 1\ngen b : 1\nrel a*b + b*a\n")
    S = complete(Q, 3)
    r = verify_homomorphism(P, S, [Q.parse_poly("a"), Q.parse_poly("b")])
    assert not r.ok and r.failures[0][0] == 0
    r = verify_homomorphism(P, S, [Q.parse_poly("a"), Q.parse_poly("a")])
    assert r.ok


def test_identity_is_a_homomorphism():
    P = catalog("A", {"p": 2})
    S = complete(P, 8)
    assert verify_homomorphism(P, S, [P.parse_poly("z1"), P.parse_poly("z2")]).ok

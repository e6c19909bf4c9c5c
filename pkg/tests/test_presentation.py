import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncalg.freealg import NCPoly, ParseError, parse_presentation

TEXT = """
# a comment
field Q
param p = 2
gen z1 : (1,1,0)
gen z2 : (1,0,1)
rel z1*z2^2 - p^2*z2^2*z1
rel z1^3*z2 = -p*z1^2*z2*z1 - p^2*z1*z2*z1^2 - p^3*z2*z1^3
"""


def test_parse_and_substitute():
    P = parse_presentation(TEXT)
    assert P.names == ["z1", "z2"]
    assert P.degrees == [(1, 1, 0), (1, 0, 1)]
    r3, r4 = P.relations
    assert r3.terms == {(0, 1, 1): 1, (1, 1, 0): -4}
    assert r4.terms[(1, 0, 0, 0)] == 8
    assert P.word_degree((0, 1, 1)) == (3, 1, 2)


def test_roundtrip_through_text():
    P = parse_presentation(TEXT)
    Q = parse_presentation(P.to_text())
    assert Q == P


@pytest.mark.parametrize("bad, msg", [
    ("field Q\ngen x : 1\nrel x*y\n", "unknown generator"),
    ("field Q\nparam q\ngen x : 1\nrel q*x^2\n", "unbound parameter"),
    ("field Q\ngen x : 1\nrel x $ x\n", "malformed token"),
    ("field Q\ngen x : 1\nrel x/x\n", "scalar"),
])
def test_parse_errors(bad, msg):
    with pytest.raises(ParseError, match=msg) as e:
        parse_presentation(bad)
    assert e.value.line == bad.count("\n")


def test_inhomogeneous_relation_is_rejected():
    with pytest.raises(ParseError):
        parse_presentation("field Q\ngen x : 1\ngen y : 1\nrel x*y - x\n")


words = st.lists(st.integers(0, 1), min_size=1, max_size=4).map(tuple)
coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(bool)


@given(st.dictionaries(words, coeffs, min_size=1, max_size=5))
def test_polynomial_format_parses_back(terms):
    P = parse_presentation("field Q\ngen a : 1\ngen b : 1\n")
    from ncalg.freealg import rational
    p = NCPoly({w: rational(str(c)) for w, c in terms.items()}, P.field)
    assert P.parse_poly(p.format(P.names)) == p

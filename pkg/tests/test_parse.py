import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ttsteenrod import Monomial, Poly, d_limit_ring, h, make_truncation, xi
from ttsteenrod.parse import ParseError, format_ideal, parse_generator, parse_poly, parse_poly_list

from helpers import P, hpoly

RING = d_limit_ring(make_truncation(3)).presentation


class TestExamples:
    def test_two_terms(self):
        p = parse_poly("h(2,0)*h(1,0) + h(3,0)")
        assert p == P((2, 0), (1, 0)) + hpoly(3, 0)
        assert len(p.terms) == 2

    def test_cancellation(self):
        assert parse_poly("h(1,0) + h(1,0)").is_zero()

    def test_xi_in_ext_context(self):
        with pytest.raises(ParseError, match="xi-generators"):
            parse_poly("xi(1)^2*(1 + h(1,0))", RING)

    def test_h_in_steenrod_context(self):
        with pytest.raises(ParseError):
            parse_poly("xi(1) + h(1,0)", context="steenrod")

    def test_mixed_context(self):
        p = parse_poly("xi(1)^2*(1 + h(1,0))", context="mixed")
        assert len(p.terms) == 2

    def test_whitespace(self):
        assert parse_poly(" h ( 2 , 0 ) *\n h(1,0)\t") == P((2, 0), (1, 0))

    def test_literals(self):
        assert parse_poly("1") == Poly.one()
        assert parse_poly("0") == Poly.zero()
        assert parse_poly("1 + 1").is_zero()

    def test_powers_and_parentheses(self):
        assert parse_poly("(h(1,0) + h(2,0))^2") == P(((1, 0), 2)) + P(((2, 0), 2))
        assert parse_poly("h(1,0)^3") == P(((1, 0), 3))

    def test_ring_normal_form(self):
        # h(1,0)h(2,1) is a relation of the D-limit ring
        assert parse_poly("h(1,0)*h(2,1) + h(3,0)", RING) == hpoly(3, 0)

    def test_list(self):
        assert parse_poly_list("h(1,0), h(2,0)+h(2,1)") == [hpoly(1, 0), hpoly(2, 0) + hpoly(2, 1)]
        assert parse_poly_list("  ") == []

    def test_generator(self):
        assert parse_generator("h(3,1)") == h(3, 1)
        assert parse_generator("xi(4)") == xi(4)
        with pytest.raises(ParseError):
            parse_generator("h(1,0)^2")

    def test_format_ideal(self):
        assert format_ideal([hpoly(1, 0), hpoly(2, 0)]) == "(h(1,0), h(2,0))"


class TestErrors:
    @pytest.mark.parametrize("text, line, column", [
        ("h(1,0) +", 1, 9),
        ("h(1,0) +\n  h(2,)", 2, 7),
        ("h(1,0)^0", 1, 8),
        ("h(1,0) h(2,0)", 1, 8),
        ("2*h(1,0)", 1, 1),
        ("h(1,1)", 1, 1),
        ("(h(1,0)", 1, 8),
        ("g(1)", 1, 1),
    ])
    def test_position(self, text, line, column):
        with pytest.raises(ParseError) as err:
            parse_poly(text)
        assert (err.value.line, err.value.column) == (line, column)

    def test_unknown_generator_for_ring(self):
        small = d_limit_ring(make_truncation(2)).presentation
        with pytest.raises(ParseError, match="not a generator of the active ring"):
            parse_poly("h(3,0)", small)

    def test_unknown_context(self):
        with pytest.raises(Exception):
            parse_poly("1", context="other")


H_GENS = [h(t, s) for t in range(1, 5) for s in range(t)]
XI_GENS = [xi(n) for n in range(1, 5)]

monomials = st.dictionaries(st.sampled_from(H_GENS + XI_GENS), st.integers(1, 5),
                            max_size=4).map(Monomial)
polys = st.lists(monomials, max_size=6).map(lambda ms: Poly._from_set(
    m for m in set(ms) if ms.count(m) % 2 == 1))


@settings(max_examples=1000)
@given(polys)
def test_round_trip(p):
    assert parse_poly(str(p), context="mixed") == p


@settings(max_examples=200)
@given(polys)
def test_print_is_canonical(p):
    q = parse_poly(str(p), context="mixed")
    assert str(q) == str(p)

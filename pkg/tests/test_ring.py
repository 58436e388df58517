from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import multisegments
from spehlab.core import UNIT, ParseError, parse_multisegment
from spehlab.ring import (
    NoDominantMonomial,
    RingElement,
    degree,
    dominant_monomial,
    format_ring,
    mul,
    parse_ring,
    reflect,
    ring_from_json,
    ring_to_json,
    twist,
)
from spehlab.speh import rect

P = parse_multisegment


def mono(text, c=1):
    return RingElement.monomial(P(text), c)


@st.composite
def elements(draw, max_terms=3):
    terms = draw(st.lists(st.tuples(multisegments(max_size=3, lo=-1, hi=1, max_len=2), st.integers(-3, 3)), max_size=max_terms))
    return RingElement(terms)


class TestMul:
    def test_union(self):
        assert mono("(0..0)") * mono("(1..1)") == mono("(0..0)+(1..1)")

    def test_unit(self):
        x = mono("(0..1)") - mono("(0..0)+(1..1)")
        assert mul(x, RingElement.one()) == x
        assert x * 1 == x

    def test_square(self):
        x = mono("(0..1)") + mono("(0..0)+(1..1)")
        assert x * x == (
            mono("(0..1)+(0..1)") + mono("(0..1)+(0..0)+(1..1)", 2) + mono("(0..0)+(0..0)+(1..1)+(1..1)")
        )

    def test_no_overflow(self):
        x = RingElement({UNIT: 2**62})
        assert (x * x).terms[UNIT] == 2**124

    def test_zero_terms_dropped(self):
        x = mono("(0..0)") - mono("(0..0)")
        assert not x and len(x) == 0

    def test_rejects_float_coefficients(self):
        with pytest.raises(TypeError):
            RingElement({UNIT: 1.0})


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), elements())
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * RingElement.one() == x
    assert x - x == RingElement.zero()


class TestAutomorphisms:
    def test_twist(self):
        assert twist(mono("(0..1)"), Fraction(1, 2)) == mono("(1/2..3/2)")
        x = mono("(0..1)") - mono("(0..0)+(1..1)", 3)
        assert twist(twist(x, Fraction(1, 2)), Fraction(-1, 2)) == x
        assert twist(x, 1) == mono("(1..2)") - mono("(1..1)+(2..2)", 3)
        assert twist(x, 0) == x

    def test_reflect(self):
        assert reflect(mono("(0..1)")) == mono("(-1..0)")
        assert reflect(RingElement.monomial(rect(3, 2))) == RingElement.monomial(rect(3, 2))

    @settings(max_examples=60, deadline=None)
    @given(elements(), elements(), st.fractions(min_value=-2, max_value=2, max_denominator=3))
    def test_homomorphism(self, x, y, q):
        assert twist(x * y, q) == twist(x, q) * twist(y, q)
        assert reflect(x * y) == reflect(x) * reflect(y)
        assert reflect(reflect(x)) == x
        assert twist(twist(x, q), -q) == x


class TestDegree:
    def test_examples(self):
        assert degree(mono("(0..0)+(1..1)")) == 2
        assert degree(mono("(0..0)+(1..1)") - mono("(0..1)")) == 2
        assert degree(RingElement.one()) == 0

    def test_zero(self):
        with pytest.raises(ValueError):
            degree(RingElement())

    @settings(max_examples=60, deadline=None)
    @given(elements(), elements())
    def test_additive(self, x, y):
        if x and y:
            assert degree(x * y) == degree(x) + degree(y)


class TestDominant:
    def test_examples(self):
        assert dominant_monomial(mono("(0..0)+(1..1)") - mono("(0..1)")) == (P("(0..0)+(1..1)"), 1)
        assert dominant_monomial(mono("(0..2)", -4)) == (P("(0..2)"), -4)

    def test_incomparable(self):
        with pytest.raises(NoDominantMonomial):
            dominant_monomial(mono("(0..0)") + mono("(2..2)"))
        # same support and thickness, neither below the other
        with pytest.raises(NoDominantMonomial):
            dominant_monomial(mono("(0..0)+(1..1)+(1..2)") + mono("(0..1)+(1..1)+(2..2)"))

    def test_zero(self):
        with pytest.raises(NoDominantMonomial):
            dominant_monomial(RingElement())


class TestText:
    @pytest.mark.parametrize(
        "x",
        [
            RingElement(),
            RingElement.one(),
            mono("(0..1)") - mono("(0..0)+(1..1)", 3),
            mono("(-1/2..1/2)", -1) + mono("(-1/2..-1/2)+(1/2..1/2)"),
            RingElement({UNIT: -7}),
        ],
    )
    def test_round_trip(self, x):
        assert parse_ring(format_ring(x)) == x
        assert ring_from_json(ring_to_json(x)) == x

    def test_format(self):
        x = mono("(-1/2..-1/2)+(1/2..1/2)") - mono("(-1/2..1/2)")
        assert format_ring(x) == "-[(-1/2..1/2)] + [(-1/2..-1/2)+(1/2..1/2)]"
        assert format_ring(mono("(0..0)", 2)) == "2*[(0..0)]"
        assert format_ring(RingElement()) == "0"
        assert format_ring(RingElement.one()) == "[1]"

    def test_parse_unicode_operators(self):
        assert parse_ring("2·[(0..0)] − [(1..1)]") == mono("(0..0)", 2) - mono("(1..1)")

    def test_json_shape(self):
        assert ring_to_json(mono("(0..0)", -2)) == [{"coeff": -2, "segments": [{"line": "rho", "b": "0", "e": "0"}]}]

    @pytest.mark.parametrize("bad", ["[(0..0)", "[(0..0)] [(1..1)]", "x", "[(0..q)]"])
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            parse_ring(bad)

    @settings(max_examples=100, deadline=None)
    @given(elements(max_terms=4))
    def test_round_trip_random(self, x):
        assert parse_ring(format_ring(x)) == x

import pytest
from hypothesis import given, settings, strategies as st

from conftest import from_sympy, gf2_polys, laurent_polys, sympy_gf2_divide, to_sympy
from linkinv.errors import DivisorZeroError, NotDivisibleError, ParseError, RingMismatchError
from linkinv.laurent import (LaurentPoly, S, bar, eval_at_one, exact_divide_mod2, format_poly,
                             formal_derivative, lift, parse_poly, phi, reduce_mod2)

import sympy

ONE = LaurentPoly.constant(1)


def P(text):
    return parse_poly(text)


class TestCanonicalForm:
    def test_zero_coefficients_dropped(self):
        assert LaurentPoly({0: 0, 3: 2, 5: 0}).terms == {3: 2}

    def test_equality_is_structural(self):
        assert LaurentPoly({1: 1, -1: 2}) == LaurentPoly([(-1, 2), (1, 1)])
        assert LaurentPoly({0: 5}) == 5
        assert hash(LaurentPoly({2: 1})) == hash(S * S)

    def test_gf2_form_stores_ones(self):
        p = LaurentPoly.gf2({0: 3, 1: 2, 2: -1})
        assert p.terms == {0: 1, 2: 1}
        assert p.mod2

    def test_gf2_and_z_forms_differ(self):
        assert LaurentPoly.gf2([0]) != ONE


class TestMul:
    def test_examples(self):
        assert (1 + S) * (1 + bar(S)) == P("-1:1, 0:2, 1:1")
        assert (S ** 2 - 1) * (S ** 2 + 1) == P("0:-1, 4:1")
        assert LaurentPoly.gf2([0, 1]) ** 4 == LaurentPoly.gf2([0, 4])

    def test_mixed_ring_rejected(self):
        with pytest.raises(RingMismatchError):
            S * LaurentPoly.gf2([1])
        with pytest.raises(RingMismatchError):
            S + LaurentPoly.gf2([1])

    @settings(max_examples=200, deadline=None)
    @given(laurent_polys(), laurent_polys())
    def test_matches_sympy(self, a, b):
        assert a * b == from_sympy(to_sympy(a) * to_sympy(b))
        assert a + b == from_sympy(to_sympy(a) + to_sympy(b))

    @settings(max_examples=300, deadline=None)
    @given(laurent_polys(), laurent_polys())
    def test_gf2_product_is_reduced_z_product(self, a, b):
        assert reduce_mod2(a) * reduce_mod2(b) == reduce_mod2(a * b)
        assert reduce_mod2(a) + reduce_mod2(b) == reduce_mod2(a + b)


class TestRingAxioms:
    @settings(max_examples=1000, deadline=None)
    @given(laurent_polys(), laurent_polys(), laurent_polys())
    def test_z(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == 0

    @settings(max_examples=300, deadline=None)
    @given(gf2_polys(), gf2_polys(), gf2_polys())
    def test_gf2(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + a == LaurentPoly.gf2()
        assert (a * b).mod2


class TestBar:
    def test_examples(self):
        assert bar(P("3:2, -1:-1")) == P("-3:2, 1:-1")
        assert bar(S + bar(S)) == S + bar(S)

    @settings(max_examples=300, deadline=None)
    @given(laurent_polys(), laurent_polys())
    def test_ring_involution(self, a, b):
        assert bar(bar(a)) == a
        assert bar(a * b) == bar(a) * bar(b)
        assert bar(a + b) == bar(a) + bar(b)


class TestEvalAtOne:
    def test_examples(self):
        assert eval_at_one(S ** 2 - 1) == 0
        u = P("0:1, 1:2")  # u(1) = 3
        assert eval_at_one((1 + S) * u) == 6
        assert eval_at_one(P("-2:1, 1:4")) == 5

    def test_gf2_returns_parity(self):
        assert eval_at_one(LaurentPoly.gf2([0, 1, 5])) == 1

    @settings(max_examples=300, deadline=None)
    @given(laurent_polys(), laurent_polys())
    def test_multiplicative(self, a, b):
        assert eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b)


class TestDerivative:
    def test_examples(self):
        assert formal_derivative(S ** 3) == P("2:3")
        assert formal_derivative(P("-2:1")) == P("-3:-2")
        assert formal_derivative(LaurentPoly.constant(7)) == 0

    def test_gf2_rejected(self):
        with pytest.raises(RingMismatchError):
            formal_derivative(LaurentPoly.gf2([1]))

    @settings(max_examples=200, deadline=None)
    @given(laurent_polys())
    def test_matches_sympy(self, a):
        assert formal_derivative(a) == from_sympy(sympy.diff(to_sympy(a), sympy.Symbol("s")))


class TestPhi:
    def test_examples(self):
        assert phi(S ** 3) == 1
        assert phi(S ** 2 - 1) == 0
        assert phi(S * (1 + S)) == 1

    @settings(max_examples=300, deadline=None)
    @given(laurent_polys())
    def test_is_the_composite(self, g):
        # derivative, evaluate at one, reduce mod 2; sympy as the oracle
        s = sympy.Symbol("s")
        assert phi(g) == int(sympy.diff(to_sympy(g), s).subs(s, 1)) % 2

    @settings(max_examples=1000, deadline=None)
    @given(laurent_polys(), st.integers(-6, 6))
    def test_properties(self, g, n):
        g1 = eval_at_one(g)
        assert phi(bar(g)) == phi(g)
        assert phi(S * g) == (g1 + phi(g)) % 2
        assert phi((1 + LaurentPoly.monomial(n)) * g) == (n * g1) % 2

    @settings(max_examples=500, deadline=None)
    @given(laurent_polys(), laurent_polys())
    def test_product_rule(self, f, g):
        # phi is additive and obeys a Leibniz rule, it is not multiplicative
        assert phi(f * g) == (eval_at_one(f) * phi(g) + phi(f) * eval_at_one(g)) % 2
        assert phi(f + g) == (phi(f) + phi(g)) % 2

    def test_not_multiplicative(self):
        assert phi(S * S) != phi(S) * phi(S)

    @settings(max_examples=200, deadline=None)
    @given(laurent_polys())
    def test_depends_only_on_parity(self, g):
        assert phi(reduce_mod2(g)) == phi(g)


class TestReduceMod2:
    def test_examples(self):
        assert reduce_mod2(P("1:2, 0:3")) == LaurentPoly.gf2([0])
        assert reduce_mod2(P("2:1, 1:-4, 0:3")) == LaurentPoly.gf2([0, 2])
        assert reduce_mod2(LaurentPoly()) == LaurentPoly.gf2()

    def test_lift_round_trip(self):
        p = LaurentPoly.gf2([-3, 0, 2])
        assert reduce_mod2(lift(p)) == p
        assert lift(p) == P("-3:1, 0:1, 2:1")


class TestExactDivide:
    def test_freshmans_dream(self):
        assert exact_divide_mod2(LaurentPoly.gf2([0, 4]), LaurentPoly.gf2([0, 1]) ** 4) == \
            LaurentPoly.gf2([0])

    def test_symmetric_quotient(self):
        num = LaurentPoly.gf2([3, 1, -1, -3])
        den = LaurentPoly.gf2([1, -1])
        q = exact_divide_mod2(num, den)
        # frozen from the sympy long-division oracle
        assert q == LaurentPoly.gf2([2, -2])
        assert q == sympy_gf2_divide(num, den)
        assert q * den == num

    def test_not_divisible(self):
        with pytest.raises(NotDivisibleError):
            exact_divide_mod2(LaurentPoly.gf2([0, 1, 2]), LaurentPoly.gf2([0, 1]))

    def test_zero_divisor(self):
        with pytest.raises(DivisorZeroError):
            exact_divide_mod2(LaurentPoly.gf2([0]), LaurentPoly.gf2())

    def test_requires_gf2(self):
        with pytest.raises(RingMismatchError):
            exact_divide_mod2(S, LaurentPoly.gf2([0]))

    @settings(max_examples=500, deadline=None)
    @given(gf2_polys(), gf2_polys().filter(lambda b: not b.is_zero()))
    def test_round_trip(self, a, b):
        assert exact_divide_mod2(a * b, b) == a

    @settings(max_examples=100, deadline=None)
    @given(gf2_polys(-5, 5), gf2_polys(-3, 3).filter(lambda b: not b.is_zero()))
    def test_agrees_with_sympy(self, a, b):
        expected = sympy_gf2_divide(a, b)
        if expected is None:
            with pytest.raises(NotDivisibleError):
                exact_divide_mod2(a, b)
        else:
            assert exact_divide_mod2(a, b) == expected


class TestText:
    def test_parse_example(self):
        p = parse_poly("-1:2, 0:-1, 3:1")
        assert p.terms == {-1: 2, 0: -1, 3: 1}

    def test_unordered_and_canonical_output(self):
        assert format_poly(parse_poly("3:1, -1:2,0:-1")) == "-1:2, 0:-1, 3:1"

    def test_zero(self):
        assert format_poly(LaurentPoly()) == "0"
        assert parse_poly("0").is_zero() and parse_poly("").is_zero()

    def test_gf2_parse(self):
        assert parse_poly("0:3, 1:2", mod2=True) == LaurentPoly.gf2([0])

    @pytest.mark.parametrize("bad,pos", [("1:2, x", 5), ("1:a", 0), ("1:2,, 3:1", 4)])
    def test_errors_carry_position(self, bad, pos):
        with pytest.raises(ParseError) as info:
            parse_poly(bad)
        assert info.value.position == pos

    @settings(max_examples=200, deadline=None)
    @given(laurent_polys())
    def test_round_trip(self, p):
        assert parse_poly(format_poly(p)) == p

    def test_pretty(self):
        assert str(parse_poly("-1:2, 0:-1, 3:1")) == "2*s^-1 - 1 + s^3"

import pytest
from hypothesis import given, settings, strategies as st

from conftest import sympy_gf2_divide
from linkinv.errors import (DivisionFailed, InvariantViolation, NotInImageError, NotInSpanError,
                            NotSigmaShapedError)
from linkinv.generate import GenParams, generate
from linkinv.laurent import LaurentPoly, parse_poly
from linkinv.linkmap import ConstructedDiskWitness, Handle
from linkinv.theorem import (KirkDecomposition, kirk_compose, kirk_decompose, kirk_to_theorem,
                             lambda_n_decompose, lambda_n_poly, predicted_omega, replay,
                             symmetric_span_solve, theorem_coeffs, theorem_compose, theorem_to_kirk)
from linkinv.wall import gram_lambda_self

G = LaurentPoly.gf2
P = parse_poly

kirk_coeffs = st.dictionaries(st.integers(2, 10), st.integers(-5, 5).filter(bool), max_size=9)


class TestKirk:
    def test_compose_examples(self):
        assert kirk_compose(0, {2: 1}) == P("1:4, 2:-1")
        assert kirk_compose(3, {2: -1}) == P("0:3, 1:-4, 2:1")
        assert kirk_compose(5, {}) == P("0:5")

    def test_decompose_example(self):
        dec = kirk_decompose(P("2:1, 1:-4, 0:3"))
        assert dec == KirkDecomposition(3, {2: -1})

    @pytest.mark.parametrize("text", ["1:1", "-1:1", "2:1", "3:2, 1:17"])
    def test_non_members(self, text):
        with pytest.raises(NotInImageError):
            kirk_decompose(P(text))

    def test_rejects_gf2(self):
        with pytest.raises(NotInImageError):
            kirk_decompose(G([0]))

    def test_compose_rejects_small_n(self):
        with pytest.raises(ValueError):
            kirk_compose(0, {1: 1})

    @settings(max_examples=1000, deadline=None)
    @given(st.integers(-20, 20), kirk_coeffs)
    def test_round_trip(self, a0, a):
        dec = kirk_decompose(kirk_compose(a0, a))
        assert (dec.a0, dec.a) == (a0, a)


class TestTheoremCoefficients:
    def test_example(self):
        assert theorem_coeffs(P("2:1, 1:-4, 0:3")) == [(1, -4), (2, 1)]
        assert theorem_compose([(1, -4), (2, 1)]) == P("2:1, 1:-4, 0:3")

    def test_converters(self):
        dec = KirkDecomposition(3, {2: -1})
        assert kirk_to_theorem(dec) == [(1, -4), (2, 1)]
        assert theorem_to_kirk([(1, -4), (2, 1)]) == dec

    @pytest.mark.parametrize("text", ["0:1", "-1:1, 0:-1", "1:1"])
    def test_not_sigma_shaped(self, text):
        with pytest.raises(NotSigmaShapedError):
            theorem_coeffs(P(text))

    @settings(max_examples=300, deadline=None)
    @given(st.integers(-20, 20), kirk_coeffs)
    def test_coefficients_differ_only_in_sign(self, a0, a):
        a0 = -sum(an * (n * n - 1) for n, an in a.items())
        theta = dict(kirk_to_theorem(KirkDecomposition(a0, a)))
        for n in range(2, 11):
            assert theta.get(n, 0) == -a.get(n, 0)


@pytest.mark.parametrize("text,expected", [
    ("2:1, 0:-1", 1),
    ("3:1, 0:-1", 0),
    ("4:1, 0:-1", 0),
    ("6:1, 0:-1", 1),
    ("2:2, 0:-2", 0),
    ("2:1, 6:1, 0:-2", 0),
    ("2:1, 1:-4, 0:3", 1),
    ("0", 0),
])
def test_predicted_omega(text, expected):
    assert predicted_omega(P(text)) == expected


@settings(max_examples=300, deadline=None)
@given(kirk_coeffs)
def test_prediction_invariant_under_reexpression(a):
    a0 = -sum(an * (n * n - 1) for n, an in a.items())
    sp = kirk_compose(a0, a)
    assert predicted_omega(theorem_compose(kirk_to_theorem(kirk_decompose(sp)))) == predicted_omega(sp)
    # Kirk and theorem coefficients agree mod 2 for n >= 2
    assert predicted_omega(sp) == sum(an for n, an in a.items() if n % 4 == 2) % 2


class TestLambdaN:
    @pytest.mark.parametrize("n,r", [
        (2, G([-2])),
        (3, G([-1, -3])),
        (4, G([0, -4])),
        (6, G([2, -2, -6])),
    ])
    def test_quotients(self, n, r):
        assert lambda_n_decompose(n)[0] == r

    @pytest.mark.parametrize("n", range(2, 65))
    def test_against_sympy(self, n):
        r, at_one = lambda_n_decompose(n)
        assert r == sympy_gf2_divide(lambda_n_poly(n), G([0, 1]) ** 4)
        assert at_one == ((n // 2) % 2 if n % 2 == 0 else 0)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            lambda_n_decompose(1)

    def test_division_failure_is_typed(self):
        assert issubclass(DivisionFailed, InvariantViolation)


class TestSpan:
    def test_single(self):
        assert symmetric_span_solve(G([2, -2])).a == {2: 1}
        assert symmetric_span_solve(G([3, 1, -1, -3])).a == {3: 1}

    def test_zero(self):
        assert symmetric_span_solve(G()).a == {}

    def test_integer_input_reduced(self):
        assert symmetric_span_solve(P("2:3, -2:1")).a == {2: 1}

    @pytest.mark.parametrize("bits,fragment", [
        ([2], "bar-symmetric"),
        ([0], "constant"),
        ([1, -1], "coefficient of s"),
        ([2, -2, 1, -1], "coefficient of s"),
    ])
    def test_not_in_span(self, bits, fragment):
        with pytest.raises(NotInSpanError, match=fragment):
            symmetric_span_solve(G(bits))

    @settings(max_examples=500, deadline=None)
    @given(st.sets(st.integers(2, 12)))
    def test_round_trip(self, ns):
        T = G()
        for n in ns:
            T = T + lambda_n_poly(n)
        theta = symmetric_span_solve(T)
        assert set(theta.a) == ns
        assert theta.compose() == T

    def test_gram_membership_follows_parity(self):
        one = LaurentPoly.constant(1)
        # c+(1) + c-(1) even: in the span
        symmetric_span_solve(gram_lambda_self([1 + LaurentPoly.monomial(1)], [LaurentPoly()]))
        # c+(1) + c-(1) odd: outside
        with pytest.raises(NotInSpanError):
            symmetric_span_solve(gram_lambda_self([one], [LaurentPoly()]))


def witness(n, u, q, handles):
    return ConstructedDiskWitness(n, tuple(handles), P(u), P(q))


class TestReplay:
    def test_worked_even(self):
        v = replay([witness(2, "0:1", "0:1, 1:1", [Handle(1, 1, ((1, 0),))])])
        trace = dict(v.trace)
        assert trace["lambda_ff"] == G([2, -2])
        assert v.omega_direct == v.omega_predicted == 1

    def test_worked_odd(self):
        v = replay([witness(1, "1:1", "0:1", [Handle(1, 1, ((0, 1),))])])
        assert dict(v.trace)["lambda_ff"] == G([3, 1, -1, -3])
        assert v.omega_direct == v.omega_predicted == 0

    def test_worked_trivial(self):
        v = replay([witness(1, "0:1", "0:1", [Handle(1, 1, ((1, 0),))])])
        assert dict(v.trace)["lambda_ff"].is_zero()
        assert v.omega_direct == v.omega_predicted == 0

    def test_empty(self):
        v = replay([])
        assert v.agrees and v.omega_direct == 0

    def test_bad_witness_fails_at_step_zero(self):
        with pytest.raises(InvariantViolation) as info:
            replay([witness(2, "0:1", "0:3", [Handle(1, 1, ((1, 0),))])])
        assert info.value.step == 0

    def test_generated_instances_agree_and_stay_in_span(self):
        for seed in range(100):
            mf = generate(seed)
            assert mf.metadata["not_in_span_resamples"] == 0
            assert replay(mf.witnesses).agrees
        for seed in range(20):
            assert replay(generate(seed, GenParams(sigma_zero=True)).witnesses).agrees

"""Relating Kirk's sigma_+ to Li's omega_-.

Two parametrisations of sigma_+ are in play:

* theorem shape: sigma_+ = sum_{n>=1} a_n (s^n - 1), and omega_- is the
  parity of sum {a_n : n = 2 mod 4};
* Kirk-image shape: sigma_+ + sigma_- = a_0 + sum_{n>=2} a_n (n^2 s - s^n).

For the same polynomial the n >= 2 coefficients of the two shapes differ
in sign only, so their parities agree.  :func:`kirk_to_theorem` and
:func:`theorem_to_kirk` convert explicitly.

:func:`replay` re-runs the mod-2 chain that links the two invariants on
concrete disk witnesses, asserting every intermediate identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import (DivisionFailed, InvariantViolation, NotDivisibleError, NotInImageError,
                     NotInSpanError, NotSigmaShapedError)
from .laurent import LaurentPoly, bar, eval_at_one, exact_divide_mod2, phi
from .linkmap import ConstructedDiskWitness, omega_from_witness
from .wall import gram_lambda_self

__all__ = [
    "KirkDecomposition",
    "ThetaCoefficients",
    "TheoremVerdict",
    "kirk_compose",
    "kirk_decompose",
    "theorem_coeffs",
    "theorem_compose",
    "kirk_to_theorem",
    "theorem_to_kirk",
    "predicted_omega",
    "lambda_n_poly",
    "lambda_n_decompose",
    "symmetric_span_solve",
    "replay",
]

_S2 = LaurentPoly.gf2([1])
_ONE2 = LaurentPoly.gf2([0])
_SINV2 = LaurentPoly.gf2([-1])
_S_PLUS_SINV2 = _S2 + _SINV2
_ONE_PLUS_S2 = _ONE2 + _S2
_ONE_PLUS_SINV2 = _ONE2 + _SINV2
_ONE_PLUS_S2_4 = _ONE_PLUS_S2 ** 4
_DIVISOR = _S_PLUS_SINV2 * _ONE_PLUS_SINV2


@dataclass(frozen=True)
class KirkDecomposition:
    a0: int
    a: dict[int, int]

    def compose(self) -> LaurentPoly:
        return kirk_compose(self.a0, self.a)


@dataclass(frozen=True)
class ThetaCoefficients:
    """Parities a_n mod 2 (n >= 2) of a polynomial in the span of
    s^n + s^-n + n(s + s^-1) over GF(2)."""

    a: dict[int, int]

    def predicted_omega(self) -> int:
        return sum(bit for n, bit in self.a.items() if n % 4 == 2) % 2

    def compose(self) -> LaurentPoly:
        acc = LaurentPoly.gf2()
        for n, bit in self.a.items():
            if bit:
                acc = acc + lambda_n_poly(n)
        return acc


@dataclass
class TheoremVerdict:
    omega_direct: int
    omega_predicted: int
    trace: list[tuple[str, Any]] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return self.omega_direct == self.omega_predicted


def kirk_compose(a0: int, a: dict[int, int]) -> LaurentPoly:
    """a0 + sum_n a_n (n^2 s - s^n)."""
    terms = {0: a0, 1: 0}
    for n, an in a.items():
        if n < 2:
            raise ValueError(f"Kirk coefficients start at n = 2, got n = {n}")
        terms[1] += n * n * an
        terms[n] = terms.get(n, 0) - an
    return LaurentPoly(terms)


def kirk_decompose(p: LaurentPoly) -> KirkDecomposition:
    if p.mod2:
        raise NotInImageError("Kirk decomposition needs an integer polynomial")
    if p.valuation is not None and p.valuation < 0:
        raise NotInImageError(f"{p} has negative exponents")
    a = {n: -c for n, c in p.items() if n >= 2}
    expected = sum(n * n * an for n, an in a.items())
    if p.coeff(1) != expected:
        raise NotInImageError(
            f"coefficient of s is {p.coeff(1)}, but sum n^2 a_n = {expected}")
    return KirkDecomposition(p.coeff(0), a)


def _check_sigma_shaped(p: LaurentPoly) -> None:
    if p.mod2:
        raise NotSigmaShapedError("sigma_+ must be an integer polynomial")
    if p.valuation is not None and p.valuation < 0:
        raise NotSigmaShapedError(f"{p} has negative exponents")
    if eval_at_one(p) != 0:
        raise NotSigmaShapedError(f"{p} evaluates to {eval_at_one(p)} at s = 1, expected 0")


def theorem_coeffs(sigma_plus: LaurentPoly) -> list[tuple[int, int]]:
    """Integers a_n, n >= 1, with sigma_plus = sum a_n (s^n - 1)."""
    _check_sigma_shaped(sigma_plus)
    return [(n, c) for n, c in sigma_plus.items() if n >= 1]


def theorem_compose(coeffs: Sequence[tuple[int, int]]) -> LaurentPoly:
    acc: dict[int, int] = {}
    for n, an in coeffs:
        if n < 1:
            raise ValueError(f"theorem coefficients start at n = 1, got n = {n}")
        acc[n] = acc.get(n, 0) + an
        acc[0] = acc.get(0, 0) - an
    return LaurentPoly(acc)


def kirk_to_theorem(dec: KirkDecomposition) -> list[tuple[int, int]]:
    return theorem_coeffs(dec.compose())


def theorem_to_kirk(coeffs: Sequence[tuple[int, int]]) -> KirkDecomposition:
    return kirk_decompose(theorem_compose(coeffs))


def predicted_omega(sigma_plus: LaurentPoly) -> int:
    """Parity of sum {a_n : n = 2 mod 4} for sigma_plus = sum a_n (s^n - 1)."""
    return sum(an for n, an in theorem_coeffs(sigma_plus) if n % 4 == 2) % 2


def lambda_n_poly(n: int) -> LaurentPoly:
    """s^n + s^-n + n(s + s^-1) over GF(2)."""
    p = LaurentPoly.gf2([n]) + LaurentPoly.gf2([-n])
    if n % 2:
        p = p + _S_PLUS_SINV2
    return p


def lambda_n_decompose(n: int) -> tuple[LaurentPoly, int]:
    """r_n with s^n + s^-n + n(s + s^-1) = (1 + s)^4 r_n mod 2, and r_n(1) mod 2.

    r_n(1) is checked against n/2 mod 2 for even n and 0 for odd n.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    try:
        r = exact_divide_mod2(lambda_n_poly(n), _ONE_PLUS_S2_4)
    except NotDivisibleError as exc:
        raise DivisionFailed(f"(1+s)^4 does not divide the n = {n} term: {exc}") from exc
    at_one = eval_at_one(r)
    expected = (n // 2) % 2 if n % 2 == 0 else 0
    if at_one != expected:
        raise DivisionFailed(f"r_{n}(1) = {at_one}, expected {expected}")
    return r, at_one


def symmetric_span_solve(T: LaurentPoly) -> ThetaCoefficients:
    """Write T as sum_{n>=2} a_n [s^n + s^-n + n(s + s^-1)] mod 2."""
    T = T.reduce_mod2()
    if not T.is_bar_symmetric():
        raise NotInSpanError(f"{T} is not bar-symmetric")
    if T.coeff(0):
        raise NotInSpanError(f"{T} has a nonzero constant term")
    a = {n: 1 for n, _ in T.items() if n >= 2}
    s_coeff = sum(n for n in a) % 2
    if T.coeff(1) != s_coeff:
        raise NotInSpanError(
            f"coefficient of s in {T} is {T.coeff(1)}, but sum n a_n = {s_coeff} mod 2")
    return ThetaCoefficients(a)


def _expect(cond: bool, step: int, message: str) -> None:
    if not cond:
        raise InvariantViolation(f"step {step}: {message}", step=step)


def replay(witnesses: Sequence[ConstructedDiskWitness]) -> TheoremVerdict:
    """Replay the mod-2 derivation on disk witnesses.

    Steps: (1) c_i^+ = q_i, c_i^- = q_i + (1+s) u_i; (2) lambda(f, f) from
    the Gram form; (3) solve for the a_n parities; (4) divide by
    (s + s^-1)(1 + s^-1) and apply phi to both sides; (5) predicted omega;
    (6) omega from the disks themselves.
    """
    trace: list[tuple[str, Any]] = []
    try:
        for i, w in enumerate(witnesses):
            w.check(f"witness {i}")
    except InvariantViolation as exc:
        exc.step = 0
        raise

    # (1)
    c_plus, c_minus = [], []
    for w in witnesses:
        q2 = w.q.reduce_mod2()
        u2 = w.u.reduce_mod2()
        c_plus.append(q2)
        c_minus.append(q2 + _ONE_PLUS_S2 * u2)
        _expect(eval_at_one(q2) == w.n % 2, 1, f"q(1) = {eval_at_one(q2)} not = n = {w.n} mod 2")
    trace.append(("c_plus", c_plus))
    trace.append(("c_minus", c_minus))

    # (2)
    lam = gram_lambda_self(c_plus, c_minus)
    expanded = LaurentPoly.gf2()
    for w in witnesses:
        q2, u2 = w.q.reduce_mod2(), w.u.reduce_mod2()
        expanded = expanded + (_ONE_PLUS_S2 * u2 * bar(q2)
                               + _ONE_PLUS_SINV2 * q2 * bar(u2)
                               + _ONE_PLUS_S2 * _ONE_PLUS_SINV2 * u2 * bar(u2))
    expanded = _S_PLUS_SINV2 * expanded
    _expect(lam == expanded, 2, f"Gram form {lam} differs from expanded bracket {expanded}")
    _expect(lam.is_bar_symmetric(), 2, f"lambda(f, f) = {lam} is not bar-symmetric")
    trace.append(("lambda_ff", lam))

    # (3)
    try:
        theta = symmetric_span_solve(lam)
    except NotInSpanError as exc:
        exc.step = 3
        raise
    _expect(theta.compose() == lam, 3, "recomposed span element differs from lambda(f, f)")
    trace.append(("a_n_mod2", dict(sorted(theta.a.items()))))

    # (4)
    r_sum = LaurentPoly.gf2()
    rhat_at_one = 0
    for n, bit in theta.a.items():
        if bit:
            r_n, r_at_one = lambda_n_decompose(n)
            r_sum = r_sum + r_n
            rhat_at_one += r_at_one  # r-hat_n = s^3 r_n, same value at s = 1
    rhat_at_one %= 2
    _expect(lam == _ONE_PLUS_S2_4 * r_sum, 4, "lambda(f, f) differs from (1+s)^4 sum a_n r_n")
    try:
        quotient = exact_divide_mod2(lam, _DIVISOR)
    except NotDivisibleError as exc:
        raise DivisionFailed(f"step 4: {exc}", step=4) from exc
    _expect(quotient == _ONE_PLUS_SINV2 * r_sum.shift(3), 4,
            "quotient differs from (1 + s^-1) sum a_n r-hat_n")
    rhs = LaurentPoly.gf2()
    for w in witnesses:
        q2, u2 = w.q.reduce_mod2(), w.u.reduce_mod2()
        rhs = rhs + u2 * bar(q2) * _S2 + q2 * bar(u2) + _ONE_PLUS_S2 * u2 * bar(u2)
    _expect(quotient == rhs, 4, f"quotient {quotient} differs from the q/u expression {rhs}")
    lhs_phi = phi(quotient)
    _expect(lhs_phi == rhat_at_one, 4,
            f"phi of quotient = {lhs_phi}, but sum a_n r-hat_n(1) = {rhat_at_one}")
    rhs_phi = sum(w.u.at_one() * (w.q.at_one() + 1) for w in witnesses) % 2
    _expect(lhs_phi == rhs_phi, 4, f"phi sides differ: {lhs_phi} vs {rhs_phi}")
    trace.append(("quotient", quotient))
    trace.append(("sum_a_n_rhat_n_at_1", rhat_at_one))
    trace.append(("sum_u_1_times_n_plus_1", rhs_phi))

    # (5)
    predicted = theta.predicted_omega()
    _expect(predicted == rhat_at_one, 5, "n = 2 mod 4 parity differs from sum a_n r-hat_n(1)")
    trace.append(("omega_predicted", predicted))

    # (6)
    try:
        direct = omega_from_witness(witnesses)
    except InvariantViolation as exc:
        exc.step = 6
        raise
    trace.append(("omega_direct", direct))
    return TheoremVerdict(direct, predicted, trace)


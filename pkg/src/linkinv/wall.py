"""Wall intersection numbers for a 4-manifold with fundamental group Z = <s>.

Group-ring elements are :class:`~linkinv.laurent.LaurentPoly` values.  The
self-intersection number lives in the quotient of Z[s, s^-1] by the
subgroup {a - a^-1}; a class there is stored as its folded representative,
where every term c s^e with e < 0 has been moved to c s^-e.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .laurent import LaurentPoly, S, bar

__all__ = [
    "WallClass",
    "SignedIntersection",
    "q_fold",
    "mu",
    "mu_hat",
    "rho",
    "lambda_pair_product",
    "surgery_lambda_update",
    "surgery_mu_update",
    "gram_lambda_self",
]


@dataclass(frozen=True)
class WallClass:
    """Element of Q = Z[s, s^-1] / {a - a-bar}, held by its folded representative."""

    rep: LaurentPoly

    def __post_init__(self):
        if self.rep.valuation is not None and self.rep.valuation < 0:
            raise ValueError("WallClass representative must be folded; use q_fold()")

    @property
    def mod2(self) -> bool:
        return self.rep.mod2

    def __add__(self, other: WallClass) -> WallClass:
        return WallClass(self.rep + other.rep)

    def __sub__(self, other: WallClass) -> WallClass:
        return WallClass(self.rep - other.rep)

    def reduce_mod2(self) -> WallClass:
        return WallClass(self.rep.reduce_mod2())

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __str__(self):
        return str(self.rep)


class SignedIntersection(NamedTuple):
    """One intersection or double point: its sign and the exponent of its loop class."""

    sign: int
    exponent: int

    def check(self) -> SignedIntersection:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        return self


def q_fold(p: LaurentPoly) -> WallClass:
    """Project a group-ring element onto its class in Q."""
    return WallClass(LaurentPoly(((abs(e), c) for e, c in p.items()), p.mod2))


def _signed_sum(points: Sequence[SignedIntersection]) -> LaurentPoly:
    return LaurentPoly((pt.exponent, pt.check().sign) for pt in points)


def mu(points: Sequence[SignedIntersection]) -> WallClass:
    return q_fold(_signed_sum(points))


def mu_hat(points: Sequence[SignedIntersection]) -> tuple[WallClass, int]:
    """Reduced self-intersection number and the signed count self(A).

    Returns ``(mu(A) - self(A) * 1, self(A))``.
    """
    self_count = sum(pt.check().sign for pt in points)
    return mu(points) - WallClass(LaurentPoly.constant(self_count)), self_count


def rho(w: WallClass) -> LaurentPoly:
    """Hurewicz image of a class in Q as an ordinary polynomial in Z[s]."""
    return w.rep


def lambda_pair_product(x: SignedIntersection, y: SignedIntersection) -> int:
    """Exponent of the loop through x and y: lambda[x] * lambda[y]^-1.

    Basepoint and whiskers drop out because the group is abelian.
    """
    return x.exponent - y.exponent


def surgery_lambda_update(lam: LaurentPoly, delta2_exp: int) -> LaurentPoly:
    """lambda(S, B) = (1 - s^k) lambda(D, B) after surgering a torus along delta_0."""
    one = LaurentPoly.constant(1, lam.mod2)
    return (one - LaurentPoly.monomial(delta2_exp, mod2=lam.mod2)) * lam


def surgery_mu_update(mu_D: WallClass, mu_Dp: WallClass, dd_count: int,
                      delta2_exp: int) -> WallClass:
    """mu(S) mod 2 from the two surgery disks and their mutual intersection count."""
    cross = LaurentPoly.monomial(delta2_exp, dd_count, mod2=True)
    total = mu_D.rep.reduce_mod2() + mu_Dp.rep.reduce_mod2() + cross
    return q_fold(total)


_S_PLUS_SINV = (S + bar(S)).reduce_mod2()


def gram_lambda_self(c_plus: Sequence[LaurentPoly], c_minus: Sequence[LaurentPoly]) -> LaurentPoly:
    """Mod-2 self-intersection of sum_i c_i^+ A_i^+ + c_i^- A_i^-.

    Each basis sphere has lambda(A, A') = s + s^-1 mod 2, and distinct basis
    spheres are disjoint, so only the diagonal terms survive.
    """
    if len(c_plus) != len(c_minus):
        raise ValueError(f"length mismatch: {len(c_plus)} c+ vs {len(c_minus)} c-")
    acc = LaurentPoly.gf2()
    for cp, cm in zip(c_plus, c_minus):
        cp = cp.reduce_mod2()
        cm = cm.reduce_mod2()
        acc = acc + cp * bar(cp) + cm * bar(cm)
    return _S_PLUS_SINV * acc

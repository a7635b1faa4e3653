"""Combinatorial model of a link map S^2_+ u S^2_- -> S^4.

Each component is recorded by its double points, each with a sign and the
linking number ``n`` of its accessory circle with the other component.
From this data we compute Kirk's sigma, validate goodness, pair the double
points of the minus component, and evaluate Li's omega_- from Whitney disk
data.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvariantViolation
from .laurent import LaurentPoly
from .wall import SignedIntersection, mu_hat, rho

__all__ = [
    "DoublePoint",
    "LinkMapModel",
    "WhitneyDiskDatum",
    "Handle",
    "ConstructedDiskWitness",
    "ValidationReport",
    "pair_double_points",
    "validate",
    "sigma",
    "sigma_via_mu",
    "whitney_circle_lk",
    "jix_term",
    "l_minus_sum",
    "l_minus_shortcut",
    "l_minus",
    "omega_minus",
    "expand_witness",
    "omega_from_witness",
]


@dataclass(frozen=True)
class DoublePoint:
    sign: int
    n: int

    def __post_init__(self):
        if self.sign not in (1, -1) or isinstance(self.sign, bool):
            raise ValueError(f"double point sign must be +1 or -1, got {self.sign!r}")


@dataclass(frozen=True)
class LinkMapModel:
    """Double points of f(S^2_+) (n measured against f(S^2_-)) and vice versa."""

    plus_points: tuple[DoublePoint, ...] = ()
    minus_points: tuple[DoublePoint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "plus_points", tuple(self.plus_points))
        object.__setattr__(self, "minus_points", tuple(self.minus_points))

    def points(self, side: str) -> tuple[DoublePoint, ...]:
        if side == "+":
            return self.plus_points
        if side == "-":
            return self.minus_points
        raise ValueError(f"side must be '+' or '-', got {side!r}")


@dataclass(frozen=True)
class WhitneyDiskDatum:
    """One framed Whitney disk W_i: the pair's |n| and the mod-2 weights m_i(x)
    of the points where f(S^2_-) meets its interior."""

    n: int
    points: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if self.n < 0:
            raise ValueError(f"disk n must be non-negative, got {self.n}")
        bad = [m for m in self.points if m not in (0, 1)]
        if bad:
            raise ValueError(f"disk weights must be 0 or 1, got {bad}")


@dataclass(frozen=True)
class Handle:
    """One handle of the surgered disk: the bit m_i^j and the K_i^j point pairs
    on the two parallel surgery disks."""

    m_bit: int
    pair_count: int
    pair_bits: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pair_bits", tuple(tuple(p) for p in self.pair_bits))


@dataclass(frozen=True)
class ConstructedDiskWitness:
    """Bookkeeping for a Whitney disk built by surgering an embedded disk V_i.

    ``q`` and ``u`` are the Laurent polynomials attached to the i-th pair,
    with q(1) = n and lambda(f(S^2_+), V_i^c) = (1 + s) u mod 2.
    """

    n: int
    handles: tuple[Handle, ...]
    u: LaurentPoly
    q: LaurentPoly

    def __post_init__(self):
        object.__setattr__(self, "handles", tuple(self.handles))

    def check(self, label: str = "witness") -> ConstructedDiskWitness:
        if self.n < 0:
            raise InvariantViolation(f"{label}: n must be non-negative, got {self.n}")
        if self.u.mod2 or self.q.mod2:
            raise InvariantViolation(f"{label}: u and q must be integer polynomials")
        for j, h in enumerate(self.handles):
            where = f"{label} handle {j}"
            if h.m_bit not in (0, 1):
                raise InvariantViolation(f"{where}: m_bit must be 0 or 1, got {h.m_bit}")
            if h.pair_count < 0 or len(h.pair_bits) != h.pair_count:
                raise InvariantViolation(
                    f"{where}: pair_count {h.pair_count} but {len(h.pair_bits)} pairs given")
            if h.pair_count % 2 != h.m_bit:
                raise InvariantViolation(
                    f"{where}: K = {h.pair_count} is not congruent to m_bit = {h.m_bit} mod 2")
            for k, pair in enumerate(h.pair_bits):
                if len(pair) != 2 or any(b not in (0, 1) for b in pair):
                    raise InvariantViolation(f"{where} pair {k}: bits must be two 0/1 values")
                if (pair[0] + pair[1]) % 2 != 1:
                    raise InvariantViolation(f"{where} pair {k}: {pair} does not sum to 1 mod 2")
        m_total = sum(h.m_bit for h in self.handles) % 2
        if self.u.at_one() % 2 != m_total:
            raise InvariantViolation(
                f"{label}: u(1) = {self.u.at_one()} is not congruent to sum of m_bit = {m_total}")
        if self.q.at_one() != self.n:
            raise InvariantViolation(f"{label}: q(1) = {self.q.at_one()} differs from n = {self.n}")
        return self


@dataclass
class ValidationReport:
    plus_self: int
    minus_self: int
    plus_good: bool
    minus_good: bool
    pairable: bool
    pairs: list[tuple[int, int, int]] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)

    def pair_ns(self) -> list[int]:
        return sorted(n for _, _, n in self.pairs)


def pair_double_points(points: Sequence[DoublePoint]) -> list[tuple[int, int, int]] | None:
    """Match double points into oppositely signed pairs with equal |n|.

    Greedy within each |n| bucket, in input order.  Returns
    ``(index_of_positive, index_of_negative, |n|)`` triples, or None when no
    perfect matching exists.
    """
    buckets: dict[int, dict[int, list[int]]] = defaultdict(lambda: {1: [], -1: []})
    for idx, p in enumerate(points):
        buckets[abs(p.n)][p.sign].append(idx)
    pairs = []
    for n in sorted(buckets):
        pos, neg = buckets[n][1], buckets[n][-1]
        if len(pos) != len(neg):
            return None
        pairs.extend((i, j, n) for i, j in zip(pos, neg))
    return sorted(pairs)


def validate(model: LinkMapModel) -> ValidationReport:
    plus_self = sum(p.sign for p in model.plus_points)
    minus_self = sum(p.sign for p in model.minus_points)
    pairs = pair_double_points(model.minus_points)
    report = ValidationReport(
        plus_self=plus_self,
        minus_self=minus_self,
        plus_good=plus_self == 0,
        minus_good=minus_self == 0,
        pairable=pairs is not None,
        pairs=pairs or [],
    )
    if plus_self:
        report.problems.append(f"self(f_+) = {plus_self}, expected 0")
    if minus_self:
        report.problems.append(f"self(f_-) = {minus_self}, expected 0")
    if pairs is None:
        report.problems.append("double points of f(S^2_-) admit no sign-opposite, equal-|n| pairing")
    return report


def sigma(model: LinkMapModel, side: str) -> LaurentPoly:
    """Kirk's sigma_side: sum of sign(p) (s^|n(p)| - 1)."""
    acc: Counter[int] = Counter()
    for p in model.points(side):
        acc[abs(p.n)] += p.sign
        acc[0] -= p.sign
    return LaurentPoly(acc)


def sigma_via_mu(model: LinkMapModel, side: str) -> LaurentPoly:
    """Same value routed through the reduced Wall self-intersection number."""
    pts = [SignedIntersection(p.sign, p.n) for p in model.points(side)]
    reduced, _ = mu_hat(pts)
    return rho(reduced)


def whitney_circle_lk(lk_plus: int, lk_minus: int) -> int:
    """|lk| of a Whitney circle from the accessory-circle linking numbers at its ends."""
    return abs(lk_plus - lk_minus)


def jix_term(n: int, m: int) -> int:
    """Contribution of one interior point of W_i: n + n m + m mod 2."""
    return (n + n * m + m) % 2


def l_minus_sum(disk: WhitneyDiskDatum) -> int:
    return sum(jix_term(disk.n, m) for m in disk.points) % 2


def l_minus_shortcut(disk: WhitneyDiskDatum) -> int:
    """Odd n: intersection count mod 2.  Even n: sum of weights mod 2."""
    if disk.n % 2:
        return len(disk.points) % 2
    return sum(disk.points) % 2


def l_minus(disk: WhitneyDiskDatum) -> int:
    value = l_minus_sum(disk)
    shortcut = l_minus_shortcut(disk)
    if value != shortcut:
        raise InvariantViolation(
            f"L^-(W) mismatch for {disk}: termwise {value}, shortcut {shortcut}")
    return value


def omega_minus(disks: Sequence[WhitneyDiskDatum]) -> int:
    return sum(l_minus(d) for d in disks) % 2


def expand_witness(w: ConstructedDiskWitness) -> WhitneyDiskDatum:
    """Raw disk data of a constructed disk: both points of every pair."""
    pts = [b for h in w.handles for pair in h.pair_bits for b in pair]
    return WhitneyDiskDatum(w.n, tuple(pts))


def omega_from_witness(witnesses: Sequence[ConstructedDiskWitness]) -> int:
    """omega_- from the construction: sum over even-n witnesses of sum_j m_bit.

    Cross-checked against :func:`omega_minus` on the expanded disk data.
    """
    total = 0
    for i, w in enumerate(witnesses):
        w.check(f"witness {i}")
        if w.n % 2 == 0:
            total += sum(h.m_bit for h in w.handles)
    total %= 2
    direct = omega_minus([expand_witness(w) for w in witnesses])
    if direct != total:
        raise InvariantViolation(
            f"omega from witnesses ({total}) disagrees with omega on expanded disks ({direct})")
    return total

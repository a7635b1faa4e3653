"""Seeded generator of consistent model files with disk witnesses.

A generated instance is built in the same order as the construction it
models.  For each Whitney-disk pair we draw n_i and q_i with q_i(1) = n_i,
then the handles of the surgered disk.  Each handle j gets an integer lift
m of m_bit and an offset l, and contributes u_j = (1 + s^m) s^l / (1 + s)
mod 2, so u_i(1) = sum_j m_bit automatically.  The mod-2 self-intersection
lambda(f, f) fixes the parities of the Kirk coefficients; those are lifted
to integers and realised as double points of f(S^2_+).
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass

from .errors import GenerationExhausted, NotInSpanError
from .laurent import LaurentPoly, exact_divide_mod2, lift
from .linkmap import ConstructedDiskWitness, DoublePoint, Handle, LinkMapModel, expand_witness
from .modelfile import ModelFile
from .theorem import kirk_compose, symmetric_span_solve
from .wall import gram_lambda_self

__all__ = ["GenParams", "generate"]

_ONE_PLUS_S = LaurentPoly.gf2([0, 1])


@dataclass(frozen=True)
class GenParams:
    max_d: int = 4
    max_n: int = 6
    max_deg: int = 6
    max_handles: int = 3
    max_extra_pairs: int = 1
    max_coeff: int = 3
    sigma_zero: bool = False
    resample_budget: int = 100


def _random_poly(rng: random.Random, max_deg: int, max_coeff: int) -> dict[int, int]:
    lo = rng.randint(-max_deg, max_deg)
    hi = rng.randint(lo, max_deg)
    return {e: rng.randint(-max_coeff, max_coeff) for e in range(lo, hi + 1)}


def _poly_with_value(rng, max_deg, max_coeff, value) -> LaurentPoly:
    coeffs = _random_poly(rng, max_deg, max_coeff)
    e = rng.choice(sorted(coeffs))
    coeffs[e] += value - sum(coeffs.values())
    return LaurentPoly(coeffs)


def _handle_and_u(rng: random.Random, p: GenParams) -> tuple[Handle, LaurentPoly]:
    m_bit = 0 if p.sigma_zero else rng.randint(0, 1)
    k = m_bit + 2 * rng.randint(0, p.max_extra_pairs)
    pairs = []
    for _ in range(k):
        b = rng.randint(0, 1)
        pairs.append((b, 1 - b))
    m_lift = m_bit + 2 * rng.randint(-1, 1)
    shift = rng.randint(-2, 2)
    if p.sigma_zero:
        u_j = LaurentPoly.gf2()
    else:
        pair_term = (LaurentPoly.gf2([0]) + LaurentPoly.gf2([m_lift])).shift(shift)
        u_j = exact_divide_mod2(pair_term, _ONE_PLUS_S)
    return Handle(m_bit, k, tuple(pairs)), u_j


def _witness(rng: random.Random, p: GenParams) -> ConstructedDiskWitness:
    n = rng.randint(0, p.max_n)
    q = _poly_with_value(rng, p.max_deg, p.max_coeff, n)
    handles = []
    u2 = LaurentPoly.gf2()
    for _ in range(rng.randint(0, p.max_handles)):
        h, u_j = _handle_and_u(rng, p)
        handles.append(h)
        u2 = u2 + u_j
    # integer lift of u: even noise does not change the mod-2 class
    noise = LaurentPoly(_random_poly(rng, p.max_deg, 1)) * 2
    u = lift(u2) + noise
    return ConstructedDiskWitness(n, tuple(handles), u, q)


def _plus_points(rng: random.Random, sigma_plus: LaurentPoly) -> list[DoublePoint]:
    pts = []
    for n, c in sigma_plus.items():
        if n == 0:
            continue
        sign = 1 if c > 0 else -1
        pts.extend(DoublePoint(sign, n * rng.choice((1, -1))) for _ in range(abs(c)))
    balance = sum(pt.sign for pt in pts)
    pts.extend(DoublePoint(-1 if balance > 0 else 1, 0) for _ in range(abs(balance)))
    for _ in range(rng.randint(0, 2)):
        k = rng.randint(0, 6)
        pts.append(DoublePoint(1, k))
        pts.append(DoublePoint(-1, -k))
    rng.shuffle(pts)
    return pts


def generate(seed: int, params: GenParams | None = None) -> ModelFile:
    """Deterministic in (seed, params)."""
    p = params or GenParams()
    rng = random.Random(seed)
    resamples = 0
    while True:
        d = rng.randint(0, p.max_d)
        witnesses = [_witness(rng, p) for _ in range(d)]
        c_plus = [w.q for w in witnesses]
        c_minus = [w.q + LaurentPoly({0: 1, 1: 1}) * w.u for w in witnesses]
        try:
            theta = symmetric_span_solve(gram_lambda_self(c_plus, c_minus))
            break
        except NotInSpanError:
            resamples += 1
            if resamples >= p.resample_budget:
                raise GenerationExhausted(
                    f"seed {seed}: {resamples} draws outside the span") from None

    kirk_a: dict[int, int] = {}
    if not p.sigma_zero:
        # coeff(s) of sigma_+ grows like n^2 a_n, so keep the lifts small
        for n, bit in theta.a.items():
            kirk_a[n] = rng.choice((1, -1)) if bit else 0
        for n in range(2, 5):
            if rng.random() < 0.2:
                kirk_a[n] = kirk_a.get(n, 0) + rng.choice((2, -2))
        kirk_a = {n: an for n, an in kirk_a.items() if an}
    a0 = -sum(an * (n * n - 1) for n, an in kirk_a.items())
    sigma_plus = kirk_compose(a0, kirk_a)

    minus = []
    for w in witnesses:
        minus.append(DoublePoint(1, w.n * rng.choice((1, -1))))
        minus.append(DoublePoint(-1, w.n * rng.choice((1, -1))))
    rng.shuffle(minus)

    metadata = {
        "description": f"generated instance, seed {seed}",
        "seed": seed,
        "params": asdict(p),
        "d": d,
        "not_in_span_resamples": resamples,
    }
    return ModelFile(
        LinkMapModel(tuple(_plus_points(rng, sigma_plus)), tuple(minus)),
        tuple(expand_witness(w) for w in witnesses),
        tuple(witnesses),
        metadata,
    )

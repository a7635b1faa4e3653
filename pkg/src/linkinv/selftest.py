"""Built-in verification battery behind ``linkinv selftest``.

Every suite draws its cases from a fixed-seed RNG, so runs are repeatable.
``mutate`` swaps in a broken per-point omega term to confirm the battery
notices.
"""

from __future__ import annotations

import contextlib
import random
import sys
import time
from dataclasses import dataclass

from . import linkmap
from .compute import EXIT_OK, compute
from .errors import NotInImageError
from .generate import GenParams, generate
from .laurent import LaurentPoly, bar, eval_at_one, phi
from .linkmap import DoublePoint, LinkMapModel, WhitneyDiskDatum
from .modelfile import emit_model, parse_model
from .theorem import kirk_compose, kirk_decompose, lambda_n_decompose, lambda_n_poly

MUTATIONS = {
    "drop-m": lambda n, m: (n + n * m) % 2,
    "drop-n": lambda n, m: (n * m + m) % 2,
    "drop-nm": lambda n, m: (n + m) % 2,
}

_S = LaurentPoly.monomial(1)
_ONE_PLUS_S_4 = LaurentPoly.gf2([0, 1]) ** 4


@dataclass
class SuiteResult:
    name: str
    passed: int
    total: int
    seconds: float
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.first_failure is None and self.passed == self.total


def random_laurent(rng: random.Random, lo: int = -8, hi: int = 8, cmax: int = 9) -> LaurentPoly:
    return LaurentPoly({e: rng.randint(-cmax, cmax) for e in range(lo, hi + 1) if rng.random() < 0.5})


def random_model(rng: random.Random, max_points: int = 12, max_n: int = 6) -> LinkMapModel:
    def pts():
        return tuple(DoublePoint(rng.choice((1, -1)), rng.randint(-max_n, max_n))
                     for _ in range(rng.randint(0, max_points)))
    return LinkMapModel(pts(), pts())


def brute_force_pairable(points) -> bool:
    """Exhaustive search for a perfect sign-opposite, equal-|n| matching."""
    pts = list(points)
    if not pts:
        return True
    if len(pts) % 2:
        return False
    first, rest = pts[0], pts[1:]
    for k, other in enumerate(rest):
        if other.sign == -first.sign and abs(other.n) == abs(first.n):
            if brute_force_pairable(rest[:k] + rest[k + 1:]):
                return True
    return False


def _phi_properties(rng, count):
    for _ in range(count):
        g = random_laurent(rng)
        g1 = eval_at_one(g)
        yield phi(bar(g)) == phi(g), f"phi(bar g) != phi(g) for g = {g}"
        yield phi(_S * g) == (g1 + phi(g)) % 2, f"phi(s g) rule fails for g = {g}"
        for n in range(-6, 7):
            factor = LaurentPoly({0: 1}) + LaurentPoly.monomial(n)
            yield phi(factor * g) == (n * g1) % 2, f"phi((1+s^{n}) g) rule fails for g = {g}"


def _lambda_n(rng, count):
    for n in range(2, 65):
        r, at_one = lambda_n_decompose(n)
        yield r * _ONE_PLUS_S_4 == lambda_n_poly(n), f"re-multiplication fails at n = {n}"
        expected = (n // 2) % 2 if n % 2 == 0 else 0
        yield at_one == expected, f"r_{n}(1) parity {at_one}, expected {expected}"


def _kirk(rng, count):
    for _ in range(count):
        a0 = rng.randint(-20, 20)
        a = {n: rng.randint(-5, 5) for n in range(2, 11) if rng.random() < 0.5}
        a = {n: v for n, v in a.items() if v}
        dec = kirk_decompose(kirk_compose(a0, a))
        yield dec.a0 == a0 and dec.a == a, f"round trip fails for a0 = {a0}, a = {a}"
    for k in range(max(1, count // 10)):
        a = {n: rng.randint(-5, 5) for n in range(2, 11)}
        p = kirk_compose(rng.randint(-5, 5), a)
        if k % 2:
            p = p + LaurentPoly.monomial(1, rng.choice((-3, -2, -1, 1, 2, 3)))
        else:
            p = p + LaurentPoly.monomial(-rng.randint(1, 5), rng.choice((-1, 1)))
        try:
            kirk_decompose(p)
        except NotInImageError:
            yield True, ""
        else:
            yield False, f"non-member {p} accepted"


def _sigma_two_path(rng, count):
    for _ in range(count):
        m = random_model(rng)
        for side in "+-":
            direct = linkmap.sigma(m, side)
            yield direct == linkmap.sigma_via_mu(m, side), f"sigma paths differ on {m}"
            yield eval_at_one(direct) == 0, f"sigma({side})(1) != 0 on {m}"


def _jix_shortcut(rng, count):
    for _ in range(count):
        disk = WhitneyDiskDatum(rng.randint(0, 8),
                                tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 8))))
        yield linkmap.l_minus_sum(disk) == linkmap.l_minus_shortcut(disk), f"mismatch on {disk}"


def _pairability(rng, count):
    for _ in range(count):
        if rng.random() < 0.5:
            pts = []
            for _ in range(rng.randint(0, 4)):
                n = rng.randint(0, 4)
                pts += [DoublePoint(1, n * rng.choice((1, -1))), DoublePoint(-1, n * rng.choice((1, -1)))]
            if rng.random() < 0.5 and pts:
                pts[rng.randrange(len(pts))] = DoublePoint(rng.choice((1, -1)), rng.randint(-4, 4))
            rng.shuffle(pts)
        else:
            pts = [DoublePoint(rng.choice((1, -1)), rng.randint(-3, 3)) for _ in range(rng.randint(0, 8))]
        model = LinkMapModel((), tuple(pts))
        report = linkmap.validate(model)
        by_sigma = linkmap.sigma(model, "-").is_zero() and report.minus_self == 0
        oracle = brute_force_pairable(pts)
        yield report.pairable == by_sigma == oracle, f"pairability mismatch on {pts}"


def _replay_battery(rng, count):
    for seed in range(count):
        mf = generate(seed)
        again = parse_model(emit_model(mf))
        report = compute(again)
        ok = (report.exit_code == EXIT_OK and report.verdict is not None
              and report.verdict["agrees"])
        yield ok, f"seed {seed}: exit {report.exit_code}, notes {report.notes}"


def _corollary(rng, count):
    params = GenParams(sigma_zero=True)
    for seed in range(count):
        for mf in (generate(seed), generate(seed, params)):
            report = compute(mf)
            if report.omega_predicted == 0:
                yield report.omega_direct == 0, f"seed {seed}: predicted 0, direct {report.omega_direct}"
        zero = generate(seed, params)
        yield linkmap.sigma(zero.model, "+").is_zero(), f"seed {seed}: sigma_zero family has sigma_+ != 0"


SUITES = [
    ("phi-properties", _phi_properties, 1000, 50),
    ("lambda-n-division", _lambda_n, 1, 1),
    ("kirk-image-roundtrip", _kirk, 1000, 50),
    ("sigma-two-path", _sigma_two_path, 1000, 50),
    ("jix-vs-shortcut", _jix_shortcut, 1000, 50),
    ("pairability", _pairability, 500, 50),
    ("replay-battery", _replay_battery, 1000, 50),
    ("corollary", _corollary, 200, 20),
]


def run_suite(name, fn, count, seed=0) -> SuiteResult:
    rng = random.Random(f"{name}:{seed}")
    passed = total = 0
    failure = None
    start = time.perf_counter()
    try:
        for ok, detail in fn(rng, count):
            total += 1
            if ok:
                passed += 1
            elif failure is None:
                failure = detail
    except Exception as exc:  # noqa: BLE001 - any crash is a suite failure
        total += 1
        failure = failure or f"{type(exc).__name__}: {exc}"
    return SuiteResult(name, passed, total, time.perf_counter() - start, failure)


@contextlib.contextmanager
def mutated_jix(kind: str | None):
    if kind is None:
        yield
        return
    original = linkmap.jix_term
    linkmap.jix_term = MUTATIONS[kind]
    try:
        yield
    finally:
        linkmap.jix_term = original


def selftest(quick: bool = False, mutate: str | None = None, out=None) -> int:
    out = out or sys.stdout
    results = []
    with mutated_jix(mutate):
        for name, fn, full, small in SUITES:
            res = run_suite(name, fn, small if quick else full)
            results.append(res)
            status = "PASS" if res.ok else "FAIL"
            print(f"{status} {name:<22} {res.passed}/{res.total} checks ({res.seconds:.2f}s)", file=out)
            if not res.ok:
                print(f"     first failure: {res.first_failure}", file=out)
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed", file=out)
    return 1 if failed else 0


__all__ = ["selftest", "run_suite", "SUITES", "MUTATIONS", "brute_force_pairable",
           "random_laurent", "random_model"]

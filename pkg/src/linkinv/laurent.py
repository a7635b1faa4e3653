"""Exact Laurent polynomials in one variable ``s`` over Z or GF(2).

A :class:`LaurentPoly` is an immutable map exponent -> coefficient with
zero coefficients dropped, so equality is structural.  The same type
carries a ``mod2`` flag; GF(2)-form values store only exponents whose
coefficient is odd (as coefficient 1) and stay in GF(2) form under every
ring operation.  Mixing the two forms raises :class:`RingMismatchError`.

Textual form (used by the model files and the CLI)::

    "-1:2, 0:-1, 3:1"   ->   2 s^-1 - 1 + s^3

Pairs may appear in any order and repeated exponents are summed; output
is always in ascending exponent order.  The zero polynomial prints as
``"0"``.
"""

from __future__ import annotations

import operator
from collections.abc import Iterable, Mapping
from types import MappingProxyType

from .errors import DivisorZeroError, NotDivisibleError, ParseError, RingMismatchError

__all__ = [
    "LaurentPoly",
    "S",
    "ONE",
    "mul",
    "bar",
    "eval_at_one",
    "formal_derivative",
    "phi",
    "reduce_mod2",
    "lift",
    "exact_divide_mod2",
    "parse_poly",
    "format_poly",
]


def _clmul(a: int, b: int) -> int:
    """Carry-less product of two bit vectors."""
    if a < b:
        a, b = b, a
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


class LaurentPoly:
    __slots__ = ("_terms", "_mod2", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None,
                 mod2: bool = False):
        if coeffs is None:
            items: Iterable[tuple[int, int]] = ()
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            e = operator.index(e)
            acc[e] = acc.get(e, 0) + operator.index(c)
        if mod2:
            terms = {e: 1 for e, c in sorted(acc.items()) if c % 2}
        else:
            terms = {e: c for e, c in sorted(acc.items()) if c}
        self._terms = terms
        self._mod2 = bool(mod2)
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def gf2(cls, coeffs=None) -> LaurentPoly:
        """GF(2)-form constructor; an iterable of bare exponents is accepted too."""
        if coeffs is not None and not isinstance(coeffs, Mapping):
            coeffs = list(coeffs)
            if coeffs and not isinstance(coeffs[0], tuple):
                coeffs = [(e, 1) for e in coeffs]
        return cls(coeffs, mod2=True)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, mod2: bool = False) -> LaurentPoly:
        return cls({exponent: coeff}, mod2=mod2)

    @classmethod
    def constant(cls, c: int, mod2: bool = False) -> LaurentPoly:
        return cls({0: c}, mod2=mod2)

    @classmethod
    def _raw(cls, terms: dict[int, int], mod2: bool) -> LaurentPoly:
        # terms must already be canonical and sorted
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._mod2 = mod2
        obj._hash = None
        return obj

    # -- inspection ---------------------------------------------------
    @property
    def mod2(self) -> bool:
        return self._mod2

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    @property
    def valuation(self) -> int | None:
        return min(self._terms) if self._terms else None

    def is_bar_symmetric(self) -> bool:
        return all(self._terms.get(-e) == c for e, c in self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- ring plumbing -------------------------------------------------
    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other._mod2 != self._mod2:
                raise RingMismatchError("cannot combine a GF(2)-form and a Z-form polynomial")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._mod2)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc, self._mod2)

    __radd__ = __add__

    def __neg__(self):
        if self._mod2:
            return self
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return LaurentPoly(None, self._mod2)
        if self._mod2:
            lo_a, bits_a = self._bits()
            lo_b, bits_b = other._bits()
            return LaurentPoly._from_bits(lo_a + lo_b, _clmul(bits_a, bits_b))
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = LaurentPoly.constant(1, self._mod2)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by s^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()}, self._mod2)

    def _bits(self) -> tuple[int, int]:
        lo = self.valuation or 0
        bits = 0
        for e in self._terms:
            bits |= 1 << (e - lo)
        return lo, bits

    @classmethod
    def _from_bits(cls, lo: int, bits: int) -> LaurentPoly:
        terms = {}
        e = lo
        while bits:
            if bits & 1:
                terms[e] = 1
            bits >>= 1
            e += 1
        return cls._raw(terms, True)

    # -- equality -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self._mod2)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._mod2 == other._mod2 and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._mod2, tuple(self._terms.items())))
        return self._hash

    # -- named operations ------------------------------------------------
    def bar(self) -> LaurentPoly:
        return bar(self)

    def at_one(self) -> int:
        return eval_at_one(self)

    def derivative(self) -> LaurentPoly:
        return formal_derivative(self)

    def reduce_mod2(self) -> LaurentPoly:
        return reduce_mod2(self)

    def lift(self) -> LaurentPoly:
        return lift(self)

    # -- printing -----------------------------------------------------
    def to_text(self) -> str:
        return format_poly(self)

    def __repr__(self):
        tag = "gf2" if self._mod2 else "Z"
        return f"LaurentPoly[{tag}]({self.to_text()!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "s" if e == 1 else f"s^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)


S = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def bar(a: LaurentPoly) -> LaurentPoly:
    """The involution s -> s^-1."""
    return LaurentPoly._raw({-e: c for e, c in reversed(a._terms.items())}, a.mod2)


def eval_at_one(a: LaurentPoly) -> int:
    """Coefficient sum; a parity bit for GF(2)-form input."""
    total = sum(a._terms.values())
    return total % 2 if a.mod2 else total


def formal_derivative(a: LaurentPoly) -> LaurentPoly:
    if a.mod2:
        raise RingMismatchError("formal derivative is taken over Z, not on GF(2)-form input")
    return LaurentPoly({e - 1: e * c for e, c in a._terms.items()})


def phi(a: LaurentPoly) -> int:
    """Derivative, then s -> 1, then reduce mod 2.

    Equal to ``sum(e * c) mod 2``.  This only depends on the coefficients
    mod 2, so GF(2)-form input is accepted as well.
    """
    return sum(e * c for e, c in a._terms.items()) % 2


def reduce_mod2(a: LaurentPoly) -> LaurentPoly:
    if a.mod2:
        return a
    return LaurentPoly._raw({e: 1 for e, c in a._terms.items() if c % 2}, True)


def lift(a: LaurentPoly) -> LaurentPoly:
    """GF(2)-form -> Z-form with 0/1 coefficients (identity on Z-form)."""
    if not a.mod2:
        return a
    return LaurentPoly._raw(dict(a._terms), False)


def exact_divide_mod2(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient in GF(2)[s, s^-1].

    Long division from the lowest exponent upward; the quotient is
    re-multiplied against ``den`` before it is returned.
    """
    if not (num.mod2 and den.mod2):
        raise RingMismatchError("exact_divide_mod2 expects GF(2)-form operands")
    if den.is_zero():
        raise DivisorZeroError("division by the zero polynomial")
    if num.is_zero():
        return num
    lo_n, r = num._bits()
    lo_d, dbits = den._bits()
    span = (num.degree - lo_n) - (den.degree - lo_d)
    if span < 0:
        raise NotDivisibleError(f"{num} is not divisible by {den}")
    q = 0
    while r:
        low = (r & -r).bit_length() - 1
        if low > span:
            raise NotDivisibleError(f"{num} is not divisible by {den}")
        q |= 1 << low
        r ^= dbits << low
    quotient = LaurentPoly._from_bits(lo_n - lo_d, q)
    if quotient * den != num:
        raise NotDivisibleError(f"re-multiplication check failed for {num} / {den}")
    return quotient


def parse_poly(text: str, mod2: bool = False) -> LaurentPoly:
    """Parse the ``"exp:coeff, exp:coeff"`` form."""
    if not isinstance(text, str):
        raise ParseError(f"expected polynomial text, got {type(text).__name__}")
    if text.strip() in ("", "0"):
        return LaurentPoly(None, mod2)
    pairs = []
    pos = 0
    for chunk in text.split(","):
        start = pos + len(chunk) - len(chunk.lstrip())
        pos += len(chunk) + 1
        piece = chunk.strip()
        exp_s, sep, coeff_s = piece.partition(":")
        if not sep:
            raise ParseError(f"expected 'exponent:coefficient', got {piece!r}", start)
        try:
            pairs.append((int(exp_s.strip()), int(coeff_s.strip())))
        except ValueError:
            raise ParseError(f"non-integer term {piece!r}", start) from None
    return LaurentPoly(pairs, mod2)


def format_poly(a: LaurentPoly) -> str:
    if a.is_zero():
        return "0"
    return ", ".join(f"{e}:{c}" for e, c in a._terms.items())

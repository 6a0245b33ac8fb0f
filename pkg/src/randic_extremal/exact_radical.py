"""Exact numbers of the form ``sum q_s * sqrt(s)`` with rational ``q_s``.

Radicands are squarefree positive integers.  Square roots of distinct
squarefree integers are linearly independent over the rationals, so a value
is zero exactly when its term map is empty; nonzero signs are certified by
integer interval bounds on each square root.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from numbers import Rational
from typing import Iterable, Mapping, Union

RationalLike = Union[int, Fraction]

START_BITS = 64


@lru_cache(maxsize=4096)
def squarefree_split(p: int) -> tuple[int, int]:
    """Write ``p = s * t**2`` with ``s`` squarefree; returns ``(s, t)``."""
    if p < 1:
        raise ValueError(f"expected a positive integer, got {p}")
    s, t = 1, 1
    rest = p
    f = 2
    while f * f <= rest:
        while rest % (f * f) == 0:
            rest //= f * f
            t *= f
        if rest % f == 0:
            rest //= f
            s *= f
        f += 1
    return s * rest, t


class RadicalValue:
    """Immutable exact value ``sum q_s sqrt(s)``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for s, q in items:
            q = Fraction(q)
            if not q:
                continue
            base, t = squarefree_split(int(s))
            acc[base] = acc.get(base, Fraction(0)) + q * t
        self._terms = tuple((s, q) for s, q in sorted(acc.items()) if q)
        self._hash = None

    @classmethod
    def _raw(cls, terms: tuple[tuple[int, Fraction], ...]) -> RadicalValue:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, q: RationalLike) -> RadicalValue:
        return cls({1: q})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(s == 1 for s, _ in self._terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> RadicalValue:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for s, q in other._terms:
            acc[s] = acc.get(s, Fraction(0)) + q
        return RadicalValue._raw(tuple((s, q) for s, q in sorted(acc.items()) if q))

    __radd__ = __add__

    def __neg__(self) -> RadicalValue:
        return RadicalValue._raw(tuple((s, -q) for s, q in self._terms))

    def __sub__(self, other) -> RadicalValue:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RadicalValue:
        return (-self) + other

    def __mul__(self, other) -> RadicalValue:
        if isinstance(other, (int, Rational)):
            return scale(self, Fraction(other))
        if not isinstance(other, RadicalValue):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for a, p in self._terms:
            for b, q in other._terms:
                g = gcd(a, b)
                s = (a // g) * (b // g)
                acc[s] = acc.get(s, Fraction(0)) + p * q * g
        return RadicalValue((s, q) for s, q in acc.items())

    def __rmul__(self, other) -> RadicalValue:
        return self.__mul__(other)

    def __truediv__(self, other) -> RadicalValue:
        # rational divisors only; the value set is not closed under division
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a RadicalValue by zero")
        return scale(self, 1 / Fraction(other))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __lt__(self, other) -> bool:
        return sign(self - other) < 0

    def __le__(self, other) -> bool:
        return sign(self - other) <= 0

    def __gt__(self, other) -> bool:
        return sign(self - other) > 0

    def __ge__(self, other) -> bool:
        return sign(self - other) >= 0

    def __float__(self) -> float:
        return math.fsum(float(q) * math.sqrt(s) for s, q in self._terms)

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for s, q in self._terms:
            mag = abs(q)
            coef = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if s == 1:
                body = coef
            elif mag == 1:
                body = f"sqrt({s})"
            else:
                body = f"{coef}*sqrt({s})"
            if not parts:
                parts.append(("-" if q < 0 else "") + body)
            else:
                parts.append((" - " if q < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"RadicalValue({str(self)!r})"


def _coerce(x) -> RadicalValue | None:
    if isinstance(x, RadicalValue):
        return x
    if isinstance(x, (int, Rational)):
        return RadicalValue.rational(Fraction(x))
    return None


ZERO = RadicalValue()
ONE = RadicalValue.rational(1)


@lru_cache(maxsize=8192)
def reciprocal_sqrt(p: int) -> RadicalValue:
    """Exact ``1/sqrt(p)``: with ``p = s t^2``, this is ``sqrt(s) / (s t)``."""
    if p < 1:
        raise ValueError(f"reciprocal_sqrt needs p >= 1, got {p}")
    s, t = squarefree_split(p)
    return RadicalValue._raw(((s, Fraction(1, s * t)),))


def sqrt(p: int) -> RadicalValue:
    s, t = squarefree_split(p)
    return RadicalValue._raw(((s, Fraction(t)),))


def add(a: RadicalValue, b: RadicalValue) -> RadicalValue:
    return a + b


def scale(a: RadicalValue, q: RationalLike) -> RadicalValue:
    q = Fraction(q)
    if not q:
        return ZERO
    return RadicalValue._raw(tuple((s, c * q) for s, c in a._terms))


def enclose(a: RadicalValue, bits: int) -> tuple[Fraction, Fraction]:
    """Rational interval ``[lo, hi]`` containing ``a``.

    Each ``sqrt(s)`` is bracketed by ``isqrt(s * 4**bits) / 2**bits`` and the
    next dyadic rational, so the bounds are exact, not floating.
    """
    lo = Fraction(0)
    hi = Fraction(0)
    den = 1 << bits
    for s, q in a._terms:
        if s == 1:
            lo += q
            hi += q
            continue
        r = isqrt(s << (2 * bits))
        low, high = Fraction(r, den), Fraction(r + 1, den)
        if q > 0:
            lo += q * low
            hi += q * high
        else:
            lo += q * high
            hi += q * low
    return lo, hi


def sign(a: RadicalValue) -> int:
    """Certified sign of ``a`` in ``{-1, 0, 1}``."""
    if a.is_zero():
        return 0
    if a.is_rational():
        return 1 if a._terms[0][1] > 0 else -1
    # Each float term carries at most a few ulps of relative error, so a
    # value well clear of the summed error bound already has a certain sign.
    terms = [float(q) * math.sqrt(s) for s, q in a._terms]
    approx = math.fsum(terms)
    if abs(approx) > 1e-12 * math.fsum(abs(t) for t in terms) + 1e-300:
        return 1 if approx > 0 else -1
    bits = START_BITS
    while True:
        lo, hi = enclose(a, bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        # a nonzero value is always separated from 0 eventually
        bits *= 2


def _round_half_away(x: Fraction) -> int:
    n = (abs(x.numerator) * 2 + x.denominator) // (2 * x.denominator)
    return n if x >= 0 else -n


def to_decimal(a: RadicalValue, digits: int) -> str:
    """``a`` correctly rounded to ``digits`` places after the decimal point.

    Rational ties round half away from zero; irrational values never tie.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scale10 = 10 ** digits
    if a.is_rational():
        n = _round_half_away(Fraction(a.terms.get(1, 0)) * scale10)
    else:
        bits = max(START_BITS, int(digits * 3.33) + 16)
        while True:
            lo, hi = enclose(a, bits)
            nlo = _round_half_away(lo * scale10)
            nhi = _round_half_away(hi * scale10)
            if nlo == nhi:
                n = nlo
                break
            bits *= 2
    neg = n < 0
    n = abs(n)
    whole, frac = divmod(n, scale10)
    return f"{'-' if neg and n else ''}{whole}.{frac:0{digits}d}"

"""Exact rationals, the three-way parity split and p-adic valuation.

Rationals are plain :class:`fractions.Fraction` values, which are always
stored reduced with a positive denominator.  Valuations are ``int`` or
``math.inf`` (for zero), so ordinary ``min``/``+``/comparison already
saturate the way the valuation arithmetic needs.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Union

Rational = Fraction
Valuation = Union[int, float]

INF: float = math.inf


class ZeroDenominatorError(ZeroDivisionError, ValueError):
    """Raised when a rational is built with denominator 0."""


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    NONE = "none"

    @property
    def symbol(self) -> str:
        return self.value[0]

    @classmethod
    def from_symbol(cls, s: str) -> "Parity":
        return _BY_SYMBOL[s]

    def __str__(self) -> str:
        return self.value


_BY_SYMBOL = {p.symbol: p for p in Parity}


class ParityOutcome(enum.Enum):
    """A parity-table cell: a concrete class, or ANY when the result depends on the operands."""

    EVEN = "even"
    ODD = "odd"
    NONE = "none"
    ANY = "any"

    @classmethod
    def of(cls, p: Parity) -> "ParityOutcome":
        return cls(p.value)

    def __str__(self) -> str:
        return self.value


def make_rational(m: int, n: int = 1) -> Fraction:
    """Reduced m/n with the sign carried by the numerator."""
    if n == 0:
        raise ZeroDenominatorError(f"zero denominator in {m}/{n}")
    return Fraction(int(m), int(n))


def add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def neg(a: Fraction) -> Fraction:
    return -a


def parity_of_pair(num: int, den: int) -> Parity:
    """Parity of a reduced num/den (den > 0) without building a Fraction."""
    if num & 1 == 0:
        return Parity.EVEN
    return Parity.ODD if den & 1 else Parity.NONE


def classify(q: Fraction) -> Parity:
    """Parity class of q: even (m even), odd (m, n odd) or none (n even).

    >>> classify(Fraction(5)), classify(Fraction(1, 2)), classify(Fraction(0))
    (<Parity.ODD: 'odd'>, <Parity.NONE: 'none'>, <Parity.EVEN: 'even'>)
    """
    return parity_of_pair(q.numerator, q.denominator)


def is_uneven(q: Fraction) -> bool:
    return q.numerator & 1 == 1


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    if p == 2:
        return (n & -n).bit_length() - 1
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def nu(q: Fraction, p: int) -> Valuation:
    """p-adic order of q; ``INF`` for zero.

    p is only checked to be >= 2, primality is up to the caller.
    """
    if p < 2:
        raise ValueError(f"valuation base must be >= 2, got {p}")
    q = Fraction(q)
    if q == 0:
        return INF
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


def nu2(q: Fraction) -> Valuation:
    return nu(q, 2)


_E, _O, _N = ParityOutcome.EVEN, ParityOutcome.ODD, ParityOutcome.NONE
_ANY = ParityOutcome.ANY

ADD_TABLE = {
    (Parity.EVEN, Parity.EVEN): _E,
    (Parity.EVEN, Parity.ODD): _O,
    (Parity.EVEN, Parity.NONE): _N,
    (Parity.ODD, Parity.ODD): _E,
    (Parity.ODD, Parity.NONE): _N,
    (Parity.NONE, Parity.NONE): _ANY,
}

MUL_TABLE = {
    (Parity.EVEN, Parity.EVEN): _E,
    (Parity.EVEN, Parity.ODD): _E,
    (Parity.EVEN, Parity.NONE): _ANY,
    (Parity.ODD, Parity.ODD): _O,
    (Parity.ODD, Parity.NONE): _N,
    (Parity.NONE, Parity.NONE): _N,
}

_ORDER = {Parity.EVEN: 0, Parity.ODD: 1, Parity.NONE: 2}


def _lookup(table: dict, a: Parity, b: Parity) -> ParityOutcome:
    if not (isinstance(a, Parity) and isinstance(b, Parity)):
        raise TypeError("parity tables take concrete Parity values")
    if _ORDER[a] > _ORDER[b]:
        a, b = b, a
    return table[a, b]


def parity_add(a: Parity, b: Parity) -> ParityOutcome:
    """Parity of a sum given the parities of the summands."""
    return _lookup(ADD_TABLE, a, b)


def parity_mul(a: Parity, b: Parity) -> ParityOutcome:
    """Parity of a product given the parities of the factors."""
    return _lookup(MUL_TABLE, a, b)


def parse_rational(text: str) -> Fraction:
    """Parse ``"m/n"`` or ``"m"`` (optionally signed); whitespace is rejected."""
    if not text or text != text.strip() or any(c.isspace() for c in text):
        raise ValueError(f"bad rational literal {text!r}")
    num, sep, den = text.partition("/")
    try:
        m = int(num)
        n = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"bad rational literal {text!r}") from None
    if sep and not den.lstrip("+-").isdigit():
        raise ValueError(f"bad rational literal {text!r}")
    if not num.lstrip("+-").isdigit():
        raise ValueError(f"bad rational literal {text!r}")
    return make_rational(m, n)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"

"""The 2-adic partition of the rationals and the cosets of Q_P.

Q_k holds the rationals of 2-adic order exactly k, Q_K the subgroup of
order >= K (Q_0 = Q_P, the odd-denominator rationals; Q_1 = the even
rationals).  Inside Q_{-k} the cosets of Q_P are named by the dyadic
representatives (2l - 1) / 2^k with 1 <= l <= 2^(k-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .rational import INF, Parity, Valuation, nu2

__all__ = [
    "CosetRep",
    "DyadicForm",
    "ZERO_FORM",
    "level",
    "in_QK",
    "in_QP",
    "dyadic_decompose",
    "coset_equal",
    "coset_witness",
    "coset_rep",
    "coset_reps",
    "dense_witness",
]


@dataclass(frozen=True)
class CosetRep:
    """Representative (2*ell - 1) / 2**k of a coset of Q_P inside Q_{-k}."""

    k: int
    ell: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"coset level k must be >= 1, got {self.k}")
        if not 1 <= self.ell <= 1 << (self.k - 1):
            raise ValueError(f"ell={self.ell} outside [1, 2^{self.k - 1}]")

    @property
    def value(self) -> Fraction:
        return Fraction(2 * self.ell - 1, 1 << self.k)

    def __str__(self) -> str:
        v = self.value
        return f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class DyadicForm:
    """A dyadic rational written as 2**k * (2*ell - 1); zero is ``ZERO_FORM``."""

    k: Valuation
    ell: int

    @property
    def is_zero(self) -> bool:
        return self.k == INF

    @property
    def value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return Fraction(2) ** self.k * (2 * self.ell - 1)


ZERO_FORM = DyadicForm(INF, 0)


def level(q: Fraction) -> Valuation:
    """Index k of the set Q_k containing q (``INF`` for zero)."""
    return nu2(q)


def in_QK(q: Fraction, K: int) -> bool:
    return q == 0 or nu2(q) >= K


def in_QP(q: Fraction) -> bool:
    return in_QK(q, 0)


def dyadic_decompose(q: Fraction) -> Optional[DyadicForm]:
    """Unique (k, ell) with q = 2^k (2 ell - 1), or None if q is not dyadic.

    Negative values come out with ell <= 0.
    """
    q = Fraction(q)
    if q == 0:
        return ZERO_FORM
    den = q.denominator
    if den & (den - 1):
        return None
    k = nu2(q)
    odd = q.numerator >> k if k > 0 else q.numerator
    return DyadicForm(k, (odd + 1) // 2)


def _split(q: Fraction, k: int) -> tuple[int, int]:
    # q = a / (2^k b) with a, b odd, given nu2(q) == -k
    return q.numerator, q.denominator >> k


def coset_witness(q1: Fraction, q2: Fraction) -> Optional[Valuation]:
    """nu2(a1*b2 - a2*b1) for q_i = a_i / (2^k b_i) when both share order -k < 0.

    None when the two orders differ or are not negative.
    """
    v1, v2 = nu2(q1), nu2(q2)
    if v1 != v2 or v1 >= 0:
        return None
    k = -v1
    a1, b1 = _split(Fraction(q1), k)
    a2, b2 = _split(Fraction(q2), k)
    return nu2(Fraction(a1 * b2 - a2 * b1))


def coset_equal(q1: Fraction, q2: Fraction) -> bool:
    """True iff q1 + Q_P == q2 + Q_P."""
    v1, v2 = nu2(q1), nu2(q2)
    if v1 >= 0 or v2 >= 0:
        return v1 >= 0 and v2 >= 0
    if v1 != v2:
        return False
    k = -v1
    a1, b1 = _split(Fraction(q1), k)
    a2, b2 = _split(Fraction(q2), k)
    return (a1 * b2 - a2 * b1) % (1 << k) == 0


def coset_rep(q: Fraction) -> Optional[CosetRep]:
    """The representative q_k^ell with q - q_k^ell in Q_P; None if q is already in Q_P.

    Writing q = n / (2^k m) with n, m odd and s = (n + m) / 2, ell solves
    s = ell * m (mod 2^(k-1)).
    """
    q = Fraction(q)
    v = nu2(q)
    if v >= 0:
        return None
    k = -v
    n, m = _split(q, k)
    s = (n + m) // 2
    modulus = 1 << (k - 1)
    residue = s * pow(m, -1, modulus) % modulus if modulus > 1 else 0
    return CosetRep(k, residue or modulus)


def coset_reps(k: int) -> list[CosetRep]:
    """All 2^(k-1) coset representatives at level -k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return [CosetRep(k, ell) for ell in range(1, (1 << (k - 1)) + 1)]


def dense_witness(target: Fraction, eps: Fraction, cls: Parity) -> Fraction:
    """Some q of parity ``cls`` with |q - target| < eps.

    The denominator is odd (or a power of two for NONE) and exceeds 1/eps;
    the numerator is the nearest integer of the needed parity, so the
    error is at most one over the denominator.
    """
    target, eps = Fraction(target), Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    bound = math.floor(1 / eps) + 1
    if cls is Parity.NONE:
        den = 1 << max(1, (bound - 1).bit_length())
    else:
        den = bound | 1
    r = 0 if cls is Parity.EVEN else 1
    x = target * den
    lo = 2 * math.floor((x - r) / 2) + r
    num = min((lo, lo + 2), key=lambda m: (abs(m - x), abs(m), -m))
    return Fraction(num, den)

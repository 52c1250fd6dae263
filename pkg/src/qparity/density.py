"""Orderings of N and Q, and prefix densities of the parity classes.

Every ordering is a deterministic enumeration.  Densities are reported at
chosen prefix lengths as exact counts and exact Fraction ratios; no float
enters the counting.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from . import trees

__all__ = [
    "Ordering",
    "DensityRow",
    "DensityReport",
    "list_order",
    "list_order_cutoffs",
    "farey",
    "farey_length",
    "f_reorder",
    "h_reorder",
    "full_Q_order",
    "ordering_codes",
    "prefix_counts",
    "density_report",
    "default_checkpoints",
]


class Ordering(enum.Enum):
    NATURAL = "natural-n"
    F_REORDER = "f-reorder"
    H_REORDER = "h-reorder"
    LIST = "list-order"
    FAREY = "farey"
    CW = "cw"
    SB = "sb"
    CW_FULL_Q = "cw-fullq"
    SB_FULL_Q = "sb-fullq"

    @classmethod
    def parse(cls, tag) -> "Ordering":
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).lower())
        except ValueError:
            known = ", ".join(o.value for o in cls)
            raise ValueError(f"unknown ordering {tag!r}; expected one of {known}") from None

    @property
    def is_integer(self) -> bool:
        return self in (Ordering.NATURAL, Ordering.F_REORDER, Ordering.H_REORDER)


# --------------------------------------------------------------------------
# enumerations


def _list_pairs(n_max: Optional[int] = None) -> Iterator[tuple[int, int]]:
    dens = itertools.count(2) if n_max is None else range(2, n_max + 1)
    for n in dens:
        for m in range(1, n):
            if math.gcd(m, n) == 1:
                yield m, n


def list_order(n_max: int) -> list[Fraction]:
    """Rationals in (0, 1) by denominator, then numerator: 1/2, 1/3, 2/3, 1/4, ..."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    return [Fraction(m, n) for m, n in _list_pairs(n_max)]


def list_order_cutoffs(n_max: int) -> list[int]:
    """Prefix lengths of ``list_order`` at which each denominator 2..n_max is complete."""
    ends, total = [], 0
    for n in range(2, n_max + 1):
        total += sum(1 for m in range(1, n) if math.gcd(m, n) == 1)
        ends.append(total)
    return ends


def _farey_pairs(n: int) -> Iterator[tuple[int, int]]:
    # next-term recurrence, starting after 0/1 and stopping before 1/1
    a, b, c, d = 0, 1, 1, n
    while c < d:
        yield c, d
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b


def farey(n: int) -> list[Fraction]:
    """Farey sequence of order n restricted to the open interval (0, 1)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return [Fraction(c, d) for c, d in _farey_pairs(n)]


def farey_length(n: int) -> int:
    """Number of terms of ``farey(n)``, i.e. sum of phi(d) for 2 <= d <= n."""
    if n < 2:
        return 0
    phi = np.arange(n + 1)
    for p in range(2, n + 1):
        if phi[p] == p:
            phi[p::p] -= phi[p::p] // p
    return int(phi[2:].sum())


def _f_iter() -> Iterator[int]:
    for n in itertools.count(1):
        yield 2 * n - 1
        yield 4 * n - 2
        yield 4 * n


def f_reorder(count: int) -> list[int]:
    """N rearranged so every odd number is followed by two evens."""
    if count < 0:
        raise ValueError("count must be >= 0")
    return list(itertools.islice(_f_iter(), count))


def _h_iter() -> Iterator[int]:
    next_even = 2
    for g in itertools.count(1):
        yield 2 * g - 1
        for _ in range(g):
            yield next_even
            next_even += 2


def h_reorder(count: int) -> list[int]:
    """N rearranged so the g-th odd number is followed by the next g unused evens."""
    if count < 0:
        raise ValueError("count must be >= 0")
    return list(itertools.islice(_h_iter(), count))


def full_Q_order(base: Iterable[Fraction], count: int) -> list[Fraction]:
    """0, q1, -q1, q2, -q2, ... from an enumeration of the positive rationals."""
    if count < 0:
        raise ValueError("count must be >= 0")

    def gen():
        yield Fraction(0)
        for q in base:
            q = Fraction(q)
            yield q
            yield -q

    return list(itertools.islice(gen(), count))


# --------------------------------------------------------------------------
# counting


def _pair_codes(pairs: Iterable[tuple[int, int]], count: int) -> np.ndarray:
    # 0 = even, 1 = odd, 2 = none (same coding as the tree automata)
    codes = np.fromiter(
        ((0 if m & 1 == 0 else 1 if n & 1 else 2) for m, n in pairs),
        dtype=np.uint8,
        count=count,
    )
    return codes


def _int_codes(values: Iterable[int], count: int) -> np.ndarray:
    return np.fromiter((v & 1 for v in values), dtype=np.uint8, count=count)


def _full_q_codes(positive: np.ndarray, count: int) -> np.ndarray:
    out = np.empty(count, dtype=np.uint8)
    if count:
        out[0] = 0
        doubled = np.repeat(positive, 2)
        out[1:] = doubled[: count - 1]
    return out


def _farey_order_for(count: int) -> int:
    n = 2
    while farey_length(n) < count:
        n *= 2
    lo, hi = n // 2, n
    while lo < hi:
        mid = (lo + hi) // 2
        if farey_length(mid) >= count:
            hi = mid
        else:
            lo = mid + 1
    return max(hi, 1)


def ordering_codes(ordering, count: int, n_max: Optional[int] = None,
                   cap: int = trees.DEFAULT_CAP) -> np.ndarray:
    """Parity codes (0 even, 1 odd, 2 none) of the first ``count`` elements.

    ``n_max`` fixes the Farey order for ``farey`` (default: the smallest
    order with at least ``count`` terms) and bounds the denominators of
    ``list-order`` (default: unbounded).
    """
    ordering = Ordering.parse(ordering)
    if count < 0:
        raise ValueError("count must be >= 0")
    trees._check_cap(count, cap)
    if ordering is Ordering.NATURAL:
        return _int_codes(range(1, count + 1), count)
    if ordering is Ordering.F_REORDER:
        return _int_codes(itertools.islice(_f_iter(), count), count)
    if ordering is Ordering.H_REORDER:
        return _int_codes(itertools.islice(_h_iter(), count), count)
    if ordering is Ordering.LIST:
        pairs = itertools.islice(_list_pairs(n_max), count)
        return _pair_codes(pairs, count)
    if ordering is Ordering.FAREY:
        order = n_max if n_max is not None else _farey_order_for(count)
        return _pair_codes(itertools.islice(_farey_pairs(order), count), count)
    if ordering is Ordering.CW:
        return _pair_codes(trees.cw_pairs(count, cap), count)
    if ordering is Ordering.SB:
        return _pair_codes(trees.sb_pairs(count, cap), count)
    half = count // 2
    if ordering is Ordering.CW_FULL_Q:
        return _full_q_codes(_pair_codes(trees.cw_pairs(half, cap), half), count)
    if ordering is Ordering.SB_FULL_Q:
        return _full_q_codes(_pair_codes(trees.sb_pairs(half, cap), half), count)
    raise AssertionError(ordering)


def prefix_counts(codes: np.ndarray) -> np.ndarray:
    """Array of shape (len(codes), 3): running (even, odd, none) counts."""
    onehot = np.zeros((len(codes), 3), dtype=np.int64)
    onehot[np.arange(len(codes)), codes] = 1
    return np.cumsum(onehot, axis=0)


@dataclass(frozen=True)
class DensityRow:
    n: int
    even: int
    odd: int
    none: int

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.even, self.odd, self.none

    @property
    def ratios(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(Fraction(c, self.n) for c in self.counts)


@dataclass(frozen=True)
class DensityReport:
    ordering: Ordering
    rows: tuple[DensityRow, ...]

    def final(self) -> DensityRow:
        return self.rows[-1]


def default_checkpoints(count: int) -> list[int]:
    """Powers of two up to ``count``, plus ``count`` itself."""
    points = [1 << i for i in range(count.bit_length()) if 1 << i <= count]
    if count and (not points or points[-1] != count):
        points.append(count)
    return points


def density_report(ordering, count: int, checkpoints: Optional[Sequence[int]] = None,
                   n_max: Optional[int] = None,
                   cap: int = trees.DEFAULT_CAP) -> DensityReport:
    """Class counts and exact ratios among the first n elements, per checkpoint n."""
    ordering = Ordering.parse(ordering)
    if count < 1:
        raise ValueError("count must be >= 1")
    points = default_checkpoints(count) if checkpoints is None else list(checkpoints)
    bad = [c for c in points if not 1 <= c <= count]
    if bad:
        raise ValueError(f"checkpoints outside [1, {count}]: {bad[:5]}")
    codes = ordering_codes(ordering, count, n_max=n_max, cap=cap)
    if len(codes) < count:
        raise ValueError(f"ordering {ordering.value} has only {len(codes)} elements")
    running = prefix_counts(codes)
    rows = tuple(DensityRow(c, *map(int, running[c - 1])) for c in points)
    return DensityReport(ordering, rows)

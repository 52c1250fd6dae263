"""Calkin-Wilf and Stern-Brocot enumerations and their parity automata.

Two routes are kept side by side on purpose: the arithmetic route builds
the actual fractions and classifies them, the symbol route pushes parity
symbols through the transfer rules without touching a single fraction.
The closed-form row patterns are a third, independent description.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

import numpy as np

from .rational import Parity, parity_of_pair

DEFAULT_CAP = 10**8

E, O, N = Parity.EVEN, Parity.ODD, Parity.NONE
_BY_RESIDUE = (E, O, N)

# symbol codes used by the numpy automata
_CODES = {E: 0, O: 1, N: 2}
_SYMBOLS = np.frombuffer(b"eon", dtype=np.uint8)


class CapExceededError(ValueError):
    """A requested enumeration is larger than the configured element cap."""


class _Boundary:
    """The Stern-Brocot right boundary 1/0."""

    numerator = 1
    denominator = 0

    def __repr__(self):
        return "SB_INFINITY"

    def __str__(self):
        return "1/0"


SB_INFINITY = _Boundary()

SBValue = Union[Fraction, _Boundary]


@dataclass(frozen=True)
class SBEntry:
    value: SBValue
    parity: Parity

    @property
    def is_boundary(self) -> bool:
        return self.value is SB_INFINITY

    def __str__(self) -> str:
        v = self.value
        return f"{v.numerator}/{v.denominator}"


def _check_cap(size: int, cap: int) -> None:
    if size > cap:
        raise CapExceededError(f"{size} elements requested, cap is {cap}")


# --------------------------------------------------------------------------
# Calkin-Wilf


def cw_children(q: Fraction) -> tuple[Fraction, Fraction]:
    """Left child m/(m+n) and right child (m+n)/n of m/n."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"Calkin-Wilf nodes are positive, got {q}")
    m, n = q.numerator, q.denominator
    return Fraction(m, m + n), Fraction(m + n, n)


def _cw_pair_rows() -> Iterator[list[tuple[int, int]]]:
    row = [(1, 1)]
    while True:
        yield row
        row = [c for m, n in row for c in ((m, m + n), (m + n, n))]


def cw_row_pairs(r: int, cap: int = DEFAULT_CAP) -> list[tuple[int, int]]:
    if r < 1:
        raise ValueError(f"row index must be >= 1, got {r}")
    _check_cap(1 << (r - 1), cap)
    for i, row in enumerate(_cw_pair_rows(), start=1):
        if i == r:
            return row


def cw_row(r: int, cap: int = DEFAULT_CAP) -> list[Fraction]:
    """Row r of the Calkin-Wilf tree, left to right (row 1 is [1/1])."""
    return [Fraction(m, n) for m, n in cw_row_pairs(r, cap)]


def cw_pairs(count: int, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, int]]:
    """Breadth-first Calkin-Wilf sequence as reduced (num, den) pairs.

    Children of a reduced m/n are reduced, so no gcd is ever taken.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    _check_cap(count, cap)
    left = count
    for row in _cw_pair_rows():
        if left <= 0:
            return
        if len(row) >= left:
            yield from row[:left]
            return
        yield from row
        left -= len(row)


def cw_sequence(count: int, cap: int = DEFAULT_CAP) -> Iterator[Fraction]:
    """First ``count`` Calkin-Wilf terms as Fractions, row by row."""
    for m, n in cw_pairs(count, cap):
        yield Fraction(m, n)


PARITY_TRANSFER = {E: (E, O), O: (N, E), N: (O, N)}

_TRANSFER = np.zeros((3, 2), dtype=np.uint8)
for _p, (_l, _r) in PARITY_TRANSFER.items():
    _TRANSFER[_CODES[_p]] = (_CODES[_l], _CODES[_r])


def parity_transfer(p: Parity) -> tuple[Parity, Parity]:
    """Parities of the (left, right) Calkin-Wilf children of a node of parity p."""
    return PARITY_TRANSFER[p]


def _decode(codes: np.ndarray) -> str:
    return _SYMBOLS[codes].tobytes().decode("ascii")


def _cw_code_rows() -> Iterator[np.ndarray]:
    row = np.array([_CODES[O]], dtype=np.uint8)
    while True:
        yield row
        row = _TRANSFER[row].ravel()


def cw_parity_row(r: int, cap: int = DEFAULT_CAP) -> str:
    """Parity string of CW row r, derived from the transfer rules alone."""
    if r < 1:
        raise ValueError(f"row index must be >= 1, got {r}")
    _check_cap(1 << (r - 1), cap)
    for i, row in enumerate(_cw_code_rows(), start=1):
        if i == r:
            return _decode(row)


def cw_parity_codes(count: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    """First ``count`` CW parity codes (0=e, 1=o, 2=n) via the automaton."""
    if count < 0:
        raise ValueError("count must be >= 0")
    _check_cap(count, cap)
    out = np.empty(count, dtype=np.uint8)
    pos = 0
    for row in _cw_code_rows():
        if pos >= count:
            break
        take = min(len(row), count - pos)
        out[pos:pos + take] = row[:take]
        pos += take
    return out


def cw_parity_symbols(count: int, cap: int = DEFAULT_CAP) -> str:
    return _decode(cw_parity_codes(count, cap))


def cw_row_pattern(r: int) -> str:
    """Closed form of CW row r: odd rows (one)^k o, even rows ne(one)^k.

    Exponents start at 0 for row 1 and go k -> 2k into an even row and
    k -> 4k + 1 into the following odd row.
    """
    if r < 1:
        raise ValueError(f"row index must be >= 1, got {r}")
    k = cw_row_exponents(r)[-1]
    return "one" * k + "o" if r % 2 else "ne" + "one" * k


def cw_row_exponents(r: int) -> list[int]:
    """Closed-form exponent of each of rows 1..r."""
    ks = [0]
    odd_k = 0
    for i in range(2, r + 1):
        if i % 2 == 0:
            ks.append(2 * odd_k)
        else:
            odd_k = 4 * odd_k + 1
            ks.append(odd_k)
    return ks


def cw_parity_at(N: int) -> Parity:
    """Parity of the N-th (1-based) term of the CW sequence."""
    if N < 1:
        raise ValueError(f"positions start at 1, got {N}")
    return _BY_RESIDUE[N % 3]


# --------------------------------------------------------------------------
# Stern-Brocot


def mediant(a: SBValue, b: SBValue) -> Fraction:
    """(m1 + m2) / (n1 + n2), reduced; either argument may be the 1/0 boundary."""
    if a is SB_INFINITY and b is SB_INFINITY:
        raise ValueError("mediant of the boundary with itself is undefined")
    return Fraction(a.numerator + b.numerator, a.denominator + b.denominator)


MEDIANT_PARITY = {
    frozenset((E, O)): N,
    frozenset((O, N)): E,
    frozenset((N, E)): O,
}

# code table; diagonal entries are invalid and flagged with 255
_MEDIANT = np.full((3, 3), 255, dtype=np.uint8)
for _pair, _m in MEDIANT_PARITY.items():
    _a, _b = tuple(_pair)
    _MEDIANT[_CODES[_a], _CODES[_b]] = _MEDIANT[_CODES[_b], _CODES[_a]] = _CODES[_m]


def mediant_parity(a: Parity, b: Parity) -> Parity:
    """Parity of the mediant of two neighbours with distinct parities: the third one."""
    if a == b:
        raise ValueError(f"mediant parity undefined for equal parities ({a})")
    return MEDIANT_PARITY[frozenset((a, b))]


def _sb_pair_levels() -> Iterator[list[tuple[int, int]]]:
    level = [(0, 1), (1, 0)]
    while True:
        yield level
        nxt = [level[0]]
        for (m1, n1), (m2, n2) in zip(level, level[1:]):
            nxt.append((m1 + m2, n1 + n2))
            nxt.append((m2, n2))
        level = nxt


def _sb_value(m: int, n: int) -> SBValue:
    return SB_INFINITY if n == 0 else Fraction(m, n)


def sb_level(k: int, cap: int = DEFAULT_CAP) -> list[SBEntry]:
    """Level k of the Stern-Brocot construction, boundaries included."""
    if k < 0:
        raise ValueError(f"level must be >= 0, got {k}")
    _check_cap((1 << k) + 1, cap)
    for i, lvl in enumerate(_sb_pair_levels()):
        if i == k:
            return [SBEntry(_sb_value(m, n), N if n == 0 else parity_of_pair(m, n))
                    for m, n in lvl]


def _sb_code_levels() -> Iterator[np.ndarray]:
    level = np.array([_CODES[E], _CODES[N]], dtype=np.uint8)
    while True:
        yield level
        mids = _MEDIANT[level[:-1], level[1:]]
        if (mids == 255).any():
            raise AssertionError("equal-parity neighbours in a Stern-Brocot level")
        nxt = np.empty(2 * len(level) - 1, dtype=np.uint8)
        nxt[0::2] = level
        nxt[1::2] = mids
        level = nxt


def sb_parity_level(k: int, cap: int = DEFAULT_CAP) -> str:
    """Parity string of SB level k (boundaries included) from the mediant rule alone."""
    if k < 1:
        raise ValueError(f"level must be >= 1, got {k}")
    _check_cap((1 << k) + 1, cap)
    for i, lvl in enumerate(_sb_code_levels()):
        if i == k:
            return _decode(lvl)


def sb_level_pattern(k: int) -> str:
    """Closed form: (eon)^K, K = (2^k + 1)/3 for odd k; e(noe)^K n, K = (2^k - 1)/3 for even k."""
    if k < 1:
        raise ValueError(f"level must be >= 1, got {k}")
    if k % 2:
        return "eon" * (((1 << k) + 1) // 3)
    return "e" + "noe" * (((1 << k) - 1) // 3) + "n"


def sb_pairs(count: int, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, int]]:
    """Positive rationals in Stern-Brocot order: the new mediants of each level in turn."""
    if count < 0:
        raise ValueError("count must be >= 0")
    _check_cap(count, cap)
    left = count
    levels = _sb_pair_levels()
    next(levels)
    for lvl in levels:
        if left <= 0:
            return
        new = lvl[1::2]
        if len(new) >= left:
            yield from new[:left]
            return
        yield from new
        left -= len(new)


def sb_sequence(count: int, cap: int = DEFAULT_CAP) -> Iterator[Fraction]:
    for m, n in sb_pairs(count, cap):
        yield Fraction(m, n)

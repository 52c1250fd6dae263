import math
from fractions import Fraction

import numpy as np
import pytest

from qparity.density import (
    Ordering, default_checkpoints, density_report, f_reorder, farey, farey_length,
    full_Q_order, h_reorder, list_order, ordering_codes, prefix_counts,
)
from qparity.rational import Parity, classify
from qparity.trees import cw_sequence

F = Fraction

# list order up to denominator 8
LIST_ORDER_8 = [F(*map(int, s.split("/"))) for s in (
    "1/2 1/3 2/3 1/4 3/4 1/5 2/5 3/5 4/5 1/6 5/6 "
    "1/7 2/7 3/7 4/7 5/7 6/7 1/8 3/8 5/8 7/8").split()]


def brute_farey(n):
    return sorted({F(m, d) for d in range(1, n + 1) for m in range(1, d)})


def direct_counts(values):
    tally = {p: 0 for p in Parity}
    for v in values:
        tally[classify(F(v))] += 1
    return tally[Parity.EVEN], tally[Parity.ODD], tally[Parity.NONE]


def test_list_order():
    assert list_order(3) == [F(1, 2), F(1, 3), F(2, 3)]
    assert list_order(4) == [F(1, 2), F(1, 3), F(2, 3), F(1, 4), F(3, 4)]
    assert list_order(8) == LIST_ORDER_8
    with pytest.raises(ValueError):
        list_order(1)


def test_list_order_8_counts():
    # direct classification of the 21 printed fractions
    assert direct_counts(LIST_ORDER_8) == (6, 6, 9)
    row = density_report("list-order", 21, [21], n_max=8).final()
    assert row.counts == (6, 6, 9)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13, 40])
def test_farey_vs_brute(n):
    assert farey(n) == brute_farey(n)
    assert farey_length(n) == len(brute_farey(n))


def test_farey_examples():
    assert farey(3) == [F(1, 3), F(1, 2), F(2, 3)]
    assert farey(5) == [F(1, 5), F(1, 4), F(1, 3), F(2, 5), F(1, 2),
                        F(3, 5), F(2, 3), F(3, 4), F(4, 5)]
    assert farey(1) == []
    with pytest.raises(ValueError):
        farey(0)


@pytest.mark.parametrize("n", [8, 20, 57])
def test_farey_is_sorted_list_order(n):
    f = farey(n)
    assert all(a < b for a, b in zip(f, f[1:]))
    assert f == sorted(list_order(n))


def test_f_reorder():
    assert f_reorder(6) == [1, 2, 4, 3, 6, 8]
    assert f_reorder(9)[6:] == [5, 10, 12]
    seq = f_reorder(3000)
    assert len(set(seq)) == 3000
    assert set(range(1, 2001)) <= set(seq)


def test_h_reorder():
    assert h_reorder(6) == [1, 2, 3, 4, 6, 5]
    assert h_reorder(10) == [1, 2, 3, 4, 6, 5, 8, 10, 12, 7]
    seq = h_reorder(5000)
    assert len(set(seq)) == 5000
    for G in range(1, 60):
        n = G + G * (G + 1) // 2
        assert sum(1 for v in seq[:n] if v % 2 == 0) == G * (G + 1) // 2


def test_full_Q_order():
    assert full_Q_order(cw_sequence(10), 5) == [F(0), F(1), F(-1), F(1, 2), F(-1, 2)]
    assert full_Q_order(cw_sequence(10), 1) == [F(0)]
    qs = full_Q_order(cw_sequence(100), 101)
    for a, b in zip(qs[1::2], qs[2::2]):
        assert a == -b and classify(a) is classify(b)


def test_ordering_parse():
    assert Ordering.parse("F-reorder") is Ordering.F_REORDER
    assert Ordering.parse("natural-N") is Ordering.NATURAL
    assert Ordering.parse("cw-fullQ") is Ordering.CW_FULL_Q
    with pytest.raises(ValueError):
        Ordering.parse("spiral")


@pytest.mark.parametrize("tag, make", [
    ("natural-n", lambda c: range(1, c + 1)),
    ("f-reorder", f_reorder),
    ("h-reorder", h_reorder),
    ("cw", lambda c: list(cw_sequence(c))),
    ("cw-fullq", lambda c: full_Q_order(cw_sequence(c), c)),
    ("list-order", lambda c: list_order(60)[:c]),
])
def test_codes_match_direct_classification(tag, make):
    count = 1000
    codes = ordering_codes(tag, count)
    expected = [{Parity.EVEN: 0, Parity.ODD: 1, Parity.NONE: 2}[classify(F(v))]
                for v in make(count)]
    assert codes.tolist() == expected


def test_density_report_cw():
    rep = density_report("cw", 6, [3, 6])
    for row in rep.rows:
        assert row.counts == (row.n // 3,) * 3
        assert row.ratios == (F(1, 3),) * 3


def test_density_report_natural():
    row = density_report("natural-n", 2000, [2000]).final()
    assert row.ratios[0] == F(1, 2)
    assert row.none == 0


def test_density_report_rows_are_consistent():
    rep = density_report("sb", 5000)
    assert [r.n for r in rep.rows] == default_checkpoints(5000)
    for r in rep.rows:
        assert sum(r.counts) == r.n
        assert sum(r.ratios) == 1


def test_density_report_rejects():
    with pytest.raises(ValueError):
        density_report("cw", 10, [11])
    with pytest.raises(ValueError):
        density_report("nope", 10)


def test_default_checkpoints():
    assert default_checkpoints(1) == [1]
    assert default_checkpoints(10) == [1, 2, 4, 8, 10]
    assert default_checkpoints(16) == [1, 2, 4, 8, 16]


def _spread(tag, count):
    c = prefix_counts(ordering_codes(tag, count))
    n = np.arange(1, count + 1)
    return (c.max(1) - c.min(1)).max(), np.abs(3 * c - n[:, None]).max()


def test_cw_full_q_balance():
    pair, dev = _spread("cw-fullq", 300_000)
    assert pair <= 2
    assert dev <= 3  # |count - n/3| <= 1


def test_sb_balance():
    pair, _ = _spread("sb", 300_000)
    assert pair <= 1


def test_sb_full_q_balance():
    # doubling the positive SB spread of 1 and adding 0 gives 3, reached at n = 11
    pair, _ = _spread("sb-fullq", 300_000)
    assert pair <= 3
    row = density_report("sb-fullq", 11, [11]).final()
    assert row.counts == (5, 4, 2)


def test_density_converges_toward_third():
    for tag in ("sb", "sb-fullq", "cw-fullq"):
        for r in density_report(tag, 300_000, [300_000]).final().ratios:
            assert abs(r - F(1, 3)) < F(1, 10**4)


def test_farey_order_prefixes_reported():
    # no limit is asserted for this ordering
    n = farey_length(50)
    row = density_report("farey", n, [n], n_max=50).final()
    assert row.counts == direct_counts(farey(50))
    assert math.isclose(sum(row.ratios), 1)

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from qparity.partition import (
    ZERO_FORM, CosetRep, coset_equal, coset_rep, coset_reps, dense_witness,
    dyadic_decompose, in_QK, in_QP, coset_witness, level,
)
from qparity.rational import INF, Parity, classify, nu2

from conftest import negative_valuation, rationals

F = Fraction


def oracle_same_coset(q1, q2):
    return in_QP(q1 - q2)


def brute_rep(q):
    k = -nu2(q)
    for ell in range(1, 2 ** (k - 1) + 1):
        if nu2(q - F(2 * ell - 1, 2**k)) >= 0:
            return CosetRep(k, ell)


@pytest.mark.parametrize("q, k", [(F(3, 4), -2), (F(6, 5), 1), (F(0), INF)])
def test_level(q, k):
    assert level(q) == k


@pytest.mark.parametrize("q, K, expected", [
    (F(3, 5), 0, True), (F(1, 2), 0, False), (F(0), 7, True),
    (F(4, 3), 1, True), (F(3), 1, False), (F(1, 4), -2, True), (F(1, 8), -2, False),
])
def test_in_QK(q, K, expected):
    assert in_QK(q, K) is expected


@given(rationals, rationals, st.integers(-6, 6))
def test_subgroup_closure(a, b, K):
    assume(in_QK(a, K) and in_QK(b, K))
    assert in_QK(a - b, K)
    assert in_QK(a + b, K)


@given(st.integers(-6, 6), st.integers(-10**4, 10**4), st.integers(-10**4, 10**4),
       st.integers(0, 10**3), st.integers(0, 40))
def test_subgroup_closure_constructed(K, x, y, b, shift):
    # build two members of Q_K directly so the property is not vacuous
    a1 = F(x) * F(2) ** (K + shift) / (2 * b + 1)
    a2 = F(y) * F(2) ** K / (2 * b + 3)
    assert in_QK(a1, K) and in_QK(a2, K)
    assert in_QK(a1 - a2, K)


@pytest.mark.parametrize("q, k, ell", [
    (F(12), 2, 2), (F(3, 8), -3, 2), (F(-1), 0, 0), (F(1, 2), -1, 1), (F(-6), 1, -1),
])
def test_dyadic_decompose(q, k, ell):
    form = dyadic_decompose(q)
    assert (form.k, form.ell) == (k, ell)
    assert form.value == q


def test_dyadic_special_cases():
    assert dyadic_decompose(F(1, 3)) is None
    assert dyadic_decompose(F(0)) is ZERO_FORM
    assert ZERO_FORM.value == 0


@given(st.integers(-40, 40), st.integers(-10**6, 10**6))
def test_dyadic_round_trip(k, ell):
    q = F(2) ** k * (2 * ell - 1)
    form = dyadic_decompose(q)
    assert (form.k, form.ell) == (k, ell)
    assert form.value == q


@pytest.mark.parametrize("q1, q2, equal", [
    (F(1, 4), F(3, 4), False),
    (F(1, 4), F(5, 4), True),
    (F(1, 2), F(1, 4), False),
    (F(3, 5), F(7), True),
    (F(1, 2), F(3), False),
    (F(-1, 2), F(1, 2), True),
])
def test_coset_equal_examples(q1, q2, equal):
    assert coset_equal(q1, q2) is equal
    assert oracle_same_coset(q1, q2) is equal


def test_coset_witness():
    assert coset_witness(F(1, 4), F(5, 4)) == 2
    assert coset_witness(F(1, 4), F(3, 4)) == 1
    assert coset_witness(F(1, 2), F(1, 4)) is None


@given(rationals, rationals)
def test_coset_equal_matches_subtraction(q1, q2):
    assert coset_equal(q1, q2) == oracle_same_coset(q1, q2)


@given(negative_valuation, negative_valuation)
def test_coset_equal_matches_subtraction_same_level(q1, q2):
    assert coset_equal(q1, q2) == oracle_same_coset(q1, q2)


@given(negative_valuation, negative_valuation)
def test_equal_cosets_share_level(q1, q2):
    if coset_equal(q1, q2):
        assert nu2(q1) == nu2(q2)


@given(negative_valuation, st.integers(-10**5, 10**5), st.integers(0, 10**5))
def test_coset_stays_in_level(q, a, b):
    shifted = q + F(a, 2 * b + 1)
    assert nu2(shifted) == nu2(q)
    assert coset_equal(shifted, q)


@pytest.mark.parametrize("q, k, ell", [
    (F(3, 4), 2, 2), (F(5, 4), 2, 1), (F(1, 6), 1, 1), (F(-1, 4), 2, 2), (F(7, 24), 3, 3),
])
def test_coset_rep_examples(q, k, ell):
    rep = coset_rep(q)
    assert (rep.k, rep.ell) == (k, ell)
    assert in_QP(q - rep.value)
    assert rep == brute_rep(q)


def test_coset_rep_in_QP():
    assert coset_rep(F(3, 5)) is None
    assert coset_rep(F(0)) is None


@given(negative_valuation)
def test_coset_rep_matches_search(q):
    assume(nu2(q) >= -10)
    assert coset_rep(q) == brute_rep(q)


@pytest.mark.parametrize("k, values", [
    (1, [F(1, 2)]),
    (2, [F(1, 4), F(3, 4)]),
    (3, [F(1, 8), F(3, 8), F(5, 8), F(7, 8)]),
])
def test_coset_reps(k, values):
    assert [r.value for r in coset_reps(k)] == values


def test_coset_reps_distinct():
    for k in range(1, 7):
        reps = [r.value for r in coset_reps(k)]
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                assert not coset_equal(a, b)


def test_coset_reps_rejects():
    with pytest.raises(ValueError):
        coset_reps(0)
    with pytest.raises(ValueError):
        CosetRep(2, 3)


@pytest.mark.parametrize("target, eps, cls, expected", [
    (F(0), F(1, 100), Parity.ODD, F(1, 101)),
    (F(1, 2), F(1, 10), Parity.EVEN, F(6, 11)),
    (F(1), F(1, 1000), Parity.NONE, F(1023, 1024)),
])
def test_dense_witness_examples(target, eps, cls, expected):
    q = dense_witness(target, eps, cls)
    assert classify(q) is cls and abs(q - target) < eps
    assert q == expected


@given(rationals, st.builds(F, st.integers(1, 10**4), st.integers(1, 10**6)),
       st.sampled_from(list(Parity)))
def test_dense_witness_contract(target, eps, cls):
    q = dense_witness(target, eps, cls)
    assert classify(q) is cls
    assert abs(q - target) < eps


def test_dense_witness_rejects_nonpositive_eps():
    with pytest.raises(ValueError):
        dense_witness(F(0), F(0), Parity.ODD)

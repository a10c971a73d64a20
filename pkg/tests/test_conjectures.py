import pytest

from exterior_hilbert import intpoly
from exterior_hilbert.bounds import lower_bound
from exterior_hilbert.conjectures import (RefuteVerdict, conjecture61_annihilator, conjecture61_c,
                                          mss_series, refute_conjecture61)

VINBERG_SERIES = [1, 9, 36, 83, 117, 90, 4, 0, 0, 0]


def test_mss_nine_with_three():
    assert mss_series(9, 3, 3) == VINBERG_SERIES


def test_mss_eight_by_hand():
    num = intpoly.add(intpoly.mul(intpoly.monomial(6, 27), [1, 2, 1]), intpoly.binomial_power(8))
    assert mss_series(8) == intpoly.pad(intpoly.divexact(num, [1, 0, 0, 1]), 9)


@pytest.mark.parametrize("n", range(4, 31))
def test_mss_matches_bound(n):
    assert mss_series(n, 1, n // 2) == lower_bound(n, 3).a


def test_mss_inexact_division():
    with pytest.raises(ArithmeticError):
        mss_series(9, 2, 3)


@pytest.mark.parametrize("n,d,i,expected", [
    (21, 11, 5, 0),
    (9, 7, 1, 1),
    (9, 7, 2, 0),
    (7, 5, 1, 1),
])
def test_constant(n, d, i, expected):
    assert conjecture61_c(n, d, i) == expected


def test_constant_needs_odd_degree_at_least_five():
    with pytest.raises(ValueError):
        conjecture61_c(9, 3, 1)


def test_refute_twenty_one_eleven():
    r = refute_conjecture61(21, 11)
    assert r.verdict is RefuteVerdict.REFUTED
    assert r.middle == 5 and r.middle_odd
    assert r.middle_binomial == 20349 and r.middle_binomial_odd
    assert r.conjecture_c == 0
    assert r.bound_c_index == 16
    assert r.predicted_ann[5] == 0 and r.bound_ann[5] == 1


@pytest.mark.parametrize("n,d", [(7, 5), (9, 7)])
def test_small_cases_consistent(n, d):
    r = refute_conjecture61(n, d)
    assert r.verdict is RefuteVerdict.CONSISTENT
    assert r.predicted_ann == r.bound_ann


def test_predicted_annihilator_seven_five():
    # one linear annihilator, as for the generic quintic in seven variables
    assert conjecture61_annihilator(7, 5)[:2] == [0, 1]

import random
from math import comb

import pytest

from conftest import small_form
from exterior_hilbert.certificates import h_form, vinberg_forms
from exterior_hilbert.fields import GF, QQ
from exterior_hilbert.forms import ExteriorForm, parse_form
from exterior_hilbert.series import (ann_mod_ideal_hf, binom, even_minimal_series,
                                     hilbert_series_ann_quotient, hilbert_series_quotient,
                                     lex_compare, rank_profile, truncate_positive)
from exterior_hilbert.sampler import random_form

VINBERG_SERIES = [1, 9, 36, 83, 117, 90, 4, 0, 0, 0]


def test_binom_outside_range():
    assert binom(5, -1) == 0 and binom(5, 6) == 0 and binom(5, 2) == 10


@pytest.mark.parametrize("p,expected", [
    ([1, 3, 2, -1, 4], [1, 3, 2, 0, 0]),
    ([1, 2, 0, 5], [1, 2, 0, 0]),
    ([1, 4, 6, 4, 1], [1, 4, 6, 4, 1]),
])
def test_truncate_positive(p, expected):
    assert truncate_positive(p) == expected


def test_truncate_needs_positive_constant():
    with pytest.raises(ValueError):
        truncate_positive([0, 1])


def test_even_minimal_series():
    # [(1 - t^2)(1 + t)^6] = 1 + 6t + 14t^2 + 14t^3 + 0 ...
    assert even_minimal_series(6, 2) == [1, 6, 14, 14, 0, 0, 0]
    assert even_minimal_series(4, 4) == [1, 4, 6, 4, 0]


def test_vinberg_series():
    f = vinberg_forms()[-1]
    assert hilbert_series_quotient(f).series == VINBERG_SERIES


def test_random_seven_five():
    assert hilbert_series_quotient(random_form(7, 5, seed=1)).series == [1, 7, 21, 35, 35, 20, 1, 0]


@pytest.mark.parametrize("n", [1, 3, 5, 8])
def test_linear_form_gives_one_fewer_variable(n):
    h = hilbert_series_quotient(ExteriorForm.monomial(n, [1])).series
    assert h == [comb(n - 1, i) for i in range(n + 1)]


def test_zero_form_rejected():
    with pytest.raises(ValueError):
        hilbert_series_quotient(ExteriorForm(4, 2))


def test_ann_quotient_examples():
    assert hilbert_series_ann_quotient(ExteriorForm.monomial(3, [1, 2, 3])) == [1, 0, 0, 0]
    assert hilbert_series_ann_quotient(h_form(5, 3))[1] == 4


def test_ann_mod_ideal_vinberg():
    h = ann_mod_ideal_hf(vinberg_forms()[-1])
    # ann(f)_3 is spanned by p1..p4 while (f)_3 is spanned by f alone
    assert h[3] == 3
    assert h == h[::-1]


def test_ann_mod_ideal_rejects_even():
    with pytest.raises(ValueError):
        ann_mod_ideal_hf(h_form(5, 2))


@pytest.mark.parametrize("seed", range(25))
def test_reflection_and_symmetries(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 10)
    d = rng.randint(1, n - 1)
    field = GF(10007) if seed % 3 else QQ
    f = small_form(n, d, rng, field, density=0.6 if seed % 2 else 1.0)
    if f.is_zero:
        return
    fast = hilbert_series_quotient(f).series
    full = hilbert_series_quotient(f, full=True).series
    assert fast == full
    for i in range(d, n + 1):
        assert full[i] == comb(n, i) - comb(n, i - d) + (full[n + d - i] if n + d - i <= n else 0)
    ann_q = hilbert_series_ann_quotient(f, full=True)
    top = n - d
    assert ann_q[:top + 1] == ann_q[:top + 1][::-1]
    if d % 2:
        h = ann_mod_ideal_hf(f, full=True)
        assert h == h[::-1]
    if (n - d) % 2 == 0 and ((n - d) // 2) % 2 == 1:
        mid = (n + d) // 2
        assert (full[mid] - comb(n, mid)) % 2 == 0


def test_only_cheap_half_is_eliminated():
    prof = rank_profile(random_form(9, 3, seed=0))
    assert prof.computed == [0, 1, 2, 3]
    assert prof(4) == prof(2) and prof(7) == 0 and prof(-1) == 0


def test_lex_compare():
    assert lex_compare([1, 7, 21, 34], [1, 7, 21, 33]) == 1
    assert lex_compare([1, 7], [1, 7]) == 0
    assert lex_compare([1, 6, 99], [1, 7, 0]) == -1


def test_parsed_form_over_prime_field():
    f = parse_form("1 1 2 3\n1 4 5 6\n1 7 8 9", 9, field=GF(101))
    h = hilbert_series_quotient(f).series
    assert h[:3] == [1, 9, 36] and h[3] == comb(9, 3) - 1

import pytest

from exterior_hilbert.certificates import (CertificateError, certificate_form,
                                           cyclic_surjectivity_products, cyclic_form,
                                           expected_series, h2d_power_identity, h_form,
                                           is_signed_hat, sum_of_variables, verify_certificate,
                                           vinberg_forms)
from exterior_hilbert.combinatorics import indices
from exterior_hilbert.fields import GF
from exterior_hilbert.forms import parse_form
from exterior_hilbert.maps import rank


def test_h_forms():
    assert len(h_form(3, 3)) == 1
    assert len(h_form(5, 3)) == 10
    assert h_form(4, 2) == parse_form("1 1 2\n1 1 3\n1 1 4\n1 2 3\n1 2 4\n1 3 4", 4)


def test_cyclic_six():
    f = cyclic_form(6)
    expected = parse_form("1 1 2 3\n1 2 3 4\n1 3 4 5\n1 4 5 6\n1 5 6 1\n1 6 1 2", 6)
    assert f == expected
    assert f.coefficient((1, 5, 6)) == 1 and f.coefficient((1, 2, 6)) == 1


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_cyclic_structure(n):
    f = cyclic_form(n)
    assert len(f) == n
    for v in range(1, n + 1):
        assert sum(v in indices(m) for m in f.terms) == n - 3


def test_cyclic_needs_even_n():
    with pytest.raises(CertificateError):
        cyclic_form(7)


def test_vinberg_structure():
    p1, p2, p3, p4, f = vinberg_forms()
    assert p1 == parse_form("1 1 2 3\n1 4 5 6\n1 7 8 9", 9)
    assert sorted(int(c) for c in f.terms.values()) == [1] * 6 + [2] * 6
    assert all(p.wedge(f).is_zero for p in (p1, p2, p3, p4))


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_n_minus_two(n):
    r = verify_certificate("n_minus_2", n)
    assert r.verdict == "PASS" and r.matches_bound
    assert rank(h_form(n, n - 2), 1) == n - 1


def test_n_minus_two_five_series():
    assert verify_certificate("n_minus_2", 5).series == [1, 5, 10, 9, 1, 0]


@pytest.mark.parametrize("n", [6, 8, 10])
def test_cyclic_certificate(n):
    r = verify_certificate("cyclic", n)
    assert r.verdict == "PASS" and r.matches_bound
    assert rank(cyclic_form(n), 1) == n


def test_cyclic_six_series():
    assert verify_certificate("cyclic", 6).series == [1, 6, 15, 19, 9, 0, 0]


@pytest.mark.parametrize("n", [6, 8, 10])
def test_cyclic_surjectivity_products(n):
    for j, _, g in cyclic_surjectivity_products(n):
        assert is_signed_hat(g, j)


def test_vinberg_certificate():
    r = verify_certificate("vinberg9", 9)
    assert r.passed
    assert r.series == [1, 9, 36, 83, 117, 90, 4, 0, 0, 0]
    assert r.extra["kernel_dim_3"] == 4
    assert not r.matches_bound  # the bound has 2 in degree 6


def test_prime_mode_certificate():
    r = verify_certificate("cyclic", 8, GF())
    assert r.passed and r.field == f"GF({2**31 - 1})"


@pytest.mark.parametrize("n,d", [(4, 1), (4, 2), (8, 3), (8, 4), (9, 2)])
def test_h2d_power(n, d):
    assert h2d_power_identity(n, d)


def test_h2d_power_prime_guard():
    with pytest.raises(CertificateError):
        h2d_power_identity(8, 3, GF(3))
    assert h2d_power_identity(8, 3, GF(5))
    assert verify_certificate("h2d_power", 8).passed


def test_even_h_form_series():
    assert expected_series("h_form", 6, 2) == [1, 6, 14, 14, 0, 0, 0]
    assert verify_certificate("h_form", 6, d=2).passed


@pytest.mark.parametrize("n,d", [(5, 3), (6, 3), (7, 5), (8, 5), (9, 3)])
def test_odd_h_form_killed_by_sum_of_variables(n, d):
    assert sum_of_variables(n).wedge(h_form(n, d)).is_zero


def test_bad_parameters():
    with pytest.raises(CertificateError):
        certificate_form("n_minus_2", 6)
    with pytest.raises(CertificateError):
        certificate_form("vinberg9", 8)
    with pytest.raises(ValueError):
        verify_certificate("nonsense", 5)

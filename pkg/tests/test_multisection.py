import pytest

from exterior_hilbert.multisection import (alternating_trisection, multisection_closed,
                                           multisection_degrees, multisection_direct, parity_lemma)


def test_closed_examples():
    assert multisection_closed(8) == [0] * 6 + [27, 54, 27]
    assert multisection_closed(7) == [0] * 6 + [27, 27]


@pytest.mark.parametrize("n,i,expected", [(8, 6, 27), (8, 7, 54), (7, 5, 0)])
def test_direct_examples(n, i, expected):
    assert multisection_direct(n, i) == expected


def test_direct_rejects_out_of_range():
    with pytest.raises(ValueError):
        multisection_direct(8, 3)


@pytest.mark.parametrize("n", range(4, 41))
def test_closed_equals_direct(n):
    closed = multisection_closed(n)
    for i in multisection_degrees(n):
        assert (closed[i] if i < len(closed) else 0) == multisection_direct(n, i)


def test_trisection_identity():
    assert alternating_trisection(12) == 486 == 2 * 3 ** 5


@pytest.mark.parametrize("ell,value,unsigned", [(1, 5, 5), (2, 83, 85)])
def test_parity_lemma_examples(ell, value, unsigned):
    r = parity_lemma(ell)
    assert (r.value, r.unsigned, r.odd) == (value, unsigned, True)


@pytest.mark.parametrize("ell", range(1, 21))
def test_parity_lemma(ell):
    r = parity_lemma(ell)
    assert r.odd and r.identity_holds

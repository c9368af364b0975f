from itertools import permutations

import pytest
from hypothesis import assume, given, strategies as st

from posortho.periods import (
    UnsupportedArityError,
    critical_length_2,
    critical_length_3,
    gcd_all,
    inclusion_exclusion_length,
    normalize,
    pqr_decompose,
)

pos = st.integers(1, 200)


def test_gcd_all():
    assert gcd_all([26, 24, 9]) == 1
    assert gcd_all([35, 21, 15]) == 1
    assert gcd_all([30, 42, 70, 105]) == 1
    assert gcd_all([12, 18]) == 6
    with pytest.raises(ValueError):
        gcd_all([])


def test_normalize_examples():
    ps = normalize([4, 8, 13])
    assert ps.scale == 1 and ps.normalized == (4, 8, 13)
    assert ps.pairwise_gcds == {(0, 1): 4, (1, 2): 1, (0, 2): 1}

    ps = normalize([6, 10])
    assert ps.scale == 2 and ps.normalized == (3, 5)

    ps = normalize([35, 21, 15])
    assert ps.scale == 1
    assert ps.pairwise_gcds == {(0, 1): 7, (1, 2): 3, (0, 2): 5}
    assert ps.critical_length == 57


def test_normalize_four_fills_triples():
    ps = normalize([105, 70, 42, 30])
    assert ps.triple_gcds == {(0, 1, 2): 7, (0, 1, 3): 5, (0, 2, 3): 3, (1, 2, 3): 2}
    assert ps.critical_length == 162
    assert normalize([3, 5, 7]).triple_gcds == {}


def test_normalize_rejects_bad_input():
    with pytest.raises(UnsupportedArityError):
        normalize([])
    with pytest.raises(UnsupportedArityError):
        normalize([1, 2, 3, 4, 5])
    with pytest.raises(ValueError):
        normalize([0, 4])
    with pytest.raises(ValueError):
        normalize([3, -1])


def test_critical_length_3_examples():
    assert critical_length_3(35, 21, 15) == 57
    assert critical_length_3(26, 24, 9) == 54
    assert critical_length_3(1, 1, 1) == 1


def test_pqr_examples():
    d = pqr_decompose(normalize([35, 21, 15]), 2)
    assert (d.p, d.q, d.r, d.alpha, d.beta) == (1, 5, 3, 7, 7)
    d = pqr_decompose(normalize([26, 24, 9]), 2)
    assert (d.p, d.q, d.r, d.alpha, d.beta) == (3, 1, 3, 26, 8)
    d = pqr_decompose(normalize([4, 8, 13]), 2)
    assert (d.p, d.q, d.r) == (13, 1, 1)


def test_pqr_other_distinguished_index():
    # T3 role played by 35; T1, T2 roles by 21, 15 in stored order
    d = pqr_decompose(normalize([35, 21, 15]), 0)
    assert (d.q, d.r, d.p, d.alpha, d.beta) == (7, 5, 1, 3, 3)
    with pytest.raises(UnsupportedArityError):
        pqr_decompose(normalize([3, 5]))


@given(st.lists(pos, min_size=1, max_size=4))
def test_rescale_round_trip(ts):
    ps = normalize(ts)
    assert ps.rescale() == tuple(ts)
    assert gcd_all(ps.normalized) == 1
    assert ps.critical_length >= min(ps.normalized)


@given(pos, pos, pos, st.sampled_from([0, 1, 2]))
def test_pqr_invariants(a, b, c, idx):
    from math import gcd

    ps = normalize([a, b, c])
    d = pqr_decompose(ps, idx)
    assert d.p * d.q * d.r == ps.normalized[idx]
    assert gcd(d.q, d.r) == gcd(d.alpha, d.p * d.r) == gcd(d.beta, d.p * d.q) == 1


@given(pos, pos, pos)
def test_critical_length_symmetric(a, b, c):
    ps = normalize([a, b, c])
    values = {critical_length_3(*perm) for perm in permutations(ps.normalized)}
    assert len(values) == 1


@given(pos, pos, st.integers(1, 10), st.permutations(range(3)))
def test_divisor_collapses_to_pair(a, b, k, order):
    base = (a, b, a * k)
    ts = normalize([base[i] for i in order]).normalized
    for i, j in permutations(range(3), 2):
        if ts[j] % ts[i] == 0:
            rest = [ts[m] for m in range(3) if m != i]
            assert critical_length_3(*ts) == critical_length_2(*rest)


@given(st.lists(st.integers(1, 40), min_size=1, max_size=4))
def test_length_matches_inclusion_exclusion(ts):
    ps = normalize(ts)
    assert ps.critical_length == inclusion_exclusion_length(ps.normalized)

import pytest
from hypothesis import given, strategies as st

from posortho.polynomial import (
    ONE,
    ZERO,
    DivisibilityError,
    IntPolynomial,
    exact_div,
    geometric_quotient,
    mul,
    residue_class_sums,
)

P = IntPolynomial.from_list
polys = st.lists(st.integers(-20, 20), max_size=12).map(P)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_trailing_zeros_stripped():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).is_zero()
    assert P([0, 0]).degree is None
    assert P([3, 0, 5]).degree == 2


def test_mul_examples():
    assert mul(P([1, 1]), P([1, 1, 1])) == P([1, 2, 2, 1])
    p = P([3, -1, 4])
    assert mul(p, ONE) == p
    assert mul(p, ZERO) == ZERO


def test_exact_div_examples():
    one_minus = IntPolynomial.one_minus_x_pow
    assert exact_div(one_minus(6), one_minus(3)) == P([1, 0, 0, 1])
    num = mul(one_minus(1), one_minus(6))
    den = mul(one_minus(2), one_minus(3))
    assert exact_div(num, den) == P([1, -1, 1])
    assert exact_div(P([1, 1]), P([1, 1])) == ONE


def test_exact_div_rejects_remainder():
    with pytest.raises(DivisibilityError):
        exact_div(P([1, 0, 1]), P([1, 1]))
    with pytest.raises(DivisibilityError):
        exact_div(P([1, 1]), P([1, 0, 1]))
    with pytest.raises(DivisibilityError):
        exact_div(P([1, 1]), P([1, 2]))
    with pytest.raises(ZeroDivisionError):
        exact_div(ONE, ZERO)


def test_geometric_quotient_examples():
    assert geometric_quotient(3, 2) == P([1, 0, 1, 0, 1])
    assert geometric_quotient(1, 7) == ONE
    assert geometric_quotient(4, 1) == P([1, 1, 1, 1])
    with pytest.raises(ValueError):
        geometric_quotient(0, 2)


def test_residue_class_sums_examples():
    p = P([1, 2, 2, 1])
    assert residue_class_sums(p, 2) == [3, 3]
    assert residue_class_sums(p, 3) == [2, 2, 2]
    assert residue_class_sums(ONE, 4) == [1, 0, 0, 0]


@given(polys, nonzero_polys)
def test_div_mul_round_trip(a, b):
    assert exact_div(mul(a, b), b) == a


@given(st.integers(1, 30), st.integers(1, 30))
def test_geometric_quotient_identity(a, b):
    g = geometric_quotient(a, b)
    assert mul(g, IntPolynomial.one_minus_x_pow(b)) == IntPolynomial.one_minus_x_pow(a * b)
    assert g.degree == (a - 1) * b
    assert set(g.coeffs) <= {0, 1}


@given(polys, st.integers(1, 15))
def test_residue_sums_total(p, m):
    sums = residue_class_sums(p, m)
    assert len(sums) == m
    assert sum(sums) == p(1)
    assert residue_class_sums(p, 1) == [p(1)]


@given(polys, polys)
def test_mul_degree(a, b):
    c = mul(a, b)
    if a.is_zero() or b.is_zero():
        assert c.is_zero()
    else:
        assert c.degree == a.degree + b.degree

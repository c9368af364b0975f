"""Construction of the orthogonal step functions h1 .. h4.

A step function that is constant on [k, k+1) with value c_k is identified with
the polynomial sum(c_k x**k).  In that picture every h_n is a quotient of
products of binomials 1 - x**k, where k runs over the periods and the gcds of
their subsets.  All construction happens on normalized periods (total gcd 1);
the common gcd of the original periods is carried as the step width.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd

from .periods import (
    InternalConsistencyError,
    PeriodSet,
    PqrDecomposition,
    normalize,
    pqr_decompose,
)
from .polynomial import (
    IntPolynomial,
    exact_div,
    geometric_quotient,
    mul,
    product,
)

_binom = IntPolynomial.one_minus_x_pow


@dataclass(frozen=True)
class StepProfile:
    step_width: int
    values: tuple[int, ...]
    periods: PeriodSet

    def __post_init__(self):
        if not self.values or self.values[0] == 0 or self.values[-1] == 0:
            raise InternalConsistencyError(
                f"profile must be nonzero on its first and last steps: {self.values!r}"
            )

    def __len__(self):
        return len(self.values)

    @property
    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.values)

    def unit_values(self) -> tuple[int, ...]:
        """Values on steps of width 1 in the original units."""
        return tuple(v for v in self.values for _ in range(self.step_width))


@dataclass(frozen=True)
class CoeffSequence:
    a: tuple[int, ...]
    decomposition: PqrDecomposition

    def __len__(self):
        return len(self.a)


# -- polynomials on normalized periods -------------------------------------


def h1_polynomial(t1: int) -> IntPolynomial:
    return geometric_quotient(t1, 1)


def h2_polynomial(t1: int, t2: int) -> IntPolynomial:
    g = gcd(t1, t2)
    return mul(geometric_quotient(t2 // g, g), geometric_quotient(t1, 1))


def h3_polynomial(t1: int, t2: int, t3: int) -> IntPolynomial:
    """Symmetric form prod(1 - x**Ti) / prod(1 - x**gij); needs gcd(t1, t2, t3) == 1."""
    num = product(_binom(t) for t in (t1, t2, t3))
    den = product(_binom(gcd(a, b)) for a, b in combinations((t1, t2, t3), 2))
    return exact_div(num, den)


def h3_polynomial_chain(t1: int, t2: int, t3: int) -> IntPolynomial:
    """Q * P2 with t3 as the distinguished period (second, asymmetric route)."""
    dec = pqr_decompose(normalize((t1, t2, t3)), 2)
    q_poly = IntPolynomial(coeff_by_division(dec).a)
    return mul(q_poly, h2_polynomial(t1, t2))


def h4_polynomial(t1: int, t2: int, t3: int, t4: int) -> IntPolynomial:
    ts = (t1, t2, t3, t4)

    def g(*idx):
        return gcd(*(ts[i] for i in idx))

    num = [_binom(t) for t in ts]
    num += [_binom(g(*s)) for s in combinations(range(4), 3)]
    den = [_binom(1)]
    den += [_binom(g(*s)) for s in combinations(range(4), 2)]
    den.append(_binom(g(0, 1, 2, 3)))

    poly = product(num)
    for d in den:
        poly = exact_div(poly, d)
    return poly


@lru_cache(maxsize=4096)
def _cached_profile_polynomial(normalized: tuple[int, ...]) -> IntPolynomial:
    builders = {1: h1_polynomial, 2: h2_polynomial, 3: h3_polynomial, 4: h4_polynomial}
    try:
        build = builders[len(normalized)]
    except KeyError:
        raise ValueError(f"no construction for {len(normalized)} periods") from None
    return build(*normalized)


def profile_polynomial(normalized) -> IntPolynomial:
    return _cached_profile_polynomial(tuple(normalized))


def _profile(pset: PeriodSet, poly: IntPolynomial) -> StepProfile:
    if len(poly) != pset.critical_length:
        raise InternalConsistencyError(
            f"support length {len(poly)} differs from critical length {pset.critical_length}"
        )
    return StepProfile(pset.scale, poly.coeffs, pset)


# -- public builders --------------------------------------------------------


def build_h1(t1: int) -> StepProfile:
    pset = normalize((t1,))
    return _profile(pset, h1_polynomial(*pset.normalized))


def build_h2(t1: int, t2: int) -> StepProfile:
    pset = normalize((t1, t2))
    return _profile(pset, h2_polynomial(*pset.normalized))


def build_h3(t1: int, t2: int, t3: int) -> StepProfile:
    pset = normalize((t1, t2, t3))
    return _profile(pset, h3_polynomial(*pset.normalized))


def build_h3_chain(t1: int, t2: int, t3: int) -> StepProfile:
    pset = normalize((t1, t2, t3))
    return _profile(pset, h3_polynomial_chain(*pset.normalized))


def build_h4(t1: int, t2: int, t3: int, t4: int) -> StepProfile:
    pset = normalize((t1, t2, t3, t4))
    return _profile(pset, profile_polynomial(pset.normalized))


def build(periods) -> StepProfile:
    """Dispatch on the number of periods (1 to 4)."""
    pset = normalize(periods)
    return _profile(pset, profile_polynomial(pset.normalized))


# -- the coefficient sequence a_j of h3 = sum a_j h2(t - j) ----------------


def coeff_by_division(dec: PqrDecomposition) -> CoeffSequence:
    """Coefficients of (1-x)(1-x**pqr) / ((1-x**q)(1-x**r))."""
    p, q, r = dec.p, dec.q, dec.r
    num = mul(_binom(1), _binom(p * q * r))
    den = mul(_binom(q), _binom(r))
    quot = exact_div(num, den)
    if quot.degree != dec.support_end:
        raise InternalConsistencyError(f"Q has degree {quot.degree}, expected {dec.support_end}")
    return CoeffSequence(quot.coeffs, dec)


def representation_count(k: int, q: int, r: int) -> int:
    """Number of pairs (l, m) of nonnegative integers with l*q + m*r == k."""
    if k < 0:
        return 0
    return sum(1 for m in range(k // r + 1) if (k - m * r) % q == 0)


def coeff_closed_form(dec: PqrDecomposition) -> CoeffSequence:
    p, q, r = dec.p, dec.q, dec.r
    end = dec.support_end
    if q == 1:
        a = tuple(1 if j % r == 0 else 0 for j in range(p * r - r + 1))
    elif r == 1:
        a = tuple(1 if j % q == 0 else 0 for j in range(p * q - q + 1))
    else:
        n = [representation_count(k, q, r) for k in range(end + 1)]
        a = tuple(n[j] - (n[j - 1] if j else 0) for j in range(end + 1))
    if len(a) != end + 1:
        raise InternalConsistencyError(f"sequence has {len(a)} terms, expected {end + 1}")
    return CoeffSequence(a, dec)


# -- run-length form of h2 --------------------------------------------------


def h2_block_profile(t1: int, t2: int) -> list[tuple[int, int]]:
    """Run-length form of h2 in unit steps, as (value, run length) pairs.

    Needs gcd(t1, t2) < t2 < t1.  With d = gcd and m = t2 / d the runs are
    1^d 2^d ... (m-1)^d m^(t1 - t2 + d) (m-1)^d ... 1^d.
    """
    d = gcd(t1, t2)
    if not t2 < t1:
        raise ValueError(f"need T2 < T1, got T2={t2}, T1={t1}")
    if not d < t2:
        raise ValueError(f"need gcd(T1, T2) < T2, got gcd={d}, T2={t2}")
    m = t2 // d
    up = [(v, d) for v in range(1, m)]
    return up + [(m, t1 - t2 + d)] + up[::-1]


def expand_blocks(blocks) -> tuple[int, ...]:
    return tuple(v for v, count in blocks for _ in range(count))

"""Arithmetic on tuples of integer periods.

Periods are kept in the order the user gave them.  Everything downstream
works on the *normalized* periods, i.e. the periods divided by their common
gcd; the common gcd becomes the width of one step of the orthogonal function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd

MAX_ARITY = 4


class UnsupportedArityError(ValueError):
    pass


class InternalConsistencyError(AssertionError):
    """An identity that must hold by construction failed; this is a bug."""


def gcd_all(values) -> int:
    values = list(values)
    if not values:
        raise ValueError("gcd_all needs at least one value")
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"values must be positive integers, got {v!r}")
    return reduce(gcd, values)


def critical_length_3(t1: int, t2: int, t3: int) -> int:
    """Critical length for three periods with total gcd 1.

    Inclusion-exclusion over the gcds: T1+T2+T3 - g12 - g23 - g13 + 1.
    """
    return t1 + t2 + t3 - gcd(t1, t2) - gcd(t2, t3) - gcd(t1, t3) + 1


def critical_length_2(t1: int, t2: int) -> int:
    return t1 + t2 - gcd(t1, t2)


def inclusion_exclusion_length(periods) -> int:
    """Alternating sum of gcds over all nonempty subsets of the periods.

    Not used to define any critical length; it is the candidate closed form
    that tests compare against the degree of the constructed polynomial.
    """
    total = 0
    for k in range(1, len(periods) + 1):
        sign = 1 if k % 2 else -1
        for sub in combinations(periods, k):
            total += sign * reduce(gcd, sub)
    return total


@dataclass(frozen=True)
class PeriodSet:
    periods: tuple[int, ...]
    scale: int
    normalized: tuple[int, ...]
    # keys are 0-based index pairs (i, j) with i < j
    pairwise_gcds: dict[tuple[int, int], int] = field(compare=False)
    # filled for n == 4 only; keys are sorted 0-based index triples
    triple_gcds: dict[tuple[int, int, int], int] = field(compare=False)
    critical_length: int

    @property
    def n(self) -> int:
        return len(self.periods)

    @property
    def critical_length_original(self) -> int:
        """Critical length in the units of the input periods."""
        return self.critical_length * self.scale

    def gcd_of(self, indices) -> int:
        return reduce(gcd, (self.normalized[i] for i in indices))

    def rescale(self) -> tuple[int, ...]:
        return tuple(t * self.scale for t in self.normalized)


def _check_periods(periods) -> tuple[int, ...]:
    periods = tuple(periods)
    if not 1 <= len(periods) <= MAX_ARITY:
        raise UnsupportedArityError(
            f"between 1 and {MAX_ARITY} periods are supported, got {len(periods)}"
        )
    for t in periods:
        if isinstance(t, bool) or not isinstance(t, int) or t < 1:
            raise ValueError(f"periods must be positive integers, got {t!r}")
    return periods


def normalize(periods) -> PeriodSet:
    periods = _check_periods(periods)
    g = gcd_all(periods)
    norm = tuple(t // g for t in periods)
    n = len(norm)
    pairs = {(i, j): gcd(norm[i], norm[j]) for i, j in combinations(range(n), 2)}
    triples = {}
    if n == 4:
        triples = {s: reduce(gcd, (norm[i] for i in s)) for s in combinations(range(n), 3)}

    if n == 3:
        length = critical_length_3(*norm)
    else:
        # the builder owns the n = 1, 2, 4 lengths: degree of the product + 1
        from .builder import profile_polynomial

        length = len(profile_polynomial(norm))

    return PeriodSet(
        periods=periods,
        scale=g,
        normalized=norm,
        pairwise_gcds=pairs,
        triple_gcds=triples,
        critical_length=length,
    )


@dataclass(frozen=True)
class PqrDecomposition:
    distinguished_index: int
    p: int
    q: int
    r: int
    alpha: int
    beta: int

    @property
    def support_end(self) -> int:
        """Last index of the coefficient sequence, pqr - q - r + 1."""
        return self.p * self.q * self.r - self.q - self.r + 1


def pqr_decompose(pset: PeriodSet, distinguished_index: int = 2) -> PqrDecomposition:
    """Split the distinguished period as p*q*r against the other two.

    With the distinguished period T3 and the other two (in stored order)
    T1, T2:  q = gcd(T1, T3),  r = gcd(T2, T3),  T3 = p*q*r,
    T1 = alpha*q,  T2 = beta*r.
    """
    if pset.n != 3:
        raise UnsupportedArityError(f"pqr decomposition needs 3 periods, got {pset.n}")
    if distinguished_index not in (0, 1, 2):
        raise ValueError(f"distinguished_index must be 0, 1 or 2, got {distinguished_index}")
    t1, t2 = (t for i, t in enumerate(pset.normalized) if i != distinguished_index)
    t3 = pset.normalized[distinguished_index]
    q = gcd(t1, t3)
    r = gcd(t2, t3)
    p, rem = divmod(t3, q * r)
    if rem:
        raise InternalConsistencyError(f"q*r = {q * r} does not divide {t3}")
    alpha, beta = t1 // q, t2 // r
    if not (gcd(q, r) == gcd(alpha, p * r) == gcd(beta, p * q) == 1):
        raise InternalConsistencyError(
            f"coprimality fails for p={p}, q={q}, r={r}, alpha={alpha}, beta={beta}"
        )
    return PqrDecomposition(distinguished_index, p, q, r, alpha, beta)

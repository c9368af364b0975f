"""Brute-force verification of the constructed profiles.

A profile c_0 .. c_{L-1} on unit steps is orthogonal to every nonconstant
T-periodic exponential on (0, L) iff the sums of c_k over the residue classes
of k mod T are all equal.  For a set of periods this is the linear system

    S_r(c) - S_0(c) = 0,   r = 1 .. T-1,  for every period T,

with integer coefficients in {-1, 0, 1}.  The oracle solves it exactly, one
unknown at a time, and never looks at the product formulas in the builder.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from .periods import PeriodSet, normalize
from .polynomial import IntPolynomial, residue_class_sums


@dataclass(frozen=True)
class PeriodCheck:
    period: int
    sums: tuple[int, ...]
    passed: bool


@dataclass(frozen=True)
class OrthoReport:
    period_checks: tuple[PeriodCheck, ...]
    minimal_length: int | None = None
    nullspace_dimension: int | None = None
    oracle_profile: tuple[int, ...] | None = None

    @property
    def passed(self) -> bool:
        return all(pc.passed for pc in self.period_checks)

    @property
    def found(self) -> bool:
        return self.minimal_length is not None


def _as_period_set(periods) -> PeriodSet:
    return periods if isinstance(periods, PeriodSet) else normalize(periods)


def check_periods(values, periods) -> tuple[PeriodCheck, ...]:
    poly = IntPolynomial(tuple(values))
    checks = []
    for t in periods:
        sums = residue_class_sums(poly, t)
        checks.append(PeriodCheck(t, tuple(sums), len(set(sums)) == 1))
    return tuple(checks)


def verify_orthogonality(profile) -> OrthoReport:
    """Residue-class-sum check of a built profile against its own normalized periods."""
    return OrthoReport(check_periods(profile.values, profile.periods.normalized))


def constraint_column(k: int, periods) -> list[int]:
    """Column k of the system S_r - S_0 = 0 (rows grouped by period, r = 1 .. T-1)."""
    col = []
    for t in periods:
        block = [0] * (t - 1)
        res = k % t
        if res == 0:
            block = [-1] * (t - 1)
        else:
            block[res - 1] = 1
        col.extend(block)
    return col


def _primitive(vec: list[int], combo: list[int]) -> None:
    g = reduce(gcd, vec, 0)
    g = reduce(gcd, combo, g)
    if g > 1:
        vec[:] = [v // g for v in vec]
        combo[:] = [c // g for c in combo]


class ColumnEliminator:
    """Fraction-free Gaussian elimination fed one column at a time.

    Each incoming column is reduced against the pivots found so far while a
    record is kept of which original columns it is a combination of.  A column
    that reduces to zero exposes a new vector in the nullspace of the leading
    columns, so the nullspace dimension for L unknowns is simply the number of
    such columns among the first L.
    """

    def __init__(self, periods):
        self.periods = tuple(periods)
        self.n_cols = 0
        self.dependent = []  # (column index, combination over columns 0..index)
        self._pivots = []  # (row, reduced column, combination)

    def add_column(self) -> list[int] | None:
        k = self.n_cols
        self.n_cols += 1
        vec = constraint_column(k, self.periods)
        combo = [0] * k + [1]
        for row, pvec, pcombo in self._pivots:
            x = vec[row]
            if x == 0:
                continue
            p = pvec[row]
            vec = [p * v - x * w for v, w in zip(vec, pvec)]
            padded = pcombo + [0] * (len(combo) - len(pcombo))
            combo = [p * c - x * d for c, d in zip(combo, padded)]
            _primitive(vec, combo)
        for row, v in enumerate(vec):
            if v:
                self._pivots.append((row, vec, combo))
                return None
        self.dependent.append((k, combo))
        return combo

    def nullspace_dimension(self) -> int:
        return len(self.dependent)


def canonical_integer_vector(vec) -> tuple[int, ...]:
    """Divide out the content and make the first nonzero entry positive."""
    vec = list(vec)
    g = reduce(gcd, vec, 0)
    if g == 0:
        return tuple(vec)
    first = next(v for v in vec if v)
    if first < 0:
        g = -g
    return tuple(v // g for v in vec)


def nullspace_dimension(periods, length: int) -> int:
    """Dimension of the space of unit-step profiles of the given length
    orthogonal to all the periods."""
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    elim = ColumnEliminator(_as_period_set(periods).normalized)
    for _ in range(length):
        elim.add_column()
    return elim.nullspace_dimension()


def minimal_orthogonal(periods, l_max: int) -> OrthoReport:
    """Smallest length admitting a nonzero orthogonal profile, scanning L = 1, 2, ...

    If nothing is found up to l_max the report has minimal_length None.
    """
    pset = _as_period_set(periods)
    norm = pset.normalized
    if l_max < max(norm):
        raise ValueError(f"l_max must be at least the largest period {max(norm)}, got {l_max}")
    elim = ColumnEliminator(norm)
    for length in range(1, l_max + 1):
        combo = elim.add_column()
        if combo is not None:
            profile = canonical_integer_vector(combo)
            return OrthoReport(
                period_checks=check_periods(profile, norm),
                minimal_length=length,
                nullspace_dimension=elim.nullspace_dimension(),
                oracle_profile=profile,
            )
    return OrthoReport(period_checks=())


def positive_multiple(a, b) -> bool:
    """True iff a == lam * b for some rational lam > 0."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b) or not a:
        return False
    return canonical_integer_vector(a) == canonical_integer_vector(b) and _same_lead_sign(a, b)


def _same_lead_sign(a, b) -> bool:
    fa = next((v for v in a if v), 0)
    fb = next((v for v in b if v), 0)
    return fa * fb > 0


@dataclass(frozen=True)
class CrossCheck:
    orthogonality: OrthoReport
    oracle: OrthoReport
    agree: bool


def cross_check(profile, l_max: int | None = None) -> CrossCheck:
    """Compare a built profile with the oracle's minimal solution."""
    norm = profile.periods.normalized
    if l_max is None:
        l_max = max(len(profile.values), max(norm))
    ortho = verify_orthogonality(profile)
    oracle = minimal_orthogonal(profile.periods, l_max)
    agree = (
        ortho.passed
        and oracle.found
        and oracle.minimal_length == len(profile.values)
        and oracle.nullspace_dimension == 1
        and positive_multiple(profile.values, oracle.oracle_profile)
    )
    return CrossCheck(ortho, oracle, agree)

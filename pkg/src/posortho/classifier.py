"""Sign classification of step profiles and the arithmetic sign criteria."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import reduce
from itertools import combinations
from math import gcd

from .periods import normalize


class SignClass(str, Enum):
    STRICTLY_POSITIVE = "strictly_positive"
    NONNEGATIVE_WITH_ZEROS = "nonnegative_with_zeros"
    MIXED_SIGN = "mixed_sign"

    def __str__(self):
        return self.value


def classify_values(values) -> SignClass:
    values = list(values)
    if not any(values):
        raise ValueError("cannot classify the zero profile")
    first = next(v for v in values if v)
    if first < 0:
        values = [-v for v in values]
    if all(v > 0 for v in values):
        return SignClass.STRICTLY_POSITIVE
    if all(v >= 0 for v in values):
        return SignClass.NONNEGATIVE_WITH_ZEROS
    return SignClass.MIXED_SIGN


def classify(profile) -> SignClass:
    """Sign class of a profile, after flipping it so that it starts positive."""
    return classify_values(profile.values)


def is_palindrome(profile) -> bool:
    values = getattr(profile, "values", profile)
    values = tuple(values)
    return values == values[::-1]


@dataclass(frozen=True)
class PairCondition:
    indices: tuple[int, int]
    periods: tuple[int, int]
    gcd: int
    # "coprime", "divides" (gcd equals the smaller period) or "strictly_between"
    clause: str


@dataclass(frozen=True)
class SignPrediction:
    sign_class: SignClass
    pairs: tuple[PairCondition, ...]

    @property
    def witness(self) -> PairCondition | None:
        """First pair breaking 1 < gcd < min, if any."""
        for pc in self.pairs:
            if pc.clause != "strictly_between":
                return pc
        return None


def predict_h3(t1: int, t2: int, t3: int) -> SignPrediction:
    norm = normalize((t1, t2, t3)).normalized
    pairs = []
    for i, j in combinations(range(3), 2):
        a, b = norm[i], norm[j]
        g = gcd(a, b)
        if g == min(a, b):
            # checked first: for a pair containing 1, gcd is both 1 and the min
            clause = "divides"
        elif g == 1:
            clause = "coprime"
        else:
            clause = "strictly_between"
        pairs.append(PairCondition((i, j), (a, b), g, clause))
    if all(pc.clause == "strictly_between" for pc in pairs):
        sign = SignClass.NONNEGATIVE_WITH_ZEROS
    else:
        sign = SignClass.STRICTLY_POSITIVE
    return SignPrediction(sign, tuple(pairs))


def predict_h3_sign(t1: int, t2: int, t3: int) -> SignClass:
    """h3 has a zero step iff 1 < gcd(Ti, Tj) < min(Ti, Tj) for every pair.

    Tested on the periods divided by their common gcd.  h3 never changes sign,
    so MIXED_SIGN is never returned.
    """
    return predict_h3(t1, t2, t3).sign_class


@dataclass(frozen=True)
class Prop71Witness:
    triples: tuple[tuple[int, ...], tuple[int, ...]]
    pairs: tuple[tuple[int, ...], tuple[int, ...]]
    gcds: tuple[int, int]


def prop71_hypothesis(t1: int, t2: int, t3: int, t4: int) -> Prop71Witness | None:
    """Search for two distinct 3-subsets and two distinct 2-subsets of the
    periods whose gcds agree crosswise: gcd(S1) == gcd(P1), gcd(S2) == gcd(P2).

    Returns the first witness (0-based index subsets) or None.
    """
    ts = (t1, t2, t3, t4)

    def g(idx):
        return reduce(gcd, (ts[i] for i in idx))

    triples = list(combinations(range(4), 3))
    pairs = list(combinations(range(4), 2))
    for s1 in triples:
        for s2 in triples:
            if s1 == s2:
                continue
            for p1 in pairs:
                if g(s1) != g(p1):
                    continue
                for p2 in pairs:
                    if p1 != p2 and g(s2) == g(p2):
                        return Prop71Witness((s1, s2), (p1, p2), (g(s1), g(s2)))
    return None


def prop72_family(a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    """(abc, abd, acd, bcd) for pairwise coprime 1 < a < b < c < d."""
    if not 1 < a < b < c < d:
        raise ValueError(f"need 1 < a < b < c < d, got {(a, b, c, d)}")
    named = dict(a=a, b=b, c=c, d=d)
    for (n1, v1), (n2, v2) in combinations(named.items(), 2):
        if gcd(v1, v2) != 1:
            raise ValueError(f"{n1}={v1} and {n2}={v2} are not coprime (gcd {gcd(v1, v2)})")
    return (a * b * c, a * b * d, a * c * d, b * c * d)

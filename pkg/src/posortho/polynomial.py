# Dense polynomials with exact integer coefficients.
#
# A polynomial is stored as a tuple of coefficients, lowest degree first:
# (1, 2, 1) is 1 + 2x + x**2.  Trailing zeros are always stripped, so the
# zero polynomial is the empty tuple.

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class DivisibilityError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {c!r}")
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def from_list(cls, coeffs: Iterable[int]) -> IntPolynomial:
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * power + (coeff,))

    @classmethod
    def one_minus_x_pow(cls, k: int) -> IntPolynomial:
        """1 - x**k, for k >= 1."""
        if k < 1:
            raise ValueError(f"exponent must be >= 1, got {k}")
        return cls((1,) + (0,) * (k - 1) + (-1,))

    @property
    def degree(self) -> int | None:
        """Index of the leading coefficient, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return IntPolynomial(tuple(res))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return mul(self, other)

    def __floordiv__(self, other: IntPolynomial) -> IntPolynomial:
        return exact_div(self, other)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))


def mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.is_zero() or b.is_zero():
        return ZERO
    bs = b.coeffs
    res = [0] * (len(a.coeffs) + len(bs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(bs):
            if bj:
                res[i + j] += ai * bj
    return IntPolynomial(tuple(res))


def exact_div(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Quotient of num by den, which must divide it exactly over the integers.

    Raises DivisibilityError if any step needs a non-integer quotient
    coefficient or if the remainder is nonzero.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return ZERO
    d = den.degree
    lead = den.coeffs[-1]
    rem = list(num.coeffs)
    if len(rem) - 1 < d:
        raise DivisibilityError(f"{den!r} does not divide {num!r}")
    quot = [0] * (len(rem) - d)
    dcs = den.coeffs
    for k in range(len(quot) - 1, -1, -1):
        top = rem[k + d]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r:
            raise DivisibilityError(f"{den!r} does not divide {num!r}")
        quot[k] = c
        for i, di in enumerate(dcs):
            if di:
                rem[k + i] -= c * di
    if any(rem):
        raise DivisibilityError(f"{den!r} does not divide {num!r}: nonzero remainder")
    return IntPolynomial(tuple(quot))


def geometric_quotient(a: int, b: int) -> IntPolynomial:
    """(1 - x**(a*b)) / (1 - x**b) = 1 + x**b + ... + x**((a-1)*b)."""
    if a < 1 or b < 1:
        raise ValueError(f"a and b must be positive, got a={a}, b={b}")
    cs = [0] * ((a - 1) * b + 1)
    for k in range(a):
        cs[k * b] = 1
    return IntPolynomial(tuple(cs))


def residue_class_sums(p: IntPolynomial, m: int) -> list[int]:
    """Sums of the coefficients of p over each residue class of the exponent mod m."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    sums = [0] * m
    for k, c in enumerate(p.coeffs):
        sums[k % m] += c
    return sums


def product(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    acc = ONE
    for p in polys:
        acc = mul(acc, p)
    return acc

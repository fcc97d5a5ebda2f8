"""Lucky-count generating polynomials and exact expectations.

The distribution of lucky cars over a family on n cars is carried by a
polynomial in the marker q whose k-th coefficient counts members with
exactly k lucky cars.  Expectations are exact rationals; the large-n
linear approximations live in asymptotic_expectation.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .counting import count, fibonacci, fubini
from .families import Family


class QPolynomial:
    """Polynomial in q; coeffs[k] multiplies q**k.

    Coefficients are ints or Fractions.  Instances are immutable and
    normalized (no trailing zeros), so equal polynomials compare and
    hash equal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = tuple(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, QPolynomial)
                       else QPolynomial((-other,)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPolynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        out = QPolynomial((1,))
        for _ in range(exponent):
            out = out * self
        return out

    def divexact(self, divisor: "QPolynomial") -> "QPolynomial":
        """Exact division in the rationals; raises if a remainder is left."""
        if not isinstance(divisor, QPolynomial) or not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        lead = Fraction(divisor.coeffs[-1])
        d = divisor.degree
        out = [Fraction(0)] * max(len(rem) - d, 0)
        for top in range(len(rem) - 1, d - 1, -1):
            c = Fraction(rem[top]) / lead
            out[top - d] = c
            if c:
                for j, b in enumerate(divisor.coeffs):
                    rem[top - d + j] -= c * b
        if any(rem[:d]):
            raise ValueError(f"{self} not divisible by {divisor}")
        return QPolynomial(out)

    def derivative(self) -> "QPolynomial":
        return QPolynomial(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def __call__(self, value):
        out = 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def _term(self, k: int, c) -> str:
        mag = c if c > 0 else -c
        if k == 0:
            body = str(mag)
        else:
            q = "q" if k == 1 else f"q^{k}"
            if mag == 1:
                body = q
            elif isinstance(mag, Fraction) and mag.denominator != 1:
                body = f"({mag}){q}"
            else:
                body = f"{mag}{q}"
        return body

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            parts.append((sign, self._term(k, c)))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"QPolynomial({self.coeffs!r})"


Q = QPolynomial((0, 1))
ONE = QPolynomial((1,))


def lucky_poly(family: Family, n: int) -> QPolynomial:
    """Generating polynomial of the family by number of lucky cars."""
    if n < 0:
        raise ValueError("negative n")
    if family in (Family.FR, Family.UPF, Family.UFR):
        return QPolynomial(tuple(count(family, n, k) for k in range(n + 1)))
    if family in (Family.FR_INC, Family.UPF_INC):
        return Q * (Q + 1) ** (n - 1) if n else ONE
    if family is Family.UFR_INC:
        prev, cur = ONE, Q
        if n == 0:
            return prev
        for _ in range(n - 1):
            prev, cur = cur, Q * (cur + prev)
        return cur
    raise ValueError(f"no lucky polynomial for {family.value}")


def gessel_seo_poly(n: int) -> QPolynomial:
    """Lucky distribution of all parking functions on n cars:
    q * prod_{i=1}^{n-1} (i + (n-i+1) q), taken as 1 when n = 0.
    """
    if n < 0:
        raise ValueError("negative n")
    if n == 0:
        return ONE
    out = Q
    for i in range(1, n):
        out = out * QPolynomial((i, n - i + 1))
    return out


def fibonacci_poly(n: int, x):
    """Evaluate sum_k x^k C(n-k, k) by the two-step recurrence."""
    if n < 0:
        raise ValueError("negative index")
    prev = cur = 1
    for _ in range(n - 1):
        prev, cur = cur, cur + x * prev
    return cur


@lru_cache(maxsize=None)
def ufr_weight(n: int) -> int:
    """sum_k 2^k C(k, n-k); equals 2^n / n! times the unit Fubini total."""
    if n < 0:
        raise ValueError("negative index")
    if n <= 1:
        return n + 1
    return 2 * ufr_weight(n - 1) + 2 * ufr_weight(n - 2)


@lru_cache(maxsize=None)
def ufr_lucky_weight(n: int) -> int:
    """sum_k 2^k k C(k, n-k); 2^n / n! times the lucky total over the family.

    Satisfies 2(m+2)(m-1) w(m) + (2m^2-10) w(m+1) = (m-2)(m+1) w(m+2);
    the m = 2 instance has a vanishing right side, so the seeds run
    through n = 4 and the recurrence applies from m >= 3 with an exact
    division.
    """
    if n < 0:
        raise ValueError("negative index")
    seeds = (0, 2, 10, 40, 144)
    if n < len(seeds):
        return seeds[n]
    m = n - 2
    numerator = (2 * (m + 2) * (m - 1) * ufr_lucky_weight(m)
                 + (2 * m * m - 10) * ufr_lucky_weight(m + 1))
    denominator = (m - 2) * (m + 1)
    assert numerator % denominator == 0
    return numerator // denominator


def expectation(family: Family, n: int) -> Fraction:
    """Average number of lucky cars over the family on n cars."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if family in (Family.FR, Family.UPF):
        weighted = sum(k * count(Family.FR, n, k) for k in range(1, n + 1))
        return Fraction(weighted, fubini(n))
    if family in (Family.FR_INC, Family.UPF_INC):
        return Fraction(n + 1, 2)
    if family is Family.UFR:
        return Fraction(ufr_lucky_weight(n), ufr_weight(n))
    if family is Family.UFR_INC:
        weighted = sum(k * math.comb(k, n - k) for k in range(1, n + 1))
        return Fraction(weighted, fibonacci(n + 1))
    raise ValueError(f"no expectation for {family.value}")


def asymptotic_expectation(family: Family, n: int) -> float:
    """Large-n linear approximation of the expectation."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if family in (Family.FR, Family.UPF):
        return n / (2 * math.log(2))
    if family in (Family.FR_INC, Family.UPF_INC):
        return (n + 1) / 2
    if family is Family.UFR:
        r3 = math.sqrt(3)
        return (3 * (2 + r3) * n + r3) / (3 * (3 + r3))
    if family is Family.UFR_INC:
        r5 = math.sqrt(5)
        return ((5 + r5) * n + r5 - 1) / 10
    raise ValueError(f"no expectation for {family.value}")

"""Truncated exponential generating functions, exact in x and q.

A TruncatedEGF stores ordinary coefficients of x^m (so products are plain
convolutions); the count package for n cars is recovered as n! times the
x^n coefficient, a polynomial in q over exact rationals.  Every closed
form is expanded here and checked coefficientwise against the counting
module; nothing is trusted to floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .counting import count, total
from .families import Family
from .polynomials import ONE, Q, QPolynomial


def _as_qpoly(value) -> QPolynomial:
    if isinstance(value, QPolynomial):
        return value
    return QPolynomial((Fraction(value),))


class TruncatedEGF:
    """Series in x modulo x^(order+1) with QPolynomial coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise ValueError("negative order")
        coeffs = [_as_qpoly(c) for c in coeffs][:order + 1]
        coeffs += [QPolynomial()] * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedEGF is immutable")

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedEGF":
        return cls([_as_qpoly(value)], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedEGF":
        return cls([QPolynomial(), ONE], order)

    def coefficient(self, m: int) -> QPolynomial:
        """Ordinary coefficient of x^m."""
        if not 0 <= m <= self.order:
            raise IndexError(f"order {self.order} series has no x^{m} term")
        return self.coeffs[m]

    def counts(self, n: int) -> QPolynomial:
        """n! times the x^n coefficient: the q-polynomial of counts."""
        return self.coefficient(n) * factorial(n)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _align(self, other) -> int:
        return min(self.order, other.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedEGF):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QPolynomial)):
            other = TruncatedEGF.constant(other, self.order)
        if not isinstance(other, TruncatedEGF):
            return NotImplemented
        order = self._align(other)
        return TruncatedEGF(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedEGF([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QPolynomial)):
            other = TruncatedEGF.constant(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPolynomial)):
            scale = _as_qpoly(other)
            return TruncatedEGF([c * scale for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedEGF):
            return NotImplemented
        order = self._align(other)
        out = [QPolynomial() for _ in range(order + 1)]
        for i, a in enumerate(self.coeffs[:order + 1]):
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedEGF(out, order)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedEGF":
        """Multiplicative inverse; the constant term must be a nonzero
        rational, independent of q."""
        c0 = self.coeffs[0]
        if c0.degree > 0 or not c0:
            raise ValueError("constant term must be a nonzero scalar")
        inv0 = Fraction(1) / Fraction(c0.coefficient(0))
        out = [QPolynomial((inv0,))]
        for m in range(1, self.order + 1):
            acc = QPolynomial()
            for j in range(1, m + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * out[m - j]
            out.append(acc * -inv0)
        return TruncatedEGF(out, self.order)

    def exp(self) -> "TruncatedEGF":
        """e to this series; requires a zero constant term."""
        if self.coeffs[0]:
            raise ValueError("exp needs a zero constant term")
        out = [ONE]
        for m in range(1, self.order + 1):
            acc = QPolynomial()
            for j in range(1, m + 1):
                if self.coeffs[j]:
                    acc = acc + (self.coeffs[j] * j) * out[m - j]
            out.append(acc * Fraction(1, m))
        return TruncatedEGF(out, self.order)

    def derivative(self) -> "TruncatedEGF":
        """d/dx, one order shorter."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        return TruncatedEGF(
            [c * m for m, c in enumerate(self.coeffs)][1:], self.order - 1)

    def divide_coefficients(self, divisor: QPolynomial) -> "TruncatedEGF":
        """Divide every x^m coefficient by a q-polynomial, exactly."""
        return TruncatedEGF([c.divexact(divisor) for c in self.coeffs],
                            self.order)

    def __repr__(self):
        shown = ", ".join(f"x^{m}: {c}" for m, c in enumerate(self.coeffs))
        return f"TruncatedEGF(order={self.order}, {shown})"


class EGFIdentity(Enum):
    FR = "fr"
    FR_TOTAL = "fr-total"
    FR_INC = "frinc"
    FR_INC_TOTAL = "frinc-total"
    UFR = "ufr"
    UFR_TOTAL = "ufr-total"
    UFR_INC = "ufrinc"


DEFAULT_ORDER = 12


def egf_expand(identity: EGFIdentity, order: int = DEFAULT_ORDER) -> TruncatedEGF:
    """Expand the identity's closed form to the requested truncation."""
    x = TruncatedEGF.x(order)
    if identity is EGFIdentity.FR:
        # 1/(1 - (e^x - 1) q)
        return (1 - (x.exp() - 1) * Q).reciprocal()
    if identity is EGFIdentity.FR_TOTAL:
        # 1/(2 - e^x)
        return (2 - x.exp()).reciprocal()
    if identity is EGFIdentity.FR_INC:
        # (1 + q e^{(1+q)x}) / (1+q), the numerator divisible termwise
        numerator = 1 + (x * QPolynomial((1, 1))).exp() * Q
        return numerator.divide_coefficients(QPolynomial((1, 1)))
    if identity is EGFIdentity.FR_INC_TOTAL:
        # (1 + e^{2x}) / 2
        return (1 + (x * 2).exp()) * Fraction(1, 2)
    if identity is EGFIdentity.UFR:
        # 1/(1 - q(x + x^2/2))
        return (1 - (x + x * x * Fraction(1, 2)) * Q).reciprocal()
    if identity is EGFIdentity.UFR_TOTAL:
        # 1/(1 - x - x^2/2)
        return (1 - x - x * x * Fraction(1, 2)).reciprocal()
    if identity is EGFIdentity.UFR_INC:
        # coefficient recurrence s_n = q (s_{n-1} + s_{n-2}), s_0 = 1, s_1 = q
        polys = [ONE, Q]
        while len(polys) <= order:
            polys.append(Q * (polys[-1] + polys[-2]))
        return TruncatedEGF(
            [p * Fraction(1, factorial(m)) for m, p in enumerate(polys)],
            order)
    raise ValueError(f"unknown identity {identity!r}")


_IDENTITY_FAMILY = {
    EGFIdentity.FR: (Family.FR, False),
    EGFIdentity.FR_TOTAL: (Family.FR, True),
    EGFIdentity.FR_INC: (Family.FR_INC, False),
    EGFIdentity.FR_INC_TOTAL: (Family.FR_INC, True),
    EGFIdentity.UFR: (Family.UFR, False),
    EGFIdentity.UFR_TOTAL: (Family.UFR, True),
    EGFIdentity.UFR_INC: (Family.UFR_INC, False),
}


def expected_counts(identity: EGFIdentity, n: int) -> QPolynomial:
    """What n! [x^n] of the identity must equal, from the counting module."""
    family, totals = _IDENTITY_FAMILY[identity]
    if totals:
        return QPolynomial((total(family, n),))
    return QPolynomial(tuple(count(family, n, k) for k in range(n + 1)))


@dataclass(frozen=True)
class EGFReport:
    identity: EGFIdentity
    order: int
    ok: bool
    mismatches: tuple[tuple[int, str, str], ...]


def egf_verify(identity: EGFIdentity, order: int = DEFAULT_ORDER) -> EGFReport:
    """Compare the expansion against exact counts for every n <= order."""
    series = egf_expand(identity, order)
    mismatches = []
    for n in range(order + 1):
        actual = series.counts(n)
        expected = expected_counts(identity, n)
        if actual != expected:
            mismatches.append((n, str(expected), str(actual)))
    return EGFReport(identity, order, not mismatches, tuple(mismatches))

"""
Truncated power series with exact rational coefficients, and the series
expansions the surgery formula produces: a Gaussian factor times the
Alexander polynomial evaluated on an exponential.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable

from .laurent_poly import LaurentPoly


class NonzeroConstantTerm(ValueError):
    """exp of a series needs a vanishing constant term."""


class OrderExceeded(ValueError):
    """A coefficient beyond the truncation order was requested."""


class FractionalExponent(ValueError):
    """The closed-form power of 2 is not an integer for this topology."""


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class PowerSeries:
    """
    A power series in s truncated at s^order, coefficients exact Fractions.

    >>> PowerSeries(3, [1, 2]).coeff(1)
    Fraction(2, 1)
    >>> (PowerSeries(2, [1, 1]) * PowerSeries(2, [1, -1])).coeffs
    (Fraction(1, 1), Fraction(0, 1), Fraction(-1, 1))
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, order: int, coeffs: Iterable[Fraction | int] = ()):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    def coeff(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("negative power")
        if k > self.order:
            raise OrderExceeded(f"coefficient of s^{k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def __add__(self, other: PowerSeries | int | Fraction) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            other = PowerSeries(self.order, [other])
        order = min(self.order, other.order)
        return PowerSeries(order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: PowerSeries | int | Fraction) -> PowerSeries:
        return self + (-other if isinstance(other, PowerSeries) else PowerSeries(self.order, [-Fraction(other)]))

    def __mul__(self, other: PowerSeries | int | Fraction) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            return PowerSeries(self.order, [c * other for c in self.coeffs])
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return PowerSeries(order, out)

    __rmul__ = __mul__

    @staticmethod
    def exponential(alpha: Fraction | int, power: int, order: int) -> PowerSeries:
        """
        exp(alpha * s^power) truncated at s^order, built from factorials.

        >>> PowerSeries.exponential(1, 2, 4).coeffs
        (Fraction(1, 1), Fraction(0, 1), Fraction(1, 1), Fraction(0, 1), Fraction(1, 2))
        """
        if power < 1:
            raise ValueError("exponent power must be >= 1")
        alpha = Fraction(alpha)
        out = [Fraction(0)] * (order + 1)
        term = Fraction(1)
        m = 0
        while m * power <= order:
            out[m * power] = term
            m += 1
            term = term * alpha / m
        return PowerSeries(order, out)


def ps_exp(a: PowerSeries) -> PowerSeries:
    """
    exp of a series with zero constant term, by the derivative recurrence
    b_n = (1/n) * sum_k k a_k b_(n-k).

    >>> ps_exp(PowerSeries(4, [0, 0, 1])) == PowerSeries.exponential(1, 2, 4)
    True
    """
    if a.coeffs[0] != 0:
        raise NonzeroConstantTerm("exp needs a(0) = 0")
    b = [Fraction(1)] + [Fraction(0)] * a.order
    for n in range(1, a.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if a.coeffs[k] != 0:
                acc += k * a.coeffs[k] * b[n - k]
        b[n] = acc / n
    return PowerSeries(a.order, b)


def donaldson_series_xk(
    delta: LaurentPoly, q_h: Fraction | int, f_h: Fraction | int, order: int
) -> PowerSeries:
    """
    The surgered-manifold series evaluated on a single homology class h:
    exp(s^2 Q(h)/2) * sum over Laurent degrees k of delta of
    delta_k * exp(2 k (F.h) s).

    >>> donaldson_series_xk(LaurentPoly(-1, (-1, 3, -1)), 0, 1, 4).coeffs
    (Fraction(1, 1), Fraction(0, 1), Fraction(-4, 1), Fraction(0, 1), Fraction(-4, 3))
    >>> donaldson_series_xk(LaurentPoly(0, (1,)), 2, 0, 4).coeffs
    (Fraction(1, 1), Fraction(0, 1), Fraction(1, 1), Fraction(0, 1), Fraction(1, 2))
    """
    gauss = PowerSeries.exponential(Fraction(q_h) / 2, 2, order)
    total = PowerSeries(order)
    for pos, c in enumerate(delta.coeffs):
        if c == 0:
            continue
        k = delta.min_deg + pos
        total = total + PowerSeries.exponential(2 * k * Fraction(f_h), 1, order) * c
    return gauss * total


def witten_coefficient(euler: int, signature: int, sw: int) -> Fraction:
    """
    The closed-form normalization 2^(2 + (7*euler + 11*signature)/4) * sw;
    the exponent must be an integer.

    >>> witten_coefficient(24, -16, 1)
    Fraction(1, 1)
    >>> witten_coefficient(4, 0, 1)
    Fraction(512, 1)
    """
    num = 7 * euler + 11 * signature
    if num % 4 != 0:
        raise FractionalExponent(f"(7*chi + 11*sigma)/4 = {num}/4 is not an integer")
    e = 2 + num // 4
    if e >= 0:
        return Fraction(sw * 2**e)
    return Fraction(sw, 2**-e)


def extract_qk(series: PowerSeries, d: int) -> Fraction:
    """
    Read the degree-d invariant off the series: (d/2)! times the coefficient
    of s^(d/2).

    >>> extract_qk(PowerSeries.exponential(1, 2, 4), 4)
    Fraction(2, 1)
    """
    if d < 0 or d % 2 != 0:
        raise ValueError(f"dimension must be a nonnegative even integer, got {d}")
    half = d // 2
    coeff = series.coeff(half)  # raises OrderExceeded past the truncation
    fact = 1
    for m in range(2, half + 1):
        fact *= m
    return coeff * fact

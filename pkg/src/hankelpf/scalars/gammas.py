"""Exact gamma values at integer and half-integer points, and q-gamma.

Gamma values are carried as (rational coefficient) * (sqrt pi)^e so that
products and quotients of the closed-form evaluations stay exact; for
all-integer inputs e is 0 and the value is a plain factorial ratio.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import (DivisionByZero, IncompatibleTags, PoleAtQEqualsOne,
                      UnsupportedArgument)
from .poly import RATIONAL_TYPES, _frac


class HalfGamma:
    """coeff * (sqrt pi)^pi_half_power."""

    __slots__ = ("coeff", "pi_half_power")

    def __init__(self, coeff, pi_half_power: int = 0):
        self.coeff = _frac(coeff)
        self.pi_half_power = pi_half_power

    def __mul__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return HalfGamma(self.coeff * other, self.pi_half_power)
        if isinstance(other, HalfGamma):
            return HalfGamma(self.coeff * other.coeff,
                             self.pi_half_power + other.pi_half_power)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            if other == 0:
                raise DivisionByZero("division by zero")
            return HalfGamma(self.coeff / other, self.pi_half_power)
        if isinstance(other, HalfGamma):
            if other.coeff == 0:
                raise DivisionByZero("division by zero gamma value")
            return HalfGamma(self.coeff / other.coeff,
                             self.pi_half_power - other.pi_half_power)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return HalfGamma(_frac(other), 0).__truediv__(self)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, HalfGamma):
            return (self.coeff == other.coeff
                    and (self.pi_half_power == other.pi_half_power
                         or self.coeff == 0))
        if isinstance(other, RATIONAL_TYPES):
            return self.pi_half_power == 0 and self.coeff == other
        return NotImplemented

    __hash__ = None

    def to_fraction(self) -> Fraction:
        if self.pi_half_power != 0 and self.coeff != 0:
            raise IncompatibleTags(
                f"value carries (sqrt pi)^{self.pi_half_power}")
        return self.coeff

    def numeric(self) -> float:
        return float(self.coeff) * math.pi ** (self.pi_half_power / 2)

    def __repr__(self):
        return f"HalfGamma({self.coeff!r}, {self.pi_half_power})"

    def __str__(self):
        if self.pi_half_power == 0 or self.coeff == 0:
            return str(self.coeff)
        return f"{self.coeff}*sqrtpi^{self.pi_half_power}"


def gamma_exact(x) -> HalfGamma:
    """Gamma(x) for positive x with denominator 1 or 2.

    Gamma(n) = (n-1)!; Gamma(n + 1/2) = ((2n)! / (4^n n!)) * sqrt(pi).
    """
    x = _frac(x)
    if x <= 0:
        raise UnsupportedArgument(f"gamma_exact needs x > 0, got {x}")
    if x.denominator == 1:
        return HalfGamma(math.factorial(x.numerator - 1), 0)
    if x.denominator == 2:
        n = (x.numerator - 1) // 2  # x = n + 1/2
        return HalfGamma(Fraction(math.factorial(2 * n),
                                  4 ** n * math.factorial(n)), 1)
    raise UnsupportedArgument(f"gamma_exact needs half-integer x, got {x}")


def q_gamma_int(n: int, q):
    """Gamma_q(n+1) = (q;q)_n / (1-q)^n, computed division-free.

    Equals the product of the q-brackets [j]_q = 1 + q + ... + q^(j-1)
    for j = 1..n, so it works for polynomial q as well as rational q.
    """
    if n < 0:
        raise UnsupportedArgument("q_gamma_int needs n >= 0")
    if q == 1:
        raise PoleAtQEqualsOne("Gamma_q has a pole at q = 1")
    total = Fraction(1)
    bracket = Fraction(0)
    power = Fraction(1)
    for _ in range(1, n + 1):
        bracket = bracket + power
        power = power * q
        total = total * bracket
    return total

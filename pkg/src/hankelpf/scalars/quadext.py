"""Degree-2 extension elements u + v*theta with theta^2 = p*theta + r.

The two instances the identity checks need are the primitive cube root of
unity (p = -1, r = -1) and sqrt(2) (p = 0, r = 2), but any rational (p, r)
works.  Elements with v = 0 are demoted to plain Fractions by the factory,
so results like omega**3 compare equal to 1 structurally.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from ..errors import DivisionByZero, IncompatibleTags
from .poly import RATIONAL_TYPES, _frac


def quadext(p, r, u, v, sym: str = "w"):
    """Build u + v*theta, demoting to Fraction when v = 0."""
    u, v = _frac(u), _frac(v)
    if v == 0:
        return u
    return QuadExt(_frac(p), _frac(r), u, v, sym)


def omega() -> "QuadExt":
    """The primitive cube root of unity: w^2 = -1 - w."""
    return QuadExt(Fraction(-1), Fraction(-1), Fraction(0), Fraction(1), "w")


def sqrt2() -> "QuadExt":
    """sqrt(2): w^2 = 2."""
    return QuadExt(Fraction(0), Fraction(2), Fraction(0), Fraction(1), "w")


class QuadExt:
    """Element u + v*theta of Q(theta), theta^2 = p*theta + r."""

    __slots__ = ("p", "r", "u", "v", "sym")

    def __init__(self, p, r, u, v, sym="w"):
        self.p = _frac(p)
        self.r = _frac(r)
        self.u = _frac(u)
        self.v = _frac(v)
        self.sym = sym

    def _check(self, other: "QuadExt"):
        if self.p != other.p or self.r != other.r:
            raise IncompatibleTags(
                "elements of different quadratic extensions "
                f"(theta^2 = {self.p}*theta + {self.r} vs "
                f"{other.p}*theta + {other.r})")

    def __add__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return quadext(self.p, self.r, self.u + other, self.v, self.sym)
        if isinstance(other, QuadExt):
            self._check(other)
            return quadext(self.p, self.r, self.u + other.u,
                           self.v + other.v, self.sym)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(self.p, self.r, -self.u, -self.v, self.sym)

    def __sub__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return self.__add__(-other)
        if isinstance(other, QuadExt):
            return self.__add__(other.__neg__())
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            if other == 0:
                return Fraction(0)
            return quadext(self.p, self.r, self.u * other, self.v * other,
                           self.sym)
        if isinstance(other, QuadExt):
            self._check(other)
            # (u1 + v1 t)(u2 + v2 t), t^2 = p t + r
            u = self.u * other.u + self.r * self.v * other.v
            v = (self.u * other.v + self.v * other.u
                 + self.p * self.v * other.v)
            return quadext(self.p, self.r, u, v, self.sym)
        return NotImplemented

    __rmul__ = __mul__

    def _inverse(self):
        # (u + v t)(u + p v - v t) = u^2 + p u v - r v^2
        norm = self.u * self.u + self.p * self.u * self.v \
            - self.r * self.v * self.v
        if norm == 0:
            raise DivisionByZero("quadratic-extension element has norm 0")
        return quadext(self.p, self.r, (self.u + self.p * self.v) / norm,
                       -self.v / norm, self.sym)

    def __truediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self.__mul__(Fraction(1, 1) / _frac(other))
        if isinstance(other, QuadExt):
            self._check(other)
            return self.__mul__(other._inverse())
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return self._inverse().__mul__(other)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self._inverse() ** (-e)
        out = Fraction(1)
        base = self
        while e:
            if e & 1:
                out = base * out
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return self.v == 0 and self.u == other
        if isinstance(other, QuadExt):
            return (self.p == other.p and self.r == other.r
                    and self.u == other.u and self.v == other.v)
        return NotImplemented

    __hash__ = None

    def numeric(self) -> complex:
        """Float value with theta the principal root of t^2 = p t + r."""
        disc = self.p * self.p + 4 * self.r
        theta = (float(self.p) + cmath.sqrt(float(disc))) / 2
        return float(self.u) + float(self.v) * theta

    def __repr__(self):
        return f"QuadExt(p={self.p}, r={self.r}, u={self.u}, v={self.v})"

    def __str__(self):
        from .grammar import format_scalar
        return format_scalar(self)

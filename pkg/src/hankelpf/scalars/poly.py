"""Dense univariate polynomials, Laurent polynomials, and rational functions.

Every coefficient is a Fraction.  The factory functions (`unipoly`,
`laurent`, `ratfunc`) trim zeros and demote degenerate values one step down
the chain

    Rational -> UniPoly -> RatFunc
    Rational -> LaurentPoly -> RatFunc

so canonical forms are unique and `==` is structural.  Operations accept
plain ints and Fractions on either side; mixing two different variables, or
a UniPoly with a LaurentPoly, raises IncompatibleTags.  Division promotes
along the chain (a quotient of polynomials that does not divide exactly
becomes a RatFunc with monic, gcd-reduced denominator).
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DivisionByZero, IncompatibleTags

RATIONAL_TYPES = (int, Fraction)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# -- low-level coefficient-list arithmetic ----------------------------------

def _trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _padd(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return [-c for c in a]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _pdivmod(a, b):
    """Polynomial division with remainder over the rationals."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(rem) >= len(b):
        c = rem[-1] / lead
        k = len(rem) - len(b)
        quo[k] = c
        for i, cb in enumerate(b):
            rem[k + i] -= c * cb
        del rem[-1]
        _trim(rem)
        if len(rem) < len(b):
            break
        # keep removing the (now possibly zero) top term
        while len(rem) >= len(b) and rem and rem[-1] == 0:
            rem.pop()
    return _trim(quo), _trim(rem)


def _pgcd(a, b):
    """Monic gcd by the Euclidean algorithm."""
    a, b = list(a), list(b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


# -- UniPoly ----------------------------------------------------------------

def unipoly(var: str, coeffs) -> "UniPoly | Fraction":
    """Build a polynomial, demoting constants to Fraction."""
    cs = _trim([_frac(c) for c in coeffs])
    if not cs:
        return Fraction(0)
    if len(cs) == 1:
        return cs[0]
    return UniPoly(var, cs)


def poly_gen(var: str) -> "UniPoly":
    """The generator polynomial `var` itself."""
    return UniPoly(var, [Fraction(0), Fraction(1)])


class UniPoly:
    """Polynomial in one variable; coeffs[k] is the coefficient of var^k."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var, coeffs):
        self.var = var
        self.coeffs = tuple(_frac(c) for c in coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _same_var(self, other: "UniPoly"):
        if self.var != other.var:
            raise IncompatibleTags(
                f"polynomials in {self.var!r} and {other.var!r}")

    def __add__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            cs = list(self.coeffs)
            cs[0] = cs[0] + other
            return unipoly(self.var, cs)
        if isinstance(other, UniPoly):
            self._same_var(other)
            return unipoly(self.var, _padd(self.coeffs, other.coeffs))
        if isinstance(other, RatFunc):
            return other.__radd__(self)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.var, _pneg(self.coeffs))

    def __sub__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return self.__add__(-other)
        if isinstance(other, (UniPoly, RatFunc)):
            return self.__add__(other.__neg__())
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            if other == 0:
                return Fraction(0)
            return unipoly(self.var, [c * other for c in self.coeffs])
        if isinstance(other, UniPoly):
            self._same_var(other)
            return unipoly(self.var, _pmul(self.coeffs, other.coeffs))
        if isinstance(other, RatFunc):
            return other.__rmul__(self)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return ratfunc(self.var, [Fraction(1)], _pow_list(self.coeffs, -e))
        return unipoly(self.var, _pow_list(self.coeffs, e))

    def __truediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            if other == 0:
                raise DivisionByZero("polynomial divided by zero rational")
            inv = Fraction(1) / _frac(other)
            return unipoly(self.var, [c * inv for c in self.coeffs])
        if isinstance(other, UniPoly):
            self._same_var(other)
            return ratfunc(self.var, self.coeffs, other.coeffs)
        if isinstance(other, RatFunc):
            return other.__rtruediv__(self)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return ratfunc(self.var, [_frac(other)], self.coeffs)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return len(self.coeffs) == 1 and self.coeffs[0] == other \
                or (not self.coeffs and other == 0)
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, RatFunc):
            return other.__eq__(self)
        return NotImplemented

    __hash__ = None

    def evaluate(self, x):
        """Horner evaluation; x may be any compatible scalar."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"UniPoly({self.var!r}, {list(self.coeffs)!r})"

    def __str__(self):
        from .grammar import format_scalar
        return format_scalar(self)


def _pow_list(cs, e: int):
    out = [Fraction(1)]
    base = list(cs)
    while e:
        if e & 1:
            out = _pmul(out, base)
        base = _pmul(base, base)
        e >>= 1
    return out


# -- RatFunc ----------------------------------------------------------------

def ratfunc(var: str, num, den):
    """num/den reduced to lowest terms with monic denominator.

    Demotes to UniPoly (and further to Fraction) when the denominator
    reduces to a constant.
    """
    num = _trim([_frac(c) for c in num])
    den = _trim([_frac(c) for c in den])
    if not den:
        raise DivisionByZero("rational function with zero denominator")
    if not num:
        return Fraction(0)
    g = _pgcd(num, den)
    if len(g) > 1:
        num, _ = _pdivmod(num, g)
        den, _ = _pdivmod(den, g)
    lead = den[-1]
    if lead != 1:
        num = [c / lead for c in num]
        den = [c / lead for c in den]
    if len(den) == 1:
        return unipoly(var, num)
    return RatFunc(var, num, den)


class RatFunc:
    """Quotient of two UniPoly coefficient lists in one variable."""

    __slots__ = ("var", "num", "den")

    def __init__(self, var, num, den):
        self.var = var
        self.num = tuple(num)
        self.den = tuple(den)

    def _parts(self, other):
        """Coerce other to a (num, den) pair in this variable."""
        if isinstance(other, RATIONAL_TYPES):
            return ([_frac(other)] if other != 0 else []), [Fraction(1)]
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise IncompatibleTags(
                    f"rational function in {self.var!r} vs {other.var!r}")
            return list(other.coeffs), [Fraction(1)]
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise IncompatibleTags(
                    f"rational function in {self.var!r} vs {other.var!r}")
            n, d = other._as_num_den()
            return n, d
        if isinstance(other, RatFunc):
            if other.var != self.var:
                raise IncompatibleTags(
                    f"rational functions in {self.var!r} and {other.var!r}")
            return list(other.num), list(other.den)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n2, d2 = p
        return ratfunc(self.var,
                       _padd(_pmul(self.num, d2), _pmul(n2, self.den)),
                       _pmul(self.den, d2))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.var, _pneg(self.num), self.den)

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n2, d2 = p
        return ratfunc(self.var,
                       _padd(_pmul(self.num, d2), _pneg(_pmul(n2, self.den))),
                       _pmul(self.den, d2))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n2, d2 = p
        return ratfunc(self.var, _pmul(self.num, n2), _pmul(self.den, d2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n2, d2 = p
        if not n2:
            raise DivisionByZero("division by zero rational function")
        return ratfunc(self.var, _pmul(self.num, d2), _pmul(self.den, n2))

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n2, d2 = p
        return ratfunc(self.var, _pmul(n2, self.den), _pmul(d2, self.num))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return ratfunc(self.var, _pow_list(self.den, -e),
                           _pow_list(self.num, -e))
        return ratfunc(self.var, _pow_list(self.num, e),
                       _pow_list(self.den, e))

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return (self.var == other.var and self.num == other.num
                    and self.den == other.den)
        if isinstance(other, (UniPoly, *RATIONAL_TYPES)):
            # canonical RatFunc has denominator of degree >= 1
            return False
        return NotImplemented

    __hash__ = None

    def evaluate(self, x):
        num = Fraction(0)
        for c in reversed(self.num):
            num = num * x + c
        den = Fraction(0)
        for c in reversed(self.den):
            den = den * x + c
        if den == 0:
            raise DivisionByZero("rational function evaluated at a pole")
        return num / den

    def __repr__(self):
        return f"RatFunc({self.var!r}, {list(self.num)!r}, {list(self.den)!r})"

    def __str__(self):
        from .grammar import format_scalar
        return format_scalar(self)


# -- LaurentPoly -------------------------------------------------------------

def laurent(var: str, min_exp: int, coeffs):
    """Build a Laurent polynomial, demoting constants to Fraction."""
    cs = [_frac(c) for c in coeffs]
    while cs and cs[0] == 0:
        cs.pop(0)
        min_exp += 1
    _trim(cs)
    if not cs:
        return Fraction(0)
    if len(cs) == 1 and min_exp == 0:
        return cs[0]
    return LaurentPoly(var, min_exp, cs)


class LaurentPoly:
    """Finite Laurent polynomial; coeffs[k] multiplies var^(min_exp+k)."""

    __slots__ = ("var", "min_exp", "coeffs")

    def __init__(self, var, min_exp, coeffs):
        self.var = var
        self.min_exp = min_exp
        self.coeffs = tuple(_frac(c) for c in coeffs)

    def coefficient(self, e: int) -> Fraction:
        k = e - self.min_exp
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _as_num_den(self):
        """Represent as polynomial pair (num, var^k)."""
        if self.min_exp >= 0:
            return [Fraction(0)] * self.min_exp + list(self.coeffs), [Fraction(1)]
        den = [Fraction(0)] * (-self.min_exp) + [Fraction(1)]
        return list(self.coeffs), den

    def _pair(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return 0, [_frac(other)]
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise IncompatibleTags(
                    f"Laurent polynomials in {self.var!r} and {other.var!r}")
            return other.min_exp, list(other.coeffs)
        return None

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        m2, c2 = p
        m = min(self.min_exp, m2)
        top = max(self.min_exp + len(self.coeffs), m2 + len(c2))
        out = [Fraction(0)] * (top - m)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp - m + i] += c
        for i, c in enumerate(c2):
            out[m2 - m + i] += c
        return laurent(self.var, m, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.var, self.min_exp, _pneg(self.coeffs))

    def __sub__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return self.__add__(-other)
        if isinstance(other, LaurentPoly):
            return self.__add__(other.__neg__())
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            if other == 0:
                return Fraction(0)
            return laurent(self.var, self.min_exp,
                           [c * other for c in self.coeffs])
        p = self._pair(other)
        if p is None:
            return NotImplemented
        m2, c2 = p
        return laurent(self.var, self.min_exp + m2, _pmul(self.coeffs, c2))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e >= 0:
            out = laurent(self.var, 0, [Fraction(1)])
            base = self
            while e:
                if e & 1:
                    out = base * out
                base = base * base
                e >>= 1
            return out
        if len(self.coeffs) == 1:
            return laurent(self.var, self.min_exp * e,
                           [self.coeffs[0] ** e])
        n, d = self._as_num_den()
        return ratfunc(self.var, n, d) ** e

    def __truediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            if other == 0:
                raise DivisionByZero("Laurent polynomial divided by zero")
            inv = Fraction(1) / _frac(other)
            return laurent(self.var, self.min_exp,
                           [c * inv for c in self.coeffs])
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise IncompatibleTags(
                    f"Laurent polynomials in {self.var!r} and {other.var!r}")
            if len(other.coeffs) == 1:
                inv = Fraction(1) / other.coeffs[0]
                return laurent(self.var, self.min_exp - other.min_exp,
                               [c * inv for c in self.coeffs])
            n1, d1 = self._as_num_den()
            n2, d2 = other._as_num_den()
            return ratfunc(self.var, _pmul(n1, d2), _pmul(d1, n2))
        if isinstance(other, RatFunc):
            return other.__rtruediv__(self)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            n, d = self._as_num_den()
            return ratfunc(self.var, _pmul([_frac(other)], d), n)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return (len(self.coeffs) == 1 and self.min_exp == 0
                    and self.coeffs[0] == other)
        if isinstance(other, LaurentPoly):
            return (self.var == other.var and self.min_exp == other.min_exp
                    and self.coeffs == other.coeffs)
        return NotImplemented

    __hash__ = None

    def evaluate(self, x):
        x = _frac(x) if isinstance(x, RATIONAL_TYPES) else x
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.min_exp >= 0:
            return acc * x ** self.min_exp
        if x == 0:
            raise DivisionByZero("Laurent polynomial evaluated at 0")
        return acc / x ** (-self.min_exp)

    def __repr__(self):
        return (f"LaurentPoly({self.var!r}, {self.min_exp}, "
                f"{list(self.coeffs)!r})")

    def __str__(self):
        from .grammar import format_scalar
        return format_scalar(self)


def laurent_gen(var: str) -> LaurentPoly:
    """The generator `var` as a Laurent polynomial (so var**-1 works)."""
    return LaurentPoly(var, 1, [Fraction(1)])

"""q-series primitives, Jackson integrals, Delta products, discrete
measures, and beta-type integral closed forms.

Everything is exact except the two numeric quadratures, which truncate
infinite q-grids and raise NonconvergentTail when the dropped tail is
not demonstrably small.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .engines import det_matrix
from .errors import (GeometricPole, HpfError, MomentPole, NonconvergentTail,
                     PoleInNegativeRange, ShapeMismatch, SizeBudgetExceeded,
                     UnsupportedArgument, ZeroCoordinate)
from .scalars import (HalfGamma, format_scalar, gamma_exact, is_zero,
                      parse_scalar, q_gamma_int, scalar_eq, sdiv)
from .tensors import BlockArray

__all__ = [
    "q_pochhammer", "q_binomial",
    "jackson_monomial", "jackson_poly_exact",
    "jackson_numeric", "jackson_two_sided_numeric",
    "DiscreteMeasure", "measure_to_json", "measure_from_json",
    "discrete_moment", "discrete_cube_integral", "discrete_ordered_integral",
    "mp_const", "mp_monomial", "mp_add", "mp_mul", "mp_pow",
    "delta_product",
    "SelbergParams", "selberg_closed", "selberg_bruteforce",
    "aomoto_closed", "aomoto_bruteforce", "selberg_phi_bridge",
    "askey_A_n", "askey_lhs_exact",
    "QJacobiParams", "lqj_moment",
    "debruijn_kernel", "debruijn_ordered_integral",
]


def _signed_power(base, e: int):
    """base**e allowing negative e by exact division."""
    if e >= 0:
        return base ** e
    return sdiv(1, base ** (-e))


# --------------------------------------------------------------------------
# shifted factorials and Gaussian binomials
# --------------------------------------------------------------------------

def q_pochhammer(a, q, n: int):
    """The q-shifted factorial (a;q)_n for any integer n.

    Nonnegative n gives the product (1-a)(1-aq)...(1-aq^(n-1)).  Negative
    n is defined through (a;q)_n = (a;q)_inf / (aq^n;q)_inf, which reduces
    to the reciprocal of a finite product over q^(-1), q^(-2), ...; a
    vanishing factor there is a genuine pole.
    """
    if n >= 0:
        total = 1
        factor = a
        for _ in range(n):
            total = total * (1 - factor)
            factor = factor * q
        return total
    denom = 1
    factor = a
    for _ in range(-n):
        factor = sdiv(factor, q)
        term = 1 - factor
        if is_zero(term):
            raise PoleInNegativeRange(
                f"(a;q)_{n} hit the vanishing factor 1 - a*q^k")
        denom = denom * term
    return sdiv(1, denom)


def q_binomial(n: int, k: int, q):
    """Gaussian binomial coefficient, zero outside 0 <= k <= n.

    Equal to the quotient (q;q)_n / ((q;q)_k (q;q)_{n-k}); computed by the
    q-Pascal recurrence so a polynomial q stays polynomial throughout.
    """
    if k < 0 or k > n:
        return 0
    row = [1]
    for i in range(1, n + 1):
        prev = row
        row = [1]
        power = 1
        for j in range(1, i):
            power = power * q
            row.append(prev[j - 1] + power * prev[j])
        row.append(1)
    return row[k]


# --------------------------------------------------------------------------
# Jackson integration
# --------------------------------------------------------------------------

def jackson_monomial(a, q, m: int):
    """Exact Jackson integral of x^m over [0, a]: a^(m+1)(1-q)/(1-q^(m+1))."""
    if m < 0:
        raise UnsupportedArgument("jackson_monomial needs m >= 0")
    denom = 1 - q ** (m + 1)
    if is_zero(denom):
        raise GeometricPole(f"q^{m + 1} = 1 makes the geometric sum diverge")
    return sdiv(a ** (m + 1) * (1 - q), denom)


def jackson_poly_exact(p, a, q):
    """Termwise n-fold Jackson integral of a polynomial over [0, a]^n.

    p is either a constant or a dict mapping exponent tuples to
    coefficients; the tuple length fixes the number of variables.
    """
    if not isinstance(p, dict):
        p = {(0,): p}
    if not p:
        return 0
    cache = {}
    total = 0
    for exps in sorted(p):
        term = p[exps]
        for m in exps:
            if m not in cache:
                cache[m] = jackson_monomial(a, q, m)
            term = term * cache[m]
        total = total + term
    return total


def jackson_numeric(f, a: float, q: float, K: int = 200, tol: float = 1e-8):
    """Truncated Jackson integral (1-q) a sum_{k=0..K} f(a q^k) q^k.

    The magnitude of the last retained term scaled by (1-q)a serves as
    the tail estimate; above tol the truncation is rejected.
    """
    if not 0.0 < q < 1.0:
        raise UnsupportedArgument("jackson_numeric needs 0 < q < 1")
    total = 0.0
    power = 1.0
    last = 0.0
    for _ in range(K + 1):
        last = f(a * power) * power
        total += last
        power *= q
    estimate = abs((1.0 - q) * a * last)
    if estimate > tol:
        raise NonconvergentTail(
            f"tail estimate {estimate:.3e} exceeds tolerance {tol:.1e}")
    return (1.0 - q) * a * total


def jackson_two_sided_numeric(f, a: float, q: float, K: int = 200,
                              tol: float = 1e-8):
    """Truncated Jackson integral over [a, 1]:
    (1-q) (sum f(q^k) q^k - a sum f(a q^k) q^k)."""
    if not 0.0 < q < 1.0:
        raise UnsupportedArgument("jackson_two_sided_numeric needs 0 < q < 1")
    pos = neg = 0.0
    last_pos = last_neg = 0.0
    power = 1.0
    for _ in range(K + 1):
        last_pos = f(power) * power
        pos += last_pos
        if a != 0.0:
            last_neg = f(a * power) * power
            neg += last_neg
        power *= q
    estimate = (1.0 - q) * (abs(last_pos) + abs(a * last_neg))
    if estimate > tol:
        raise NonconvergentTail(
            f"tail estimate {estimate:.3e} exceeds tolerance {tol:.1e}")
    return (1.0 - q) * (pos - a * neg)


# --------------------------------------------------------------------------
# finite measures
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscreteMeasure:
    """Finitely supported measure given as (support point, weight) pairs."""

    atoms: tuple

    def __post_init__(self):
        atoms = tuple((x, w) for x, w in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        for i in range(len(atoms)):
            for j in range(i + 1, len(atoms)):
                if scalar_eq(atoms[i][0], atoms[j][0]):
                    raise UnsupportedArgument(
                        "repeated support point "
                        f"{format_scalar(atoms[i][0])}")

    def __len__(self):
        return len(self.atoms)


def measure_to_json(mu: DiscreteMeasure) -> dict:
    return {"atoms": [{"x": format_scalar(x), "w": format_scalar(w)}
                      for x, w in mu.atoms]}


def measure_from_json(doc: dict) -> DiscreteMeasure:
    return DiscreteMeasure(tuple((parse_scalar(atom["x"]),
                                  parse_scalar(atom["w"]))
                                 for atom in doc["atoms"]))


def discrete_moment(mu: DiscreteMeasure, k: int):
    """k-th moment: the weighted sum of x^k over the atoms."""
    total = 0
    for x, w in mu.atoms:
        total = total + w * _signed_power(x, k)
    return total


def discrete_cube_integral(mu: DiscreteMeasure, n: int, f):
    """Integral of f over the n-fold product measure.

    f receives a tuple of n support points; atoms repeat freely.
    """
    total = 0
    for combo in itertools.product(mu.atoms, repeat=n):
        weight = 1
        for _, w in combo:
            weight = weight * w
        total = total + f(tuple(x for x, _ in combo)) * weight
    return total


def discrete_ordered_integral(mu: DiscreteMeasure, n: int, f):
    """Integral of f over the region x_1 < x_2 < ... < x_n.

    Runs over strictly increasing n-tuples of support points, so the
    support must be orderable (rational in practice).
    """
    atoms = sorted(mu.atoms, key=lambda aw: aw[0])
    total = 0
    for combo in itertools.combinations(atoms, n):
        weight = 1
        for _, w in combo:
            weight = weight * w
        total = total + f(tuple(x for x, _ in combo)) * weight
    return total


# --------------------------------------------------------------------------
# sparse multivariate polynomials (exponent tuple -> coefficient)
# --------------------------------------------------------------------------

def mp_const(nvars: int, c):
    return {} if is_zero(c) else {(0,) * nvars: c}


def mp_monomial(exps, c):
    return {} if is_zero(c) else {tuple(exps): c}


def mp_add(p, r):
    out = dict(p)
    for e, c in r.items():
        if e in out:
            c = out[e] + c
        if is_zero(c):
            out.pop(e, None)
        else:
            out[e] = c
    return out


def mp_mul(p, r):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in r.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            c = c1 * c2
            if e in out:
                c = out[e] + c
            out[e] = c
    return {e: c for e, c in out.items() if not is_zero(c)}


def mp_pow(p, e: int):
    if e < 0:
        raise UnsupportedArgument("mp_pow needs e >= 0")
    out = None
    base = p
    exp = e
    while exp:
        if exp & 1:
            out = base if out is None else mp_mul(out, base)
        exp >>= 1
        if exp:
            base = mp_mul(base, base)
    if out is None:
        nvars = len(next(iter(p))) if p else 1
        return mp_const(nvars, 1)
    return out


# --------------------------------------------------------------------------
# Delta products
# --------------------------------------------------------------------------

def _delta0(xs, q, k):
    total = 1
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            total = total * q_pochhammer(sdiv(xs[i], xs[j]), q, k)
            total = total * q_pochhammer(sdiv(q * xs[j], xs[i]), q, k)
    return total


def delta_product(x, q, k: int, variant: str):
    """One of the four pair-interaction products on x_1..x_n.

    D1:   prod_{i<j} prod_{v=0..k-1} (x_j - q^v x_i)(x_j - q^(-v) x_i)
          (the v = 0 factor appears twice, giving (x_j - x_i)^2)
    D0:   prod_{i<j} (x_i/x_j;q)_k (q x_j/x_i;q)_k
    D2:   prod_{i<j} prod_{v=-k+1..k} (x_i - q^v x_j)
    Dsym: the symmetrization (1/n!) sum over permutations of D0
    """
    xs = list(x)
    n = len(xs)
    if k < 0:
        raise UnsupportedArgument("delta_product needs k >= 0")
    if variant in ("D0", "Dsym"):
        for xi in xs:
            if is_zero(xi):
                raise ZeroCoordinate(f"{variant} divides by every coordinate")
        if variant == "D0":
            return _delta0(xs, q, k)
        total = 0
        for perm in itertools.permutations(xs):
            total = total + _delta0(perm, q, k)
        return sdiv(total, math.factorial(n))
    if variant == "D1":
        total = 1
        powers = {v: _signed_power(q, v) for v in range(-k + 1, k)} if k \
            else {}
        for i in range(n):
            for j in range(i + 1, n):
                for v in range(k):
                    total = total * (xs[j] - powers[v] * xs[i])
                    total = total * (xs[j] - powers[-v] * xs[i])
        return total
    if variant == "D2":
        total = 1
        powers = {v: _signed_power(q, v) for v in range(-k + 1, k + 1)}
        for i in range(n):
            for j in range(i + 1, n):
                for v in range(-k + 1, k + 1):
                    total = total * (xs[i] - powers[v] * xs[j])
        return total
    raise UnsupportedArgument(f"unknown variant {variant!r}")


# --------------------------------------------------------------------------
# beta-type integrals, classical side
# --------------------------------------------------------------------------

def _admissible(value, name, minimum):
    v = Fraction(value)
    if v < minimum:
        raise UnsupportedArgument(f"{name} must be >= {minimum}, got {v}")
    if v.denominator not in (1, 2):
        raise UnsupportedArgument(
            f"{name} must be an integer or half-integer, got {v}")
    return v


@dataclass(frozen=True)
class SelbergParams:
    n: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        if self.n < 0:
            raise UnsupportedArgument("n must be >= 0")
        object.__setattr__(self, "alpha",
                           _admissible(self.alpha, "alpha", Fraction(1, 2)))
        object.__setattr__(self, "beta",
                           _admissible(self.beta, "beta", Fraction(1, 2)))
        object.__setattr__(self, "gamma",
                           _admissible(self.gamma, "gamma", 0))


def selberg_closed(p: SelbergParams) -> HalfGamma:
    """The n-dimensional beta-type integral as a gamma-function product.

    Returns (rational) * (sqrt pi)^e; e is zero when every parameter is
    an integer.
    """
    total = HalfGamma(1, 0)
    for j in range(1, p.n + 1):
        num = (gamma_exact(p.alpha + (j - 1) * p.gamma)
               * gamma_exact(p.beta + (j - 1) * p.gamma)
               * gamma_exact(j * p.gamma + 1))
        den = (gamma_exact(p.alpha + p.beta + (p.n + j - 2) * p.gamma)
               * gamma_exact(p.gamma + 1))
        total = total * (num / den)
    return total


def _beta_factorial(a: int, b: int) -> Fraction:
    # integral of t^(a-1)(1-t)^(b-1) over [0,1] for positive integers
    return Fraction(math.factorial(a - 1) * math.factorial(b - 1),
                    math.factorial(a + b - 1))


def _int_or_raise(value, name) -> int:
    v = Fraction(value)
    if v.denominator != 1:
        raise UnsupportedArgument(
            f"brute-force expansion needs integer {name}, got {v}")
    return int(v)


def _pair_power_poly(n: int, gamma: int):
    poly = mp_const(n, Fraction(1))
    for i in range(n):
        for j in range(i + 1, n):
            ei = tuple(1 if t == i else 0 for t in range(n))
            ej = tuple(1 if t == j else 0 for t in range(n))
            factor = {ei: Fraction(1), ej: Fraction(-1)}
            poly = mp_mul(poly, mp_pow(factor, 2 * gamma))
    return poly


def _integrate_beta_monomials(poly, alpha: int, beta: int) -> Fraction:
    total = Fraction(0)
    for exps in sorted(poly):
        val = Fraction(poly[exps])
        for e in exps:
            val *= _beta_factorial(alpha + e, beta)
        total += val
    return total


def selberg_bruteforce(n: int, alpha, beta, gamma) -> Fraction:
    """Oracle: expand the pair-interaction power and integrate monomials
    against t^(alpha-1)(1-t)^(beta-1) factor by factor.

    Integer parameters only (even pair exponent removes the absolute
    value), and n capped at desk scale.
    """
    alpha = _int_or_raise(alpha, "alpha")
    beta = _int_or_raise(beta, "beta")
    gamma = _int_or_raise(gamma, "gamma")
    if alpha < 1 or beta < 1 or gamma < 0:
        raise UnsupportedArgument("need alpha, beta >= 1 and gamma >= 0")
    if n > 3:
        raise SizeBudgetExceeded(f"brute-force expansion capped at n=3, "
                                 f"got n={n}")
    if n < 1:
        raise UnsupportedArgument("n must be >= 1")
    return _integrate_beta_monomials(_pair_power_poly(n, gamma), alpha, beta)


def aomoto_closed(n: int, k: int, alpha, beta, gamma,
                  elementary: bool = False) -> HalfGamma:
    """Closed form with the first k coordinates multiplied in.

    elementary=True returns the symmetrized variant instead, which
    carries the extra binomial factor C(n, k).
    """
    if not 0 <= k <= n:
        raise UnsupportedArgument(f"need 0 <= k <= n, got k={k}, n={n}")
    p = SelbergParams(n, alpha, beta, gamma)
    ratio = Fraction(1)
    for j in range(1, k + 1):
        ratio *= ((p.alpha + (n - j) * p.gamma)
                  / (p.alpha + p.beta + (2 * n - j - 1) * p.gamma))
    out = selberg_closed(p) * ratio
    if elementary:
        out = out * math.comb(n, k)
    return out


def aomoto_bruteforce(n: int, k: int, alpha, beta, gamma) -> Fraction:
    """Oracle for aomoto_closed (non-elementary form), integer parameters."""
    alpha = _int_or_raise(alpha, "alpha")
    beta = _int_or_raise(beta, "beta")
    gamma = _int_or_raise(gamma, "gamma")
    if not 0 <= k <= n:
        raise UnsupportedArgument(f"need 0 <= k <= n, got k={k}, n={n}")
    if alpha < 1 or beta < 1 or gamma < 0:
        raise UnsupportedArgument("need alpha, beta >= 1 and gamma >= 0")
    if n > 3:
        raise SizeBudgetExceeded(f"brute-force expansion capped at n=3, "
                                 f"got n={n}")
    poly = _pair_power_poly(n, gamma)
    prefix = mp_monomial(tuple(1 if t < k else 0 for t in range(n)),
                         Fraction(1))
    return _integrate_beta_monomials(mp_mul(prefix, poly), alpha, beta)


def selberg_phi_bridge(n: int, r: int, s: int, m: int):
    """Half-integer specialization against the binomial product.

    Computes S(n, r+1/2, s+1/2, m) through exact gamma values, and
    independently as pi^n / 2^(2n(m(n-1)+r+s)) times the binomial
    product; checks they agree and returns the pair.
    """
    from .sequences import phi_product
    if r < 0 or s < 0 or m < 1:
        raise UnsupportedArgument("need r, s >= 0 and m >= 1")
    lhs = selberg_closed(SelbergParams(
        n, Fraction(2 * r + 1, 2), Fraction(2 * s + 1, 2), m))
    scale = Fraction(1, 2 ** (2 * n * (m * (n - 1) + r + s)))
    rhs = HalfGamma(scale * phi_product(n, r, s, m), 2 * n)
    if not lhs == rhs:
        raise HpfError(
            f"half-integer bridge mismatch at n={n}, r={r}, s={s}, m={m}")
    return lhs, rhs


# --------------------------------------------------------------------------
# beta-type integrals, q side
# --------------------------------------------------------------------------

def _q_gamma_pos(t: int, q):
    # q-gamma at the positive integer t
    return q_gamma_int(t - 1, q)


def _positive_int(value, name) -> int:
    if not isinstance(value, int) or value < 1:
        raise UnsupportedArgument(f"{name} must be a positive integer")
    return value


def askey_A_n(n: int, x: int, y: int, k: int, q):
    """The q-gamma product side of the q-analogue, exact in q."""
    n = _positive_int(n, "n")
    x = _positive_int(x, "x")
    y = _positive_int(y, "y")
    k = _positive_int(k, "k")
    num = 1
    den = 1
    for j in range(1, n + 1):
        num = num * _q_gamma_pos(x + (j - 1) * k, q)
        num = num * _q_gamma_pos(y + (j - 1) * k, q)
        num = num * _q_gamma_pos(j * k + 1, q)
        den = den * _q_gamma_pos(x + y + (n + j - 2) * k, q)
        den = den * _q_gamma_pos(k + 1, q)
    return sdiv(num, den)


def askey_lhs_exact(n: int, x: int, y: int, k: int, q):
    """Exact n-fold Jackson integral of the q-Selberg integrand.

    The integrand expands to a genuine polynomial: the pair part is
    prod_{i<j} prod_{v=1-k..k} (t_i - q^v t_j) and each coordinate
    carries t^(x-1) (tq;q)_{y-1}.
    """
    n = _positive_int(n, "n")
    x = _positive_int(x, "x")
    y = _positive_int(y, "y")
    k = _positive_int(k, "k")
    if n > 3 or k > 2:
        raise SizeBudgetExceeded(
            f"exact expansion capped at n=3, k=2; got n={n}, k={k}")
    poly = mp_const(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            ei = tuple(1 if t == i else 0 for t in range(n))
            ej = tuple(1 if t == j else 0 for t in range(n))
            for v in range(-k + 1, k + 1):
                poly = mp_mul(poly, {ei: 1, ej: -_signed_power(q, v)})
    zero = (0,) * n
    for i in range(n):
        ei = tuple(1 if t == i else 0 for t in range(n))
        if x > 1:
            poly = mp_mul(poly, mp_monomial(
                tuple((x - 1) * e for e in ei), 1))
        qs = 1
        for _ in range(1, y):
            qs = qs * q
            poly = mp_mul(poly, {zero: 1, ei: -qs})
    return jackson_poly_exact(poly, 1, q)


@dataclass(frozen=True)
class QJacobiParams:
    a: object
    b: object
    q: object


def lqj_moment(n: int, p: QJacobiParams):
    """Moment sequence (aq;q)_n / (abq^2;q)_n of the q-Jacobi weight."""
    if n < 0:
        raise UnsupportedArgument("lqj_moment needs n >= 0")
    den = q_pochhammer(p.a * p.b * p.q * p.q, p.q, n)
    if is_zero(den):
        raise MomentPole(f"(abq^2;q)_{n} vanished")
    return sdiv(q_pochhammer(p.a * p.q, p.q, n), den)


# --------------------------------------------------------------------------
# determinant families against a measure
# --------------------------------------------------------------------------

def _family_shape(families):
    if not families:
        raise ShapeMismatch("need at least one function family")
    rows = len(families[0])
    if rows == 0:
        raise ShapeMismatch("function family with no rows")
    cols = len(families[0][0])
    for fam in families:
        if len(fam) != rows or any(len(row) != cols for row in fam):
            raise ShapeMismatch("function families must share one shape")
    return len(families), rows, cols


def debruijn_kernel(families, mu: DiscreteMeasure) -> BlockArray:
    """One-point kernel of a family of determinant integrands.

    families[s][i-1][mu-1] is a callable of one point; the kernel entry
    at (I_1, ..., I_r) integrates the product over s of the l x l
    determinants det( families[s][i][mu](x) ) with i running over I_s.
    """
    r, rows, l = _family_shape(families)
    # evaluate every family row once per atom
    tables = []
    for x, _ in mu.atoms:
        tables.append([[[f(x) for f in row] for row in fam]
                       for fam in families])
    entries = {}
    for key in itertools.product(
            itertools.combinations(range(1, rows + 1), l), repeat=r):
        total = 0
        for t, (_, w) in enumerate(mu.atoms):
            prod = w
            for s, subset in enumerate(key):
                prod = prod * det_matrix(
                    [tables[t][s][i - 1] for i in subset])
            total = total + prod
        if not is_zero(total):
            entries[key] = total
    return BlockArray(l, r, rows, entries)


def debruijn_ordered_integral(families, mu: DiscreteMeasure, n: int):
    """Ordered-region integral of the product of big determinants.

    For each strictly increasing support tuple (x_1 < ... < x_n), forms
    per family the square matrix whose row i lists the l function values
    at x_1, then at x_2, and so on, multiplies the r determinants and
    the weights, and sums.
    """
    r, rows, l = _family_shape(families)
    if l * n != rows:
        raise ShapeMismatch(
            f"square determinant needs l*n rows, got {rows} with "
            f"l={l}, n={n}")

    def integrand(xs):
        prod = 1
        for fam in families:
            mat = []
            for row in fam:
                flat = []
                for xv in xs:
                    flat.extend(f(xv) for f in row)
                mat.append(flat)
            prod = prod * det_matrix(mat)
        return prod

    return discrete_ordered_integral(mu, n, integrand)

"""Checks on the q-polynomial side: Pfaffians of q-difference-weighted
Rogers-Szego entries, the moment-polynomial recurrence, the ternary-tree
Pfaffian conjectures, and floating-point checks of the two biorthogonal
integral evaluations on [a, 1].
"""

import math
from fractions import Fraction

from ..engines import pfaffian
from ..qcalc import delta_product, q_binomial, q_pochhammer
from ..scalars import poly_gen
from ..sequences import (ftilde, ftilde_recurrence,
                         gx_hypergeometric_series, rogers_szego,
                         sequence_value)
from .common import Outcome, outcome_all, rand_fraction, rand_q, seq_pfaffian


def _int_qpow(q, num, den=1):
    e = Fraction(num, den)
    if e.denominator != 1:
        raise ValueError(f"q-power exponent {e} is not integral")
    e = int(e)
    return q ** e if e >= 0 else 1 / (q ** (-e))


def _rs_pfaffian(kind, shift, n, q):
    entries = {}
    for i in range(1, 2 * n + 1):
        for j in range(i + 1, 2 * n + 1):
            poly = rogers_szego(kind, i + j + shift, q)
            entries[(i, j)] = (q ** (i - 1) - q ** (j - 1)) * poly
    return pfaffian(entries, size=2 * n)


def check_asc(params, rng, opts):
    """One of the four closed-form Pfaffians of Rogers-Szego entries,
    kept symbolic in a and spot-checked at random rational q."""
    variant, n = params["variant"], params["n"]
    a = poly_gen("a")
    trials = max(1, opts.trials)
    lhs = rhs = None
    for _ in range(trials):
        q = rand_q(rng)
        base = a ** (n * (n - 1))
        for k in range(1, n + 1):
            base = base * q_pochhammer(q, q, 2 * k - 1)
        if variant == "u-rm1":
            lhs = _rs_pfaffian("F", -3, n, q)
            rhs = base * _int_qpow(q, n * (n - 1) * (4 * n - 5), 6)
        elif variant == "u-r0":
            lhs = _rs_pfaffian("F", -2, n, q)
            extra = sum(_int_qpow(q, k * (k - 1) + (n - k) * (n - k - 1))
                        * q_binomial(n, k, q * q) * a ** k
                        for k in range(n + 1))
            rhs = base * _int_qpow(q, n * (n - 1) * (4 * n - 5), 6) * extra
        elif variant == "v-rm1":
            lhs = _rs_pfaffian("G", -3, n, q)
            rhs = base * _int_qpow(q, -n * (n - 1) * (4 * n - 5), 3)
        elif variant == "v-r0":
            lhs = _rs_pfaffian("G", -2, n, q)
            extra = sum(q_binomial(n, k, q * q) * a ** k
                        for k in range(n + 1))
            rhs = (base * _int_qpow(q, -2 * n * (n - 1) * (2 * n - 1), 3)
                   * extra)
        else:
            raise KeyError(f"unknown variant {variant!r}")
        if not lhs == rhs:
            return Outcome("counterexample", lhs, rhs, n, f"q = {q}")
    return Outcome("verified", lhs, rhs, n,
                   f"symbolic in a at {trials} random rational q")


def check_ftilde_rec(params, rng, opts):
    """Closed form of the moment polynomials against the three-term
    recurrence, at random rational parameter values."""
    max_i = params.get("max_i", 6)
    pairs = []
    for _ in range(max(1, opts.trials)):
        t = rand_fraction(rng, lo=-2, hi=2, den=5,
                          avoid=lambda v: v == 0)
        for i in range(max_i + 1):
            pairs.append((ftilde(i, t), ftilde_recurrence(i, t)))
    return outcome_all(pairs, note=f"degrees 0..{max_i}")


# ------------------------------------------------------------ ternary trees

_GX_SHIFT = {1: -1, 2: -2, 3: -1, 4: -1, 5: -2}


def _gx_rhs(i, n):
    if i == 1:
        v = Fraction(1, 2 ** n)
        for k in range(n):
            v *= Fraction(
                math.factorial(12 * k + 6) * math.factorial(4 * k + 1)
                * math.factorial(3 * k + 2),
                math.factorial(8 * k + 2) * math.factorial(8 * k + 5)
                * math.factorial(3 * k + 1))
        return v
    if i == 2:
        v = Fraction(1, 12 ** n)
        for k in range(n):
            v *= Fraction(
                math.factorial(12 * k + 10) * math.factorial(4 * k + 2)
                * (4 * k + 1),
                math.factorial(8 * k + 3) * math.factorial(8 * k + 7)
                * (3 * k + 2) * (12 * k + 5))
        return v
    if i == 3:
        v = Fraction(4, 3) ** n
        for k in range(n):
            v *= Fraction(
                math.factorial(12 * k + 15) * math.factorial(4 * k + 5)
                * (2 * k + 1),
                math.factorial(8 * k + 8) * math.factorial(8 * k + 11)
                * (12 * k + 13))
        return v
    if i == 4:
        v = Fraction(2, 3) ** n * math.factorial(6 * n + 1)
        for k in range(n):
            v *= Fraction(
                math.factorial(12 * k + 6) * math.factorial(4 * k + 5)
                * (4 * k + 3),
                math.factorial(8 * k + 5) * math.factorial(8 * k + 10)
                * (k + 1) * (3 * k + 1))
        return v
    v = Fraction(1, 3 ** n)
    for k in range(n):
        v *= Fraction(
            math.factorial(6 * k + 6) * math.factorial(2 * k),
            math.factorial(4 * k + 1) * math.factorial(4 * k + 4)
            * (3 * k + 2))
    return v


def check_gx(params, rng, opts):
    """Conjectured Hankel-type Pfaffian evaluation for one of the five
    ternary-tree sequences; reports the verified range of n."""
    i = params["index"]
    max_n = opts.max_n or params.get("max_n", 3)
    shift = _GX_SHIFT[i]
    good = 0
    lhs = rhs = Fraction(1)
    for n in range(1, max_n + 1):
        lhs = seq_pfaffian(f"gx{i}", shift, n)
        rhs = _gx_rhs(i, n)
        if not lhs == rhs:
            note = (f"verified range {'n<=' + str(good) if good else 'none'}"
                    f"; first mismatch at n={n}")
            return Outcome("counterexample", lhs, rhs, n, note)
        good = n
    return Outcome("verified", lhs, rhs, max_n,
                   f"verified range n<={good}")


def check_gx_defs(params, rng, opts):
    """Series expansions of the hypergeometric quotients against the
    stored ternary-tree sequences."""
    order = params.get("order", 8)
    pairs = []
    for i in range(1, 6):
        series = gx_hypergeometric_series(i, order)
        pairs += [(series[k], sequence_value(f"gx{i}", k))
                  for k in range(order + 1)]
    return outcome_all(pairs, note=f"five quotients through order {order}")


# -------------------------------------------------------- numeric integrals

def _jackson_atoms(a, q, K):
    """Support points and weights of the two-sided Jackson sum on [a, 1],
    truncated after K powers of q, as floats."""
    atoms = []
    power = 1.0
    for _ in range(K + 1):
        atoms.append((power, (1.0 - q) * power))
        atoms.append((a * power, -a * (1.0 - q) * power))
        power *= q
    return atoms


def _weight_u(x, a, q, nfactors=400):
    """Truncation of the biorthogonality weight
    (qx;q)_inf (qx/a;q)_inf / ((1-a) (q;q)_inf (aq;q)_inf (q/a;q)_inf).

    The (1-a) makes the weight integrate to exactly (1-q) over [a, 1],
    which is what the moment identity needs; the two-product Jackson
    integral evaluates to (1-q)(1-a) times the three infinite products.
    """
    num = 1.0
    den = 1.0 - a
    p = 1.0
    for _ in range(nfactors):
        num *= (1.0 - q * x * p) * (1.0 - q * x / a * p)
        den *= (1.0 - q * p) * (1.0 - a * q * p) * (1.0 - q / a * p)
        p *= q
    return num / den


def _relerr(got, want):
    scale = max(abs(want), 1e-30)
    return abs(got - want) / scale


def check_rs_moment_u(params, rng, opts):
    """Moments of the discrete weight on [a, 1] against (1-q) times the
    Rogers-Szego polynomial, in floating point."""
    a = Fraction(params.get("a", Fraction(-1, 2)))
    q = Fraction(params.get("q", Fraction(1, 2)))
    max_m = params.get("max_m", 4)
    K = params.get("K", 200)
    af, qf = float(a), float(q)
    atoms = [(x, w * _weight_u(x, af, qf)) for x, w in
             _jackson_atoms(af, qf, K)]
    worst = 0.0
    lhs = rhs = 0.0
    for m in range(max_m + 1):
        lhs = math.fsum(w * x ** m for x, w in atoms)
        poly = rogers_szego("F", m, q)
        value = poly.evaluate(a) if hasattr(poly, "evaluate") else poly
        rhs = float((1 - q) * value)
        worst = max(worst, _relerr(lhs, rhs))
    status = "numeric-pass" if worst <= opts.tolerance else "numeric-fail"
    return Outcome(status, lhs, rhs, max_m + 1,
                   f"max relative error {worst:.2e} over m<={max_m}")


def check_bf_u_integral(params, rng, opts):
    """The n-fold interaction integral of the [a, 1] weight against its
    closed form, in floating point."""
    a = Fraction(params.get("a", Fraction(-1, 2)))
    q = Fraction(params.get("q", Fraction(1, 2)))
    n = params.get("n", 2)
    k = params.get("k", 1)
    K = params.get("K", 200)
    af, qf = float(a), float(q)
    atoms = [(x, w * _weight_u(x, af, qf)) for x, w in
             _jackson_atoms(af, qf, K)]
    if n == 1:
        lhs = math.fsum(w for _, w in atoms)
    elif n == 2:
        parts = []
        for x1, w1 in atoms:
            row = math.fsum(
                w2 * delta_product((x1, x2), qf, k, "D2")
                for x2, w2 in atoms)
            parts.append(w1 * row)
        lhs = math.fsum(parts)
    else:
        raise KeyError("float check supports n in {1, 2}")
    pref = ((1 - q) ** n * (-a) ** (k * n * (n - 1) // 2)
            * _int_qpow(q, k * k * math.comb(n, 3)
                        - (k * (k - 1) // 2) * math.comb(n, 2)))
    prod = Fraction(1)
    for i in range(1, n + 1):
        prod *= q_pochhammer(q, q, k * i) / q_pochhammer(q, q, k)
    rhs = float(pref * prod)
    err = _relerr(lhs, rhs)
    status = "numeric-pass" if err <= opts.tolerance else "numeric-fail"
    return Outcome(status, lhs, rhs, len(atoms) ** n,
                   f"relative error {err:.2e}")

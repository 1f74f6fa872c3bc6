"""Ring axioms, series recurrences, quadratic extensions, gamma values,
deterministic sampling, and the scalar text grammar."""

from fractions import Fraction

import pytest

from hankelpf.errors import (ConstantTermNotOne, DivisionByZero,
                             ExhaustedAfterKRetries, IncompatibleTags,
                             ParseError, PoleAtQEqualsOne,
                             UnsupportedArgument, ZeroConstantDenominator)
from hankelpf.scalars import (HalfGamma, LaurentPoly, QuadExt, RatFunc,
                              TruncSeries, UniPoly, derive_rng, format_scalar,
                              gamma_exact, laurent, laurent_gen, omega,
                              parse_scalar, poly_gen, q_gamma_int, quadext,
                              ratfunc, sadd, sample_rational, scalar_arith,
                              sdiv, series_div, series_sqrt, smul, spow,
                              sqrt2, ssub, unipoly)


# ---------------------------------------------------------------- ring axioms

def _rand_fraction(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _rand_unipoly(rng):
    return unipoly("a", [_rand_fraction(rng) for _ in range(rng.randint(1, 3))])


def _rand_laurent(rng):
    return laurent("q", rng.randint(-2, 0),
                   [_rand_fraction(rng) for _ in range(rng.randint(1, 3))])


def _rand_ratfunc(rng):
    den = []
    while not any(den):
        den = [_rand_fraction(rng) for _ in range(rng.randint(1, 2))]
    return ratfunc("a", [_rand_fraction(rng) for _ in range(rng.randint(1, 3))],
                   den)


def _rand_omega(rng):
    w = omega()
    return _rand_fraction(rng) + _rand_fraction(rng) * w


def _rand_sqrt2(rng):
    s = sqrt2()
    return _rand_fraction(rng) + _rand_fraction(rng) * s


def _rand_series(rng):
    return TruncSeries("z", 4, [_rand_fraction(rng) for _ in range(5)])


SCALAR_MAKERS = [
    ("rational", _rand_fraction),
    ("unipoly", _rand_unipoly),
    ("laurent", _rand_laurent),
    ("ratfunc", _rand_ratfunc),
    ("omega", _rand_omega),
    ("sqrt2", _rand_sqrt2),
    ("series", _rand_series),
]


@pytest.mark.parametrize("tag,maker", SCALAR_MAKERS, ids=[t for t, _ in SCALAR_MAKERS])
def test_ring_axioms_random_triples(tag, maker):
    rng = derive_rng("ring-axioms", tag)
    for _ in range(1000):
        a, b, c = maker(rng), maker(rng), maker(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + 0 == a
        assert a * 1 == a
        assert a + b - b == a


def test_rational_canonical_form():
    x = sdiv(4, -6)
    assert x == Fraction(-2, 3)
    assert x.denominator == 3 and x.numerator == -2


def test_scalar_arith_examples():
    assert smul(Fraction(1, 2), Fraction(2, 3)) == Fraction(1, 3)
    assert ssub(Fraction(1, 2), Fraction(2, 3)) == Fraction(-1, 6)
    w = omega()
    assert smul(w, w) == -1 - w
    a = poly_gen("a")
    assert spow(a + 1, 2) == a * a + 2 * a + 1
    import operator
    assert scalar_arith(operator.add, a, 1) == a + 1


def test_incompatible_tags():
    a = poly_gen("a")
    q = poly_gen("q")
    with pytest.raises(IncompatibleTags):
        sadd(a, q)
    with pytest.raises(IncompatibleTags):
        smul(omega(), sqrt2())
    with pytest.raises(IncompatibleTags):
        sadd(TruncSeries("z", 2, [1, 0, 0]), omega())


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        sdiv(1, 0)
    with pytest.raises(DivisionByZero):
        sdiv(Fraction(3, 2), Fraction(0))
    with pytest.raises(DivisionByZero):
        sdiv(poly_gen("a"), 0)


def test_promotion_rational_into_others():
    a = poly_gen("a")
    assert 2 + a == unipoly("a", [2, 1])
    r = (a + 1) / (a - 1)
    assert isinstance(r, RatFunc)
    assert Fraction(1, 2) * r == (Fraction(1, 2) * a + Fraction(1, 2)) / (a - 1)
    w = omega()
    assert 1 + w == QuadExt(-1, -1, 1, 1, "w")


def test_laurent_negative_powers():
    q = laurent_gen("q")
    x = q ** -1 + 2 + q
    assert isinstance(x, LaurentPoly)
    assert x * q == 1 + 2 * q + q * q
    assert (q ** -3) * (q ** 3) == 1


def test_ratfunc_reduction():
    a = poly_gen("a")
    r = (a * a - 1) / (a - 1)
    # exact cancellation demotes to a polynomial
    assert r == a + 1
    assert isinstance(r, UniPoly)


def test_unipoly_evaluate():
    a = poly_gen("a")
    p = a ** 3 - 2 * a + 5
    assert p.evaluate(Fraction(1, 2)) == Fraction(1, 8) - 1 + 5


# -------------------------------------------------------------------- series

def test_series_sqrt_catalan_kernel():
    s = TruncSeries("z", 3, [1, -4, 0, 0])
    assert series_sqrt(s).coeffs == (1, -2, -2, -4)


def test_series_sqrt_trivial_cases():
    one = TruncSeries("z", 5, [1])
    assert series_sqrt(one) == one
    sq = TruncSeries("z", 4, [1, -2, 1, 0, 0])
    assert series_sqrt(sq).coeffs == (1, -1, 0, 0, 0)


def test_series_sqrt_needs_unit_constant():
    with pytest.raises(ConstantTermNotOne):
        series_sqrt(TruncSeries("z", 3, [2, 1, 0, 0]))


def test_series_sqrt_roundtrip_random():
    rng = derive_rng("series-sqrt-roundtrip")
    for _ in range(100):
        s = TruncSeries("z", 6, [1] + [_rand_fraction(rng) for _ in range(6)])
        t = series_sqrt(s)
        assert t * t == s
        assert t.coeffs[0] == 1


def test_series_div_examples():
    one = TruncSeries("z", 3, [1])
    geom = series_div(one, TruncSeries("z", 3, [1, -1]))
    assert geom.coeffs == (1, 1, 1, 1)
    q = series_div(TruncSeries("z", 3, [1, 0, -1, 0]),
                   TruncSeries("z", 3, [1, -1]))
    assert q.coeffs == (1, 1, 0, 0)


def test_series_div_roundtrip_random():
    rng = derive_rng("series-div-roundtrip")
    for _ in range(100):
        num = _rand_series(rng)
        den = _rand_series(rng)
        if den.coeffs[0] == 0:
            den = den + 1
        assert den * series_div(num, den) == num


def test_series_div_zero_constant_denominator():
    with pytest.raises(ZeroConstantDenominator):
        series_div(TruncSeries("z", 2, [1, 0, 0]),
                   TruncSeries("z", 2, [0, 1, 0]))


def _f21_series(a, b, c, scale, order):
    # Oracle: Taylor coefficients of 2F1(a,b;c;scale*x), hand recurrence.
    coeffs = []
    term = Fraction(1)
    for k in range(order + 1):
        coeffs.append(term)
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * scale
    return TruncSeries("x", order, coeffs)


def test_series_div_hypergeometric_quotient():
    num = _f21_series(Fraction(2, 3), Fraction(4, 3), Fraction(3, 2),
                      Fraction(27, 4), 4)
    den = _f21_series(Fraction(2, 3), Fraction(1, 3), Fraction(1, 2),
                      Fraction(27, 4), 4)
    q = series_div(num, den)
    assert q[2] == 3
    assert q.coeffs == (1, 1, 3, 12, 55)


def test_series_shift_down():
    s = TruncSeries("z", 4, [0, 0, 1, 2, 3])
    assert s.shift_down(2).coeffs == (1, 2, 3)
    with pytest.raises(ZeroConstantDenominator):
        s.shift_down(3)


# ------------------------------------------------------- quadratic extensions

def test_omega_is_primitive_cube_root():
    w = omega()
    assert w ** 3 == 1
    assert 1 + w + w ** 2 == 0


def test_sqrt2_squares_to_two():
    s = sqrt2()
    assert s * s == 2
    assert (3 * s - 1) * (3 * s + 1) == 17


def test_quadext_inverse_and_pow():
    w = omega()
    x = 2 + 3 * w
    assert x * x ** -1 == 1
    assert x ** -2 == (x * x) ** -1
    with pytest.raises(DivisionByZero):
        sdiv(1, 0 * w)


def test_quadext_generic_sqrt5():
    r5 = quadext(0, 5, 0, 1, "r")
    assert r5 * r5 == 5
    golden = (1 + r5) / 2
    assert golden * golden == golden + 1


def test_quadext_demotion():
    assert quadext(0, 2, Fraction(3, 4), 0, "s") == Fraction(3, 4)
    assert isinstance(quadext(0, 2, Fraction(3, 4), 0, "s"), Fraction)


# -------------------------------------------------------------------- gammas

def test_gamma_exact_values():
    assert gamma_exact(1) == HalfGamma(1, 0)
    assert gamma_exact(Fraction(1, 2)) == HalfGamma(1, 1)
    assert gamma_exact(Fraction(5, 2)) == HalfGamma(Fraction(3, 4), 1)
    assert gamma_exact(5) == HalfGamma(24, 0)


def test_gamma_exact_recurrence_up_to_20():
    x = Fraction(1, 2)
    while x <= 20:
        assert gamma_exact(x + 1) == x * gamma_exact(x)
        x += Fraction(1, 2)


def test_gamma_exact_rejects_bad_arguments():
    with pytest.raises(UnsupportedArgument):
        gamma_exact(Fraction(1, 3))
    with pytest.raises(UnsupportedArgument):
        gamma_exact(0)
    with pytest.raises(UnsupportedArgument):
        gamma_exact(Fraction(-3, 2))


def test_q_gamma_int_values_polynomial_q():
    q = poly_gen("q")
    assert q_gamma_int(0, q) == 1
    assert q_gamma_int(2, q) == 1 + q
    assert q_gamma_int(3, q) == (1 + q) * (1 + q + q ** 2)


def test_q_gamma_int_recurrence():
    q = Fraction(2, 3)
    for n in range(1, 8):
        bracket = (1 - q ** n) / (1 - q)
        assert q_gamma_int(n, q) == bracket * q_gamma_int(n - 1, q)


def test_q_gamma_int_matches_pochhammer_quotient():
    q = Fraction(1, 5)
    for n in range(6):
        poch = 1
        for j in range(1, n + 1):
            poch *= 1 - q ** j
        assert q_gamma_int(n, q) == poch / (1 - q) ** n


def test_q_gamma_int_errors():
    with pytest.raises(PoleAtQEqualsOne):
        q_gamma_int(3, 1)
    with pytest.raises(PoleAtQEqualsOne):
        q_gamma_int(2, Fraction(1))
    with pytest.raises(UnsupportedArgument):
        q_gamma_int(-1, Fraction(1, 2))


def test_half_gamma_arithmetic():
    g = gamma_exact(Fraction(5, 2)) * gamma_exact(Fraction(3, 2))
    # (3/4)sqrt(pi) * (1/2)sqrt(pi) carries pi^1
    assert g == HalfGamma(Fraction(3, 8), 2)
    assert (g / gamma_exact(Fraction(1, 2)) / gamma_exact(Fraction(1, 2))
            ).to_fraction() == Fraction(3, 8)
    with pytest.raises(IncompatibleTags):
        gamma_exact(Fraction(1, 2)).to_fraction()


# ------------------------------------------------------------------ sampling

def test_sample_rational_deterministic():
    for index in range(10):
        x = sample_rational(7, index)
        y = sample_rational(7, index)
        assert x == y
    assert any(sample_rational(7, i) != sample_rational(8, i)
               for i in range(10))


def test_sample_rational_avoid_predicate():
    for i in range(50):
        assert sample_rational(3, i, avoid=lambda x: x == 0) != 0


def test_sample_rational_hundred_admissible_q_points():
    bad = {Fraction(0), Fraction(1), Fraction(-1)}
    vals = [sample_rational(1, i, avoid=lambda x: x in bad)
            for i in range(100)]
    assert len(vals) == 100
    assert all(v not in bad for v in vals)
    assert all(abs(v.numerator) <= 10 and v.denominator <= 10 for v in vals)


def test_sample_rational_exhaustion():
    with pytest.raises(ExhaustedAfterKRetries):
        sample_rational(1, 0, avoid=lambda x: True, max_retries=25)


def test_derive_rng_stable_streams():
    a = derive_rng("stream", "one")
    b = derive_rng("stream", "one")
    assert [a.randint(0, 10 ** 9) for _ in range(5)] == \
           [b.randint(0, 10 ** 9) for _ in range(5)]


# ------------------------------------------------------------------- grammar

def test_format_and_parse_roundtrip():
    a = poly_gen("a")
    cases = [
        Fraction(7),
        Fraction(-3, 4),
        a ** 2 + 2 * a - Fraction(1, 2),
        laurent_gen("q") ** -1,
        TruncSeries("z", 3, [1, -2, -2, -4]),
        (a ** 2 - 1) / (a + 2),
    ]
    for x in cases:
        text = format_scalar(x)
        assert parse_scalar(text) == x


def test_parse_scalar_examples():
    assert parse_scalar("7") == 7
    assert parse_scalar("-3/4") == Fraction(-3, 4)
    p = parse_scalar("a^2 + 2*a - 1/2")
    a = poly_gen("a")
    assert p == a ** 2 + 2 * a - Fraction(1, 2)
    assert parse_scalar("q^-1") == laurent_gen("q") ** -1
    s = parse_scalar("[1, -2, -2, -4] @z up to 3")
    assert s == TruncSeries("z", 3, [1, -2, -2, -4])


def test_parse_scalar_quadratic_context():
    from hankelpf.scalars import QuadContext
    ctx = QuadContext("w", -1, -1)
    x = parse_scalar("1 + 2*w", ctx)
    assert x == 1 + 2 * omega()
    assert parse_scalar("w^2", ctx) == omega() ** 2
    # without the context the same text is a polynomial
    assert isinstance(parse_scalar("1 + 2*w"), UniPoly)


def test_parse_scalar_rejects_garbage():
    for bad in ["", "  ", "a + b", "1 +", "2**3", "[1, 2] @z up to 3",
                "(1)/(0)", "a^"]:
        with pytest.raises(ParseError):
            parse_scalar(bad)


def test_format_scalar_negative_leading():
    a = poly_gen("a")
    assert format_scalar(-a + 1) == "-a + 1"
    assert format_scalar(0 * a) == "0"

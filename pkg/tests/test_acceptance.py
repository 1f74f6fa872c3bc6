"""Acceptance battery: twelve end-to-end criteria, one test each.

Every test drives the public harness (run_check over the registered
grids), pins the documented spot values, and asserts its wall-clock
budget. Run with -v for the one-line-per-criterion view.
"""

import time
from fractions import Fraction as F

from hankelpf.harness import CheckParams, get_identity, run_check, \
    suite_exit_code, summarize
from hankelpf.harness.checks_integrals import _lqj_instance
from hankelpf.harness.checks_qpoly import _gx_rhs, _rs_pfaffian
from hankelpf.harness.common import rand_fraction, rand_q, seq_pfaffian
from hankelpf.qcalc import askey_A_n, askey_lhs_exact
from hankelpf.scalars import derive_rng, poly_gen
from hankelpf.sequences import omega_specialization


def _run(identity, params, **kw):
    report = run_check(CheckParams(identity, dict(params), **kw))
    return report


def _run_grid(identity, level="full", **kw):
    spec = get_identity(identity)
    grid = spec.smoke if level == "smoke" else spec.full
    return [_run(identity, params, **kw) for params in grid]


def _all_verified(reports):
    bad = [(r.identity, r.params, r.status, r.note)
           for r in reports if r.status != "verified"]
    assert not bad, f"non-verified: {bad}"


# 1. headline Pfaffian products ------------------------------------- < 1 s

def test_headline_pfaffian_products_close_in_product_form():
    start = time.perf_counter()
    motzkin = [_run("motzkin-pf", {"n": n}) for n in range(1, 6)]
    _all_verified(motzkin)
    assert [r.lhs for r in motzkin] == ["1", "5", "45", "585", "9945"]
    delannoy = [_run("delannoy-pf", {"n": n}) for n in range(1, 6)]
    _all_verified(delannoy)
    assert delannoy[1].lhs == "72"
    schroeder = [_run("schroeder-pf", {"n": n}) for n in range(1, 6)]
    _all_verified(schroeder)
    assert schroeder[1].lhs == "80"
    assert time.perf_counter() - start < 1.0


# 2. block-moment closed forms, all eight flavours ------------------ < 60 s

def test_block_moment_hyperpfaffians_all_cases():
    start = time.perf_counter()
    for case in ("a1", "a2", "a3", "b1", "b2", "b3", "d1", "d2"):
        reports = _run_grid(f"tilden-{case}")
        _all_verified(reports)
        sizes = {(r.params["l"], r.params["n"]) for r in reports}
        assert {(2, n) for n in (1, 2, 3, 4)} <= sizes
        assert {(4, 1), (4, 2)} <= sizes
    spot = _run("tilden-a2", {"case": "a2", "l": 2, "n": 2})
    assert spot.lhs == "5*a^4" == spot.rhs
    spot = _run("tilden-d2", {"case": "d2", "l": 2, "n": 1})
    assert spot.lhs == "w" == spot.rhs
    assert time.perf_counter() - start < 60.0


# 3. little q-Jacobi moment Pfaffian -------------------------------- < 10 s

def test_little_qjacobi_pfaffian_random_triples():
    start = time.perf_counter()
    _all_verified(_run_grid("little-qjacobi-pf"))
    rng = derive_rng("acceptance", "lqj-spot")
    for _ in range(5):
        q = rand_q(rng)
        a = rand_fraction(rng, lo=1, hi=9, den=7)
        b = rand_fraction(rng, lo=1, hi=9, den=7)
        lhs, rhs = _lqj_instance(1, 0, a, b, q)
        closed = (1 - q) * (1 - a * q) / (1 - a * b * q * q)
        assert lhs == rhs == closed
    assert time.perf_counter() - start < 10.0


# 4. Rogers-Szego type Pfaffians, symbolic weight ------------------- < 30 s

def test_rogers_szego_pfaffians_symbolic():
    start = time.perf_counter()
    for variant in ("u-rm1", "u-r0", "v-rm1", "v-r0"):
        _all_verified(_run_grid(f"asc-{variant}"))
    a = poly_gen("a")
    for q in (F(1, 2), F(1, 3), F(2, 5), F(3, 7), F(1, 7)):
        assert _rs_pfaffian("F", -3, 1, q) == 1 - q
        assert _rs_pfaffian("G", -2, 1, q) == (1 - q) * (1 + a)
    assert time.perf_counter() - start < 30.0


# 5. q-deformed beta-type integral ---------------------------------- < 60 s

def test_q_beta_integral_grid():
    start = time.perf_counter()
    _all_verified(_run_grid("ahk"))
    for q in (F(1, 2), F(2, 3), F(1, 5), F(3, 4), F(1, 3)):
        target = q / ((1 + q) * (1 + q + q * q))
        assert askey_lhs_exact(2, 1, 1, 1, q) == target
        assert q * askey_A_n(2, 1, 1, 1, q) == target
    assert time.perf_counter() - start < 60.0


# 6. beta-type n-fold integrals in closed form ---------------------- < 30 s

def test_beta_type_integrals_closed_forms():
    start = time.perf_counter()
    _all_verified(_run_grid("selberg"))
    _all_verified(_run_grid("aomoto"))
    _all_verified(_run_grid("selberg-phi"))
    spot = _run("selberg", {"n": 2, "alpha": 1, "beta": 1, "gamma": 1})
    assert spot.lhs == "1/6" == spot.rhs
    assert time.perf_counter() - start < 30.0


# 7. structural identities on random arrays ------------------------- < 120 s

def test_structural_identities_random_arrays():
    start = time.perf_counter()
    for identity in ("laplace-expansion", "hyper-minor", "subpf-indicator",
                     "msf-general", "msf-det", "pf-hf", "matsumoto",
                     "engine-exterior", "pf-definition"):
        reports = _run_grid(identity)
        _all_verified(reports)
        assert sum(r.terms for r in reports) >= 50, identity
    assert time.perf_counter() - start < 120.0


# 8. moment-array bridges over discrete measures -------------------- < 60 s

def test_moment_array_bridges():
    start = time.perf_counter()
    _all_verified(_run_grid("q-hankel"))
    classical = _run_grid("hankel-classical")
    _all_verified(classical)
    atoms_spot = [r for r in classical if "atoms" in r.params]
    assert atoms_spot and atoms_spot[0].lhs == "6"
    _all_verified(_run_grid("delta-integral"))
    _all_verified(_run_grid("pf-delta2"))
    assert time.perf_counter() - start < 60.0


# 9. generating functions and root-of-unity specializations --------- < 10 s

def test_generating_functions_and_specializations():
    start = time.perf_counter()
    for x in ("a", "b", "d"):
        _all_verified(_run_grid(f"gf-narayana-{x}"))
    for which in ("cat", "sch", "cbc", "del", "dcount", "motzkin", "ctc",
                  "motd"):
        _all_verified(_run_grid(f"special-{which}"))
    assert omega_specialization("ctc", 2) == 3
    _all_verified(_run_grid("gx-defs"))
    assert time.perf_counter() - start < 10.0


# 10. conjectured Pfaffian evaluations, ranges reported ------------- < 60 s

def test_conjectured_evaluations_report_ranges():
    start = time.perf_counter()
    reports = [_run(f"gx-{i}", {"index": i, "max_n": 5})
               for i in range(1, 6)]
    for report in reports[:4]:
        assert report.status == "verified"
        assert "verified range n<=5" in report.note
    assert reports[4].status == "counterexample"
    assert "verified range none" in reports[4].note
    assert suite_exit_code(reports) == 0
    ranges = summarize(reports)["conjecture_ranges"]
    assert ranges == {"gx-1": "n<=5", "gx-2": "n<=5", "gx-3": "n<=5",
                      "gx-4": "n<=5", "gx-5": "none"}
    assert seq_pfaffian("gx1", -1, 2) == 255 == _gx_rhs(1, 2)
    assert time.perf_counter() - start < 60.0


# 11. floating-point weight checks ---------------------------------- < 10 s

def test_floating_point_weight_checks():
    start = time.perf_counter()
    for report in _run_grid("rs-moment-u") + _run_grid("bf-u-integral"):
        assert report.status == "numeric-pass", (report.params, report.note)
    assert time.perf_counter() - start < 10.0


# 12. shifted displays: one verifies, one reports its mismatch ------ fast

def test_shifted_catalan_verifies_and_cbc_reports_mismatch():
    start = time.perf_counter()
    catalan = _run_grid("catalan-r")
    _all_verified(catalan)
    assert {(r.params["n"], r.params["r"]) for r in catalan} == \
        {(n, r) for n in (1, 2, 3) for r in (0, 1, 2, 3)}
    cbc = _run_grid("cbc-r")
    for report in cbc:
        assert report.status == "discrepancy-reported", report.params
        assert "derived value verifies" in report.note or \
            "(r-1)!" in report.note
    assert suite_exit_code(catalan + cbc) == 0
    assert time.perf_counter() - start < 60.0
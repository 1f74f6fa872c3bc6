"""Run registered checks, single or batched, with deterministic reports.

A report for a given (identity, params, seed) triple is byte-identical
across runs and across worker counts: the random stream is derived by
hashing that triple, results are aggregated in registry order, and
elapsed_ms stays 0 unless wall-clock timing is requested explicitly.
"""

import re
import time
from concurrent.futures import ProcessPoolExecutor

from ..errors import BudgetExceeded, PoleEncountered, SizeBudgetExceeded
from ..scalars.sampling import derive_rng
from .registry import GATING_STATUSES, filter_identities, get_identity
from .reports import (CheckParams, CheckReport, canonical_params,
                      params_json, scalar_text)

FAILING_REPORT_STATUSES = ("counterexample", "numeric-fail")


def run_check(p: CheckParams) -> CheckReport:
    """Execute one check and package the outcome as a report."""
    spec = get_identity(p.identity)
    rng = derive_rng(p.identity, canonical_params(p.params), p.seed)
    start = time.perf_counter()
    try:
        outcome = spec.check(dict(p.params), rng, p)
    except (SizeBudgetExceeded, BudgetExceeded, PoleEncountered) as exc:
        outcome = None
        status, lhs, rhs, terms = "budget-exceeded", "", "", 0
        note = f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if outcome is not None:
        status = outcome.status
        lhs = scalar_text(outcome.lhs)
        rhs = scalar_text(outcome.rhs)
        terms = int(outcome.terms)
        note = outcome.note
    return CheckReport(
        identity=p.identity,
        params=params_json(p.params),
        status=status,
        lhs=lhs,
        rhs=rhs,
        terms=terms,
        elapsed_ms=int(elapsed * 1000) if p.timing else 0,
        note=note)


def _run_task(p: CheckParams) -> CheckReport:
    # module-level so ProcessPoolExecutor can pickle it
    return run_check(p)


def suite_tasks(level="smoke", filter_tag=None, seed=0, trials=5,
                tolerance=1e-6, max_n=0, timing=False):
    """The ordered list of CheckParams a suite run will execute."""
    if level not in ("smoke", "full"):
        raise ValueError(f"level must be smoke or full, got {level!r}")
    tasks = []
    for spec in filter_identities(filter_tag):
        grid = spec.smoke if level == "smoke" else spec.full
        for params in grid:
            tasks.append(CheckParams(
                identity=spec.id, params=dict(params), seed=seed,
                trials=trials, tolerance=tolerance, max_n=max_n,
                timing=timing))
    return tasks


def run_suite(level="smoke", filter_tag=None, jobs=1, seed=0, trials=5,
              tolerance=1e-6, timing=False):
    """Run every applicable check, preserving registry order."""
    tasks = suite_tasks(level=level, filter_tag=filter_tag, seed=seed,
                        trials=trials, tolerance=tolerance, timing=timing)
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_task, tasks))
    else:
        reports = [run_check(p) for p in tasks]
    return reports


_RANGE_NOTE = re.compile(r"verified range ([^;\s]+)")
_UPPER_BOUND = re.compile(r"<=\s*(\d+)$")


def _range_order(text):
    """Sort key so wider verified ranges win the per-id merge."""
    if text == "none":
        return -1
    m = _UPPER_BOUND.search(text)
    return int(m.group(1)) if m else 0


def summarize(reports) -> dict:
    verified = 0
    failed = 0
    ranges = {}
    for report in reports:
        spec = get_identity(report.identity)
        if report.status in ("verified", "numeric-pass"):
            verified += 1
        elif (report.status in FAILING_REPORT_STATUSES
              and spec.status in GATING_STATUSES):
            failed += 1
        if spec.status == "conjecture":
            m = _RANGE_NOTE.search(report.note)
            if m:
                prev = ranges.get(report.identity)
                if prev is None or _range_order(m.group(1)) > _range_order(prev):
                    ranges[report.identity] = m.group(1)
    return {"verified": verified, "failed": failed,
            "conjecture_ranges": ranges}


def suite_exit_code(reports) -> int:
    """1 when a theorem-or-corollary check found a hard failure, else 0.

    Conjecture mismatches, reported discrepancies, and budget overruns
    never flip the exit status.
    """
    for report in reports:
        spec = get_identity(report.identity)
        if (spec.status in GATING_STATUSES
                and report.status in FAILING_REPORT_STATUSES):
            return 1
    return 0

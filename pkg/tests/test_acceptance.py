"""Acceptance suite.

Each criterion prints one PASS/FAIL line (run with -s to see them) and
its numbers land in build/acceptance_report.json.  The slope pipelines
are deterministic, so the report is reproducible bit for bit.
"""

import itertools
import json
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

from nwidths import (
    EmbeddingParams,
    coordinate_oracle,
    delta3_tail,
    derive,
    gelfand_exponent,
    kolmogorov_exponent,
    paper_allocation_step4,
    plan_bound,
    slope_check,
    table_mutation_check,
    table_scan,
)
from nwidths.params import INF, ExtReal

from cases import CLASSIFY_G, CLASSIFY_K, SLOPE_SETS

REPORT_PATH = Path(__file__).resolve().parent.parent / "build" / "acceptance_report.json"
WINDOW = (2**8, 2**18)
TOLERANCE = 0.05

_report = {}


def _record(criterion, passed, detail):
    _report[criterion] = {"passed": bool(passed), **detail}
    print("ACCEPTANCE %s: %s  %s" % (criterion, "PASS" if passed else "FAIL", detail))


@pytest.fixture(scope="module")
def slope_runs():
    runs = {}
    for case, params, kappa in SLOPE_SETS:
        start = time.monotonic()
        runs[case] = (params, kappa, slope_check(params, window=WINDOW), time.monotonic() - start)
    yield runs
    REPORT_PATH.parent.mkdir(exist_ok=True)
    REPORT_PATH.write_text(json.dumps(_report, indent=2, sort_keys=True) + "\n")


def test_criterion_1_exponent_table_fidelity():
    start = time.monotonic()
    mismatches = []
    for case, params, kappa in CLASSIFY_K:
        dec = kolmogorov_exponent(params)
        if (dec.case_id, dec.kappa) != (case, kappa):
            mismatches.append(("kolmogorov", case, str(dec.kappa)))
    for case, params, kappa in CLASSIFY_G:
        dec = gelfand_exponent(params)
        if (dec.case_id, dec.kappa) != (case, kappa):
            mismatches.append(("gelfand", case, str(dec.kappa)))
    elapsed = time.monotonic() - start
    _record(
        "1-exponent-table",
        not mismatches and elapsed < 1.0,
        {"sets": len(CLASSIFY_K) + len(CLASSIFY_G), "mismatches": mismatches, "seconds": round(elapsed, 3)},
    )
    assert mismatches == []
    assert elapsed < 1.0


def test_criterion_2_oracle_equivalence():
    start = time.monotonic()
    grid = [ExtReal(p) for p in (1, F(4, 3), F(3, 2), 2, 3, 4)] + [INF]
    worst = 0.0
    queries = 0
    for p1, p2 in itertools.product(grid, grid):
        if not p2 < p1:
            continue
        exponent = float(p2.inv() - p1.inv())
        for N in range(1, 13):
            for n in range(1, N + 1):
                expected = float(N - n + 1) ** exponent
                got = coordinate_oracle(p1, p2, N, n)
                worst = max(worst, abs(got - expected) / expected)
                queries += 1
    elapsed = time.monotonic() - start
    _record(
        "2-oracle-equivalence",
        worst <= 1e-12 and elapsed < 30.0,
        {"queries": queries, "worst_rel_err": worst, "seconds": round(elapsed, 3)},
    )
    assert worst <= 1e-12
    assert elapsed < 30.0


def test_criterion_3_slope_reproduction(slope_runs):
    detail = {}
    ok = True
    total = sum(elapsed for _, _, _, elapsed in slope_runs.values())
    for case, (params, kappa, result, elapsed) in slope_runs.items():
        target = -float(kappa)
        upper_err = abs(result.upper.fitted_slope - target)
        lower_err = abs(result.lower.fitted_slope - target)
        case_ok = upper_err <= TOLERANCE and lower_err <= TOLERANCE and result.pointwise_ok
        ok = ok and case_ok
        detail[case] = {
            "kappa": str(kappa),
            "upper_slope": round(result.upper.fitted_slope, 4),
            "lower_slope": round(result.lower.fitted_slope, 4),
            "upper_err": round(upper_err, 4),
            "lower_err": round(lower_err, 4),
            "pointwise_ok": result.pointwise_ok,
        }
    detail["seconds_total"] = round(total, 1)
    _record("3-slope-reproduction", ok and total < 300.0, detail)
    assert ok
    assert total < 300.0


def test_criterion_4_ideal_norm_boundedness(slope_runs):
    detail = {}
    ok = True
    for case, (params, kappa, result, _) in slope_runs.items():
        # per-octave sup of n^kappa * upper(n); the window factor between
        # dyadic sub-windows must stay below 10
        k = float(kappa)
        sups = {}
        for n, v in result.upper_seq.points:
            octave = n.bit_length() - 1
            sups[octave] = max(sups.get(octave, 0.0), float(n) ** k * v)
        factor = max(sups.values()) / min(sups.values())
        detail[case] = round(factor, 3)
        ok = ok and factor <= 10.0
    _record("4-ideal-norm-boundedness", ok, detail)
    assert ok


def test_criterion_5_table_scan():
    start = time.monotonic()
    report = table_scan()
    mutation_flagged = table_mutation_check()
    elapsed = time.monotonic() - start
    ok = (
        report.cells_tested >= 10_000
        and not report.violations
        and mutation_flagged
        and elapsed < 120.0
    )
    _record(
        "5-table-scan",
        ok,
        {
            "cells": report.cells_tested,
            "violations": len(report.violations),
            "error_counts": dict(sorted(report.error_counts.items())),
            "mutation_flagged": mutation_flagged,
            "seconds": round(elapsed, 1),
        },
    )
    assert report.cells_tested >= 10_000
    assert report.violations == []
    assert mutation_flagged
    assert elapsed < 120.0


def test_criterion_6_step4_plan_fidelity(slope_runs):
    shape_params = EmbeddingParams(s1=F(3, 2), s2=0, p1=2, p2=4, d=1, alpha=F(1, 5))
    plan = paper_allocation_step4(2**12, shape_params)
    bound = plan_bound(plan, shape_params)
    shape_ok = (
        plan.M1 == 8
        and plan.M2 == 23
        and bound.parts["delta1"] == 0.0
        and 0 < plan.epsilon < 1
        and plan.budget_spent() <= plan.n_total - 1
    )
    tails = {}
    tails_ok = True
    for case, (params, kappa, _, _) in slope_runs.items():
        mu = derive(params).mu
        worst = max(
            delta3_tail(params, M2) / 2.0 ** float(-M2 * mu) for M2 in range(0, 41)
        )
        tails[case] = round(worst, 3)
        tails_ok = tails_ok and worst <= 2.0
    _record(
        "6-step4-plan-fidelity",
        shape_ok and tails_ok,
        {"M1": plan.M1, "M2": plan.M2, "epsilon": str(plan.epsilon), "delta1": bound.parts["delta1"], "tail_ratios": tails},
    )
    assert shape_ok
    assert tails_ok

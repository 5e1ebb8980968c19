"""Turn the order-of-magnitude claims into assertable checks.

Three engines:

* fit_slope: least squares of log2(value) against log2(n), the
  constant-blind reading of "value ~ n^(-kappa)";
* axiom_suite: the s-number axioms (monotone in n, rank property) plus
  the duality transform on the finite-dimensional width models;
* table_scan: an exhaustive rational grid over (p1, p2, mu/d) checking
  one-case coverage against an independent transcription of the case
  tables, the duality symmetry of the exponents, consistency of the
  comparison clauses, and the compactness gate.

Both suites accept injectable model/classifier functions so mutation
runs can demonstrate that "0 violations" has teeth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from . import exponents, finwidths
from .allocator import (
    GREEDY,
    WidthSequence,
    lower_bound_sequence,
    upper_bound_sequence,
)
from .errors import (
    InsufficientPoints,
    NonPositiveValue,
    UnsupportedRegion,
    WidthError,
)
from .exponents import kolmogorov_exponent
from .params import INF, EmbeddingParams, ExtReal, is_compact

DEFAULT_WINDOW = (2**8, 2**18)
SLOPE_TOLERANCE = 0.05

_HALF = Fraction(1, 2)
_TWO = ExtReal(2)


@dataclass(frozen=True)
class SlopeReport:
    fitted_slope: float
    target: Optional[float]
    residual_rms: float
    window: tuple
    point_count: int


@dataclass(frozen=True)
class GridScanReport:
    cells_tested: int
    violations: list
    error_counts: dict

    @property
    def ok(self) -> bool:
        return not self.violations


def fit_slope(seq: WidthSequence, window=DEFAULT_WINDOW, target=None) -> SlopeReport:
    """Least-squares slope of log2(value) vs log2(n) inside a dyadic window."""
    n_min, n_max = window
    for edge in (n_min, n_max):
        if edge < 1 or (edge & (edge - 1)) != 0:
            raise ValueError("window edges must be powers of two, got %r" % (edge,))
    pts = [(n, v) for n, v in seq.points if n_min <= n <= n_max]
    if len(pts) < 5:
        raise InsufficientPoints(
            "need at least 5 points in [%d, %d], found %d" % (n_min, n_max, len(pts))
        )
    if any(v <= 0 for _, v in pts):
        raise NonPositiveValue("slope fit needs strictly positive values in the window")
    xs = np.log2([float(n) for n, _ in pts])
    ys = np.log2([v for _, v in pts])
    slope, intercept = np.polyfit(xs, ys, 1)
    resid = ys - (slope * xs + intercept)
    return SlopeReport(
        fitted_slope=float(slope),
        target=target,
        residual_rms=float(np.sqrt(np.mean(resid**2))),
        window=(n_min, n_max),
        point_count=len(pts),
    )


@dataclass(frozen=True)
class SlopeCheckResult:
    """Joint upper/lower slope certification for one parameter set."""

    upper: SlopeReport
    lower: SlopeReport
    kappa: Fraction
    pointwise_ok: bool
    within_tolerance: bool
    upper_seq: WidthSequence
    lower_seq: WidthSequence


def slope_check(
    params: EmbeddingParams,
    window=DEFAULT_WINDOW,
    strategy: str = GREEDY,
    tolerance: float = SLOPE_TOLERANCE,
) -> SlopeCheckResult:
    """Run both bound pipelines on the window grid and fit their slopes."""
    decision = kolmogorov_exponent(params)
    target = -float(decision.kappa)
    lo = int(math.log2(window[0]))
    hi = int(math.log2(window[1]))
    grid = [2**e for e in range(lo, hi + 1)]
    upper_seq = upper_bound_sequence(params, grid, strategy=strategy)
    lower_seq = lower_bound_sequence(params, grid)
    upper_fit = fit_slope(upper_seq, window, target=target)
    lower_fit = fit_slope(lower_seq, window, target=target)
    lower_at = dict(lower_seq.points)
    pointwise_ok = all(
        lower_at[n] <= v * (1 + 1e-9) for n, v in upper_seq.points if n in lower_at
    )
    within = (
        abs(upper_fit.fitted_slope - target) <= tolerance
        and abs(lower_fit.fitted_slope - target) <= tolerance
    )
    return SlopeCheckResult(
        upper=upper_fit,
        lower=lower_fit,
        kappa=decision.kappa,
        pointwise_ok=pointwise_ok,
        within_tolerance=within,
        upper_seq=upper_seq,
        lower_seq=lower_seq,
    )


DEFAULT_P_GRID = (
    ExtReal(1),
    ExtReal(Fraction(4, 3)),
    ExtReal(Fraction(3, 2)),
    ExtReal(2),
    ExtReal(3),
    ExtReal(4),
    INF,
)


def axiom_suite(
    model_k: Callable = finwidths.kolmogorov_model,
    model_g: Callable = finwidths.gelfand_model,
    p_grid=DEFAULT_P_GRID,
    n_values=range(4, 65),
) -> GridScanReport:
    """Axiom checks on the finite width models over a (p1, p2, N) grid.

    Per query: nonincreasing in n, zero exactly past the rank, the
    duality transform is an involution, and the dualized model agrees
    in value and clause tag (exactly on exact clauses, to float noise
    on order clauses, since the normalized formulas coincide).
    """
    violations = []
    errors = {"unsupported": 0}
    cells = 0

    def value(model, p1, p2, N, n):
        try:
            return model(p1, p2, N, n)
        except UnsupportedRegion:
            return None

    for p1 in p_grid:
        for p2 in p_grid:
            for N in n_values:
                cells += 1
                for kind, model, other in (
                    (finwidths.KOLMOGOROV, model_k, model_g),
                    (finwidths.GELFAND, model_g, model_k),
                ):
                    tag = "%s p1=%s p2=%s N=%d" % (kind, p1, p2, N)
                    widths = [value(model, p1, p2, N, n) for n in range(1, N + 2)]
                    if widths[0] is None:
                        errors["unsupported"] += 1
                        continue
                    seq = [w.value for w in widths]
                    if any(b > a + 1e-12 for a, b in zip(seq, seq[1:])):
                        violations.append((tag, "ps1-monotone"))
                    if seq[N] != 0.0 or any(v <= 0 for v in seq[:N]):
                        violations.append((tag, "ps4-rank"))
                    q = finwidths.FiniteWidthQuery(kind, p1, p2, N, max(1, N // 3))
                    if finwidths.dualize(finwidths.dualize(q)) != q:
                        violations.append((tag, "dual-involution"))
                    dq = finwidths.dualize(q)
                    mine = value(model, p1, p2, N, q.n)
                    dual = value(other, dq.p1, dq.p2, dq.N, dq.n)
                    if (mine is None) != (dual is None):
                        violations.append((tag, "dual-domain"))
                    elif mine is not None:
                        if mine.formula_tag != dual.formula_tag:
                            violations.append((tag, "dual-tag"))
                        scale = max(abs(mine.value), abs(dual.value), 1e-300)
                        tol = 0.0 if mine.fidelity == finwidths.EXACT else 1e-12 * scale
                        if abs(mine.value - dual.value) > tol:
                            violations.append((tag, "dual-value"))
    return GridScanReport(cells_tested=cells, violations=violations, error_counts=errors)


def _expected_case(kind: str, p1: ExtReal, p2: ExtReal, r: Fraction):
    """Independent transcription of the case tables.

    Returns ("case", [(case_id, kappa), ...]) listing every region that
    matches, or ("error", name).  Written as a flat predicate list so a
    classifier mutation cannot hide: the scan demands exactly one match
    agreeing with the classifier.
    """
    ip1, ip2 = p1.inv(), p2.inv()
    if r <= max(ip2 - ip1, Fraction(0)):
        return ("error", "NotCompact")
    matches = []
    if kind == exponents.KOLMOGOROV:
        if p1 < p2 and p2.is_inf:
            return ("error", "HypothesisFailure")
        if p1 <= p2 <= _TWO or (_TWO < p1 and p1 == p2):
            matches.append(("i", r))
        if r + ip1 > ip2 and p2 < p1:
            matches.append(("ii", r + ip1 - ip2))
        if p1 < _TWO < p2 and not p2.is_inf:
            if r == ip2:
                return ("error", "BoundaryCase")
            if r > ip2:
                matches.append(("iii", r + _HALF - ip2))
            else:
                matches.append(("iv", r * p2.frac / 2))
        if _TWO <= p1 < p2 and not p2.is_inf:
            theta = (ip1 - ip2) / (_HALF - ip2)
            if r == ip2 * theta:
                return ("error", "BoundaryCase")
            if r > ip2 * theta:
                matches.append(("v", r + ip1 - ip2))
            else:
                matches.append(("vi", r * p2.frac / 2))
    else:
        if p1 < p2 and p1 == 1:
            return ("error", "HypothesisFailure")
        if (_TWO <= p1 and p1 <= p2) or (p1 == p2 and p1 < _TWO):
            matches.append(("i", r))
        if r + ip1 > ip2 and p2 < p1:
            matches.append(("ii", r + ip1 - ip2))
        conj_inv = 1 - ip1
        if 1 < p1 < _TWO < p2:
            if r == conj_inv:
                return ("error", "BoundaryCase")
            if r > conj_inv:
                matches.append(("iii", r + ip1 - _HALF))
            else:
                matches.append(("iv", r / (2 * conj_inv)))
        if 1 < p1 < p2 <= _TWO:
            theta1 = (ip1 - ip2) / (ip1 - _HALF)
            if r == conj_inv * theta1:
                return ("error", "BoundaryCase")
            if r > conj_inv * theta1:
                matches.append(("v", r + ip1 - ip2))
            else:
                matches.append(("vi", r / (2 * conj_inv)))
    return ("case", matches)


def _default_mu_grid():
    return tuple(Fraction(k, 60) for k in range(1, 121))


def table_scan(
    p_grid=None,
    mu_grid=None,
    kolmogorov_ratio: Callable = exponents.kolmogorov_exponent_ratio,
    gelfand_ratio: Callable = exponents.gelfand_exponent_ratio,
    check_full_params: bool = True,
) -> GridScanReport:
    """Scan the rational (p1, p2, mu/d) grid; zero violations expected.

    Checks (a) exactly-one-case coverage against the independent
    predicate table, (b) the duality symmetry
    kappa_c(p1, p2, mu/d) == kappa_d(p2', p1', mu/d), (c) consistency
    of the comparison flags (a~c and a~d imply c~d), and (d) agreement
    of the compactness gate with full-parameter classification.
    """
    if p_grid is None:
        p_grid = (
            ExtReal(1),
            ExtReal(Fraction(8, 7)),
            ExtReal(Fraction(4, 3)),
            ExtReal(Fraction(3, 2)),
            ExtReal(2),
            ExtReal(Fraction(5, 2)),
            ExtReal(3),
            ExtReal(4),
            ExtReal(8),
            INF,
        )
    if mu_grid is None:
        mu_grid = _default_mu_grid()
    violations = []
    error_counts = {}
    cells = 0

    def outcome(fn, p1, p2, r):
        try:
            return ("case", fn(p1, p2, r))
        except WidthError as err:
            return ("error", type(err).__name__)

    for p1 in p_grid:
        for p2 in p_grid:
            for r in mu_grid:
                cells += 1
                cell = "p1=%s p2=%s mu/d=%s" % (p1, p2, r)
                for kind, fn in (
                    (exponents.KOLMOGOROV, kolmogorov_ratio),
                    (exponents.GELFAND, gelfand_ratio),
                ):
                    got = outcome(fn, p1, p2, r)
                    want = _expected_case(kind, p1, p2, r)
                    if got[0] == "error":
                        error_counts[got[1]] = error_counts.get(got[1], 0) + 1
                        if want != ("error", got[1]):
                            violations.append((cell, "%s-unexpected-error" % kind))
                        continue
                    if want[0] == "error":
                        violations.append((cell, "%s-missing-error" % kind))
                        continue
                    if len(want[1]) != 1:
                        violations.append((cell, "%s-coverage" % kind))
                        continue
                    case_id, kappa = want[1][0]
                    dec = got[1]
                    if dec.case_id != case_id or dec.kappa != kappa:
                        violations.append((cell, "%s-case-mismatch" % kind))

                # duality symmetry at fixed mu/d
                g = outcome(gelfand_ratio, p1, p2, r)
                k = outcome(kolmogorov_ratio, p2.conjugate(), p1.conjugate(), r)
                if g[0] == "case" and k[0] == "case":
                    if g[1].kappa != k[1].kappa:
                        violations.append((cell, "duality-kappa"))
                elif (g[0] == "case") != (k[0] == "case"):
                    violations.append((cell, "duality-domain"))
                elif g[1] != k[1]:
                    violations.append((cell, "duality-error-kind"))

                verdict = exponents.compare_widths_ratio(p1, p2, r)
                if verdict.a_sim_c and verdict.a_sim_d and not verdict.c_sim_d:
                    violations.append((cell, "comparison-consistency"))
                for flag, prefix in (
                    (verdict.a_sim_c, "i-"),
                    (verdict.a_sim_d, "ii-"),
                    (verdict.c_sim_d, "iii-"),
                ):
                    if flag and not any(t.startswith(prefix) for t in verdict.matched_clauses):
                        violations.append((cell, "comparison-untagged-flag"))

                if check_full_params:
                    # realize (p1, p2, mu/d) with d = 1, delta = r, alpha = r + 1
                    params = EmbeddingParams(
                        s1=r + (p1.inv() - p2.inv()),
                        s2=0,
                        p1=p1,
                        p2=p2,
                        d=1,
                        alpha=r + 1,
                    )
                    compact = is_compact(params)
                    k_ratio = outcome(kolmogorov_ratio, p1, p2, r)
                    if compact != (k_ratio != ("error", "NotCompact")):
                        violations.append((cell, "compactness-gate"))
                    try:
                        full = exponents.kolmogorov_exponent(params)
                        full_out = ("case", (full.case_id, full.kappa))
                    except WidthError as err:
                        full_out = ("error", type(err).__name__)
                    ratio_out = (
                        ("case", (k_ratio[1].case_id, k_ratio[1].kappa))
                        if k_ratio[0] == "case"
                        else k_ratio
                    )
                    if full_out != ratio_out:
                        violations.append((cell, "full-vs-ratio"))
    return GridScanReport(cells_tested=cells, violations=violations, error_counts=error_counts)


def theta_inverted_kolmogorov_model(p1, p2, N: int, n: int) -> finwidths.ModelWidth:
    """Deliberately wrong model (theta replaced by 1/theta); mutation fodder."""
    w = finwidths.kolmogorov_model(p1, p2, N, n)
    p1, p2 = ExtReal(p1), ExtReal(p2)
    if w.formula_tag == "gauss-pow" and p1 != p2:
        ip1, ip2 = p1.inv(), p2.inv()
        theta = (ip1 - ip2) / (_HALF - ip2)
        xi = min(1.0, math.exp(float(ip2) * math.log(N) - 0.5 * math.log(n)))
        return finwidths.ModelWidth(xi ** float(1 / theta), w.fidelity, w.formula_tag)
    return w


def kappa_corrupted_kolmogorov_ratio(p1, p2, r):
    """Deliberately wrong classifier (kappa doubled in case vi); mutation fodder."""
    dec = exponents.kolmogorov_exponent_ratio(p1, p2, r)
    if dec.case_id == "vi":
        return replace(dec, kappa=dec.kappa * 2)
    return dec


def axiom_mutation_check() -> bool:
    """True when the axiom suite flags the theta-inverted model."""
    report = axiom_suite(model_k=theta_inverted_kolmogorov_model)
    return len(report.violations) >= 1


def table_mutation_check() -> bool:
    """True when the table scan flags the kappa-corrupted classifier."""
    small_mu = tuple(Fraction(k, 24) for k in range(1, 25))
    report = table_scan(
        mu_grid=small_mu,
        kolmogorov_ratio=kappa_corrupted_kolmogorov_ratio,
        check_full_params=False,
    )
    return len(report.violations) >= 1

"""Upper and lower width-bound sequences for the block-diagonal embedding.

The embedding l_{q1}(2^{j*delta} l_{p1}(alpha)) -> l_{q2}(l_{p2})
restricted to cell (j, i) acts like 2^(-j*delta - i*alpha) times the
identity on l_p^{M_{j,i}}, with M_{j,i} taken as the surrogate count
2^(d(j+i)) throughout (exact lattice counts only perturb constants).
An upper bound at budget n is therefore

    sum over cells of  scale(j,i) * width(M_{j,i}, n_{j,i})

over any split n - 1 = sum (n_{j,i} - 1).  Three allocation strategies
produce such splits:

* "paper-step4": full rank up to diagonal M1, power-law budgets
  [n^(1-eps) 2^(i*z1) 2^(j*z2)] on the band M1 < j+i <= M2, nothing
  beyond; applies in the small-mu regime mu < d/tau (cases iv and vi).
* "paper-step3": the head/tail split at one diagonal M with the
  quasi-norm route sum_m L(P_m) * n^(-1/s); applies for mu > d/tau
  (cases iii and v).
* "greedy": marginal-gain water filling, one budget unit at a time to
  the cell whose term drops the most, ties to the smaller diagonal and
  then the smaller j.  Works in every compact non-limiting regime.

Lower bounds factor a single cell through the embedding: the cell
(j, 0) or (0, i) of size N contributes scale * width(N, m) at every
budget n <= m, with the sample size m = N/4 in the large-mu regimes
and m = [N^(2/p2)] in the small-mu regimes.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import InfeasibleConstraints, RegimeMismatch
from .exponents import kolmogorov_exponent
from .finwidths import kolmogorov_model
from .params import EmbeddingParams, ExtReal, derive

GREEDY = "greedy"
PAPER_STEP4 = "paper-step4"
PAPER_STEP3 = "paper-step3"

UPPER = "upper"
LOWER = "lower"

_HALF = Fraction(1, 2)
_TWO = ExtReal(2)

MAX_DIAGONAL_CAP = 400


@dataclass(frozen=True)
class AllocationPlan:
    """A budget split over cells; cells beyond M2 implicitly keep n_{j,i} = 1.

    n_total is the budget the plan actually consumes, via the identity
    n_total - 1 = sum (n_{j,i} - 1).  epsilon, z1, z2 are exact
    rationals for the step-4 strategy and None otherwise.
    """

    n_total: int
    M1: Optional[int]
    M2: int
    epsilon: Optional[Fraction]
    z1: Optional[Fraction]
    z2: Optional[Fraction]
    budgets: dict
    strategy: str

    def budget_spent(self) -> int:
        return sum(b - 1 for b in self.budgets.values())


@dataclass(frozen=True)
class WidthSequence:
    """Ordered (n, value) pairs of one bound; n strictly increasing."""

    points: list
    kind: str  # UPPER or LOWER
    label: str = ""


@dataclass(frozen=True)
class IdealNormParams:
    """Exponent r and the quasi-triangle power rho of the s-number ideal.

    rho is documentation only: the numeric pipeline sums block bounds
    directly instead of invoking the rho-triangle inequality.
    """

    r: float
    rho: float = 1.0

    def __post_init__(self):
        if not 0 < self.rho <= 1:
            raise ValueError("rho must lie in (0, 1]")
        if self.r <= 0:
            raise ValueError("r must be positive")


@dataclass(frozen=True)
class PlanBound:
    """Evaluated upper bound of a plan, with its additive parts."""

    value: float
    parts: dict


def strict_floor(x) -> int:
    """Largest integer strictly smaller than x (exact for Fraction input)."""
    if isinstance(x, Fraction):
        f = math.floor(x)
        return f - 1 if f == x else f
    f = math.floor(x)
    return f - 1 if f == x else f


def _pow2_strict_floor(e: Fraction) -> int:
    """Largest integer strictly below 2**e, exact when e is integral."""
    if e.denominator == 1:
        return 2 ** int(e) - 1 if e >= 0 else 0
    return math.floor(2.0 ** float(e))


def _log2_exact(n: int) -> Optional[int]:
    return n.bit_length() - 1 if n > 0 and n & (n - 1) == 0 else None


def scale_tail(a_exp: Fraction, b_exp: Fraction, m_min: int) -> float:
    """sum over m >= m_min, j+i = m of 2^(-j*a_exp - i*b_exp), in closed form.

    Requires both exponents positive and distinct (the non-limiting
    case makes them distinct after any common shift).
    """
    a_exp, b_exp = Fraction(a_exp), Fraction(b_exp)
    if a_exp <= 0 or b_exp <= 0:
        raise ValueError("tail exponents must be positive (compactness)")
    if a_exp == b_exp:
        raise ValueError("tail closed form needs distinct exponents (non-limiting case)")
    lo, hi = min(a_exp, b_exp), max(a_exp, b_exp)
    q = 2.0 ** float(lo - hi)
    head = 2.0 ** float(-m_min * lo) / (1.0 - 2.0 ** float(-lo))
    sub = q * 2.0 ** float(-m_min * hi) / (1.0 - 2.0 ** float(-hi))
    return (head - sub) / (1.0 - q)


def delta3_tail(params: EmbeddingParams, M2: int) -> float:
    """The pure scale tail sum_{m > M2} sum_{j+i=m} 2^(-j*delta - i*alpha)."""
    der = derive(params)
    return scale_tail(der.delta, params.alpha, M2 + 1)


def _growth_exponent(params: EmbeddingParams) -> Fraction:
    # d * (1/p2 - 1/p1)_+ : the norm of an untouched cell grows like M^(growth/d)
    return params.d * max(params.p2.inv() - params.p1.inv(), Fraction(0))


def _width_value_fn(p1: ExtReal, p2: ExtReal) -> Callable[[int, float, int], float]:
    """Precompiled Kolmogorov width value (N, log N, n) -> float.

    Same clause table as :func:`nwidths.finwidths.kolmogorov_model`,
    specialized once per exponent pair so the greedy loop stays cheap.
    """
    ip1, ip2 = p1.inv(), p2.inv()
    if p1 == p2 or (p1 < p2 and p2 <= _TWO):

        def flat(N, logN, n):
            return 1.0 if n <= N else 0.0

        return flat
    if p2 < p1:
        e = float(ip2 - ip1)

        def tail_count(N, logN, n):
            if n > N:
                return 0.0
            return math.exp(e * math.log(N - n + 1))

        return tail_count
    if p2.is_inf:
        raise RegimeMismatch("no Kolmogorov width model for p1 < p2 = inf")
    a = float(ip2)
    if p1 < _TWO:

        def gauss(N, logN, n):
            if n > N:
                return 0.0
            return min(1.0, math.exp(a * logN - 0.5 * math.log(n)))

        return gauss
    t = float((ip1 - ip2) / (_HALF - ip2))

    def gauss_pow(N, logN, n):
        if n > N:
            return 0.0
        return min(1.0, math.exp(a * logN - 0.5 * math.log(n))) ** t

    return gauss_pow


def _priority_fn(p1: ExtReal, p2: ExtReal) -> Callable[[int, float, int], float]:
    """Per-unit gain of the best lookahead grant, unscaled by the cell weight.

    priority(N, logN, b) = max over k >= 1 of
        (width(N, b) - width(N, b + k)) / k.

    A one-step rule would stall: the flat clauses and the Gaussian
    clause below its knee n = N^(2/p2) sit on plateaus where a single
    unit changes nothing, so the chord to the first useful point (the
    interior optimum of the convex stretch, or outright completion) is
    what ranks a cell.  Per clause:

    * flat: only completion helps, so 1 / (N - b + 1);
    * tail-count (concave drop): the chord slope grows with the
      horizon, so the completion chord width(b) / (N - b + 1) is exact;
    * Gaussian (plateau, then convex): the best of the completion
      chord, the one-step gain, and the chord to the stationary point
      of (width(b) - C x^(-s)) / (x - b), located by two fixed-point
      refinements of u = width(b) / (1 + s(1 - b/x)), u = C x^(-s).
    """
    ip1, ip2 = p1.inv(), p2.inv()
    if p1 == p2 or (p1 < p2 and p2 <= _TWO):

        def flat_priority(N, logN, b):
            if b > N:
                return 0.0
            return 1.0 / (N - b + 1)

        return flat_priority
    if p2 < p1:
        e = float(ip2 - ip1)

        def tail_priority(N, logN, b):
            if b > N:
                return 0.0
            return math.exp(e * math.log(N - b + 1)) / (N - b + 1)

        return tail_priority
    if p2.is_inf:
        raise RegimeMismatch("no Kolmogorov width model for p1 < p2 = inf")
    if p1 < _TWO:
        theta = 1.0
    else:
        theta = float((ip1 - ip2) / (_HALF - ip2))
    a = float(ip2)
    s = 0.5 * theta

    def gauss_priority(N, logN, b):
        if b > N:
            return 0.0
        logC = theta * a * logN

        def w(x):
            return min(1.0, math.exp(logC - s * math.log(x)))

        wb = w(b)
        best = wb / (N - b + 1)  # completion chord
        if b < N:
            best = max(best, wb - w(b + 1))
        # interior stationary chord
        u = wb / (1.0 + s)
        for _ in range(2):
            x = math.exp((logC - math.log(u)) / s)
            x = min(x, float(N))
            if x <= b + 1:
                break
            g = (wb - w(int(x))) / (x - b)
            best = max(best, g)
            u = wb / (1.0 + s * (1.0 - b / x))
        return best

    return gauss_priority


def _theta_machinery(params: EmbeddingParams):
    """(theta_eff, tau, h) of the Gaussian strata; elsewhere RegimeMismatch."""
    p1, p2 = params.p1, params.p2
    if p2.is_inf or not p1 < p2 or not _TWO < p2:
        raise RegimeMismatch(
            "paper allocation plans apply in the Gaussian strata "
            "p1 < 2 < p2 < inf or 2 <= p1 < p2 < inf"
        )
    if p1 < _TWO:
        theta_eff = Fraction(1)
    else:
        ip1, ip2 = p1.inv(), p2.inv()
        theta_eff = (ip1 - ip2) / (_HALF - ip2)
    tau = p2.frac / theta_eff
    h = 2 / theta_eff
    return theta_eff, tau, h


def _band_budget_exponents(params: EmbeddingParams, tau: Fraction, h: Fraction):
    """The deterministic (z1, z2, epsilon) inside the constraint region.

    For delta > alpha: z1 is the midpoint of its constraint
    alpha + z1/h < d/tau, z2 keeps 0 < (z1 - z2)/h < delta - alpha with
    z2 > 0, and epsilon = z1*tau/(h*d); roles swap for delta < alpha.
    """
    der = derive(params)
    d, alpha, delta = params.d, params.alpha, der.delta
    if delta > alpha:
        z1 = (h / 2) * (Fraction(d) / tau - alpha)
        z2 = z1 - h * min((delta - alpha) / 2, z1 / (2 * h))
        eps = z1 * tau / (h * d)
        ok = z1 > 0 and z2 > 0 and alpha + z1 / h < Fraction(d) / tau
        ok = ok and 0 < (z1 - z2) / h < delta - alpha
    else:
        z2 = (h / 2) * (Fraction(d) / tau - delta)
        z1 = z2 - h * min((alpha - delta) / 2, z2 / (2 * h))
        eps = z2 * tau / (h * d)
        ok = z1 > 0 and z2 > 0 and delta + z2 / h < Fraction(d) / tau
        ok = ok and 0 < (z2 - z1) / h < alpha - delta
    if not (ok and 0 < eps < 1):
        raise InfeasibleConstraints(
            "no valid (epsilon, z1, z2); the regime precondition should prevent this"
        )
    return z1, z2, eps


def paper_allocation_step4(n: int, params: EmbeddingParams) -> AllocationPlan:
    """Two-cut power-law plan for the small-mu regime mu < d/tau.

    M1 = [log2(n)/d - log2(log2 n)/d] and M2 = [(tau/h) log2(n)/d] with
    [.] the strictly-smaller floor (an integer maps to itself minus 1).
    Cells with j+i <= M1 get full rank M_{j,i} + 1; the band up to M2
    gets [n^(1-eps) 2^(i*z1) 2^(j*z2)], clamped to at least 1.
    """
    if n < 4:
        raise ValueError("step-4 plan needs n >= 4")
    decision = kolmogorov_exponent(params)
    if decision.case_id not in ("iv", "vi"):
        raise RegimeMismatch(
            "step-4 plan requires mu < d/tau (cases iv and vi); got case %s"
            % decision.case_id
        )
    _, tau, h = _theta_machinery(params)
    d = params.d
    L = _log2_exact(n)
    # M1 mixes an integer part with log2(log2 n); keep the exact path when
    # both logs are integers, otherwise fall back to floats
    if L is not None and _log2_exact(L) is not None:
        M1 = strict_floor(Fraction(L - _log2_exact(L), d))
    elif L is not None:
        M1 = strict_floor((L - math.log2(L)) / d)
    else:
        lg = math.log2(n)
        M1 = strict_floor((lg - math.log2(lg)) / d)
    M1 = max(M1, 0)
    if L is not None:
        M2 = strict_floor((tau / h) * Fraction(L, d))
    else:
        M2 = strict_floor(float(tau / h) * math.log2(n) / d)
    M2 = max(M2, M1 + 1)
    z1, z2, eps = _band_budget_exponents(params, tau, h)

    budgets = {}
    for m in range(0, M1 + 1):
        for j in range(0, m + 1):
            budgets[(j, m - j)] = 2 ** (d * m) + 1
    for m in range(M1 + 1, M2 + 1):
        for j in range(0, m + 1):
            i = m - j
            if L is not None:
                e = (1 - eps) * L + i * z1 + j * z2
                b = _pow2_strict_floor(e)
            else:
                b = strict_floor(n ** float(1 - eps) * 2.0 ** float(i * z1 + j * z2))
            budgets[(j, i)] = max(1, b)
    n_total = 1 + sum(b - 1 for b in budgets.values())
    return AllocationPlan(
        n_total=n_total,
        M1=M1,
        M2=M2,
        epsilon=eps,
        z1=z1,
        z2=z2,
        budgets=budgets,
        strategy=PAPER_STEP4,
    )


def paper_allocation_step3(n: int, params: EmbeddingParams) -> AllocationPlan:
    """Head/tail plan for the large-mu regime mu > d/tau (cases iii and v).

    Diagonal m <= M receives block budget 2^(dm), split evenly across
    its m+1 cells; the bound is evaluated through the ideal quasi-norm
    route rather than cell by cell.
    """
    if n < 2:
        raise ValueError("step-3 plan needs n >= 2")
    decision = kolmogorov_exponent(params)
    if decision.case_id not in ("iii", "v"):
        raise RegimeMismatch(
            "step-3 plan requires mu > d/tau (cases iii and v); got case %s"
            % decision.case_id
        )
    d = params.d
    L = _log2_exact(n)
    M = strict_floor(Fraction(L, d)) if L is not None else strict_floor(math.log2(n) / d)
    M = max(M, 1)
    budgets = {}
    for m in range(0, M + 1):
        share = max(1, 2 ** (d * m) // (m + 1))
        for j in range(0, m + 1):
            budgets[(j, m - j)] = share
    n_total = 2 * 2 ** (d * M)
    assert sum(b - 1 for b in budgets.values()) <= n_total - 1
    return AllocationPlan(
        n_total=n_total,
        M1=M,
        M2=M,
        epsilon=None,
        z1=None,
        z2=None,
        budgets=budgets,
        strategy=PAPER_STEP3,
    )


def greedy_allocation(n: int, params: EmbeddingParams, max_diagonal: int) -> AllocationPlan:
    """Marginal-gain water filling of n - 1 budget units over the cells."""
    state = _GreedyState(params, max_diagonal)
    state.run_to(n)
    budgets = {
        (state.js[ci], state.iis[ci]): state.budgets[ci] for ci in range(len(state.budgets))
    }
    return AllocationPlan(
        n_total=1 + state.grants,
        M1=None,
        M2=max_diagonal,
        epsilon=None,
        z1=None,
        z2=None,
        budgets=budgets,
        strategy=GREEDY,
    )


class _GreedyState:
    """Incremental greedy allocator; snapshots the bound at budget targets."""

    def __init__(self, params: EmbeddingParams, max_diagonal: int):
        der = derive(params)
        d = params.d
        growth = _growth_exponent(params)
        self.tail = scale_tail(
            der.delta - growth, params.alpha - growth, max_diagonal + 1
        )
        self.width = _width_value_fn(params.p1, params.p2)
        self.priority = _priority_fn(params.p1, params.p2)
        self.js, self.iis, self.Ns, self.logNs, self.scales = [], [], [], [], []
        for m in range(0, max_diagonal + 1):
            N = 2 ** (d * m)
            logN = m * d * math.log(2.0)
            for j in range(0, m + 1):
                i = m - j
                self.js.append(j)
                self.iis.append(i)
                self.Ns.append(N)
                self.logNs.append(logN)
                self.scales.append(2.0 ** float(-(j * der.delta + i * params.alpha)))
        k = len(self.js)
        self.budgets = [1] * k
        self.contribs = [self.scales[ci] * self.width(self.Ns[ci], self.logNs[ci], 1) for ci in range(k)]
        self.heap = [
            (-self._marginal(ci), self.js[ci] + self.iis[ci], self.js[ci], ci)
            for ci in range(k)
        ]
        heapq.heapify(self.heap)
        self.grants = 0

    def _marginal(self, ci: int) -> float:
        return self.scales[ci] * self.priority(
            self.Ns[ci], self.logNs[ci], self.budgets[ci]
        )

    def bound(self) -> float:
        return self.tail + math.fsum(self.contribs)

    def run_to(self, n: int) -> None:
        """Grant budget units until n - 1 grants are placed (or cells run out)."""
        while self.grants < n - 1 and self.heap:
            neg, m, j, ci = heapq.heappop(self.heap)
            if self.budgets[ci] > self.Ns[ci]:
                continue  # complete; retire the cell
            cur = self._marginal(ci)
            if -neg != cur:
                heapq.heappush(self.heap, (-cur, m, j, ci))
                continue
            self.budgets[ci] += 1
            self.grants += 1
            self.contribs[ci] = self.scales[ci] * self.width(
                self.Ns[ci], self.logNs[ci], self.budgets[ci]
            )
            if self.budgets[ci] <= self.Ns[ci]:
                heapq.heappush(self.heap, (-self._marginal(ci), m, j, ci))


def plan_bound(plan: AllocationPlan, params: EmbeddingParams) -> PlanBound:
    """Evaluate the upper bound a plan certifies, with its additive parts."""
    der = derive(params)
    d = params.d
    width = _width_value_fn(params.p1, params.p2)
    ln2 = math.log(2.0)

    def cell_term(j, i, b):
        N = 2 ** (d * (j + i))
        return (
            2.0 ** float(-(j * der.delta + i * params.alpha))
            * width(N, d * (j + i) * ln2, b)
        )

    if plan.strategy == PAPER_STEP4:
        delta1 = math.fsum(
            cell_term(j, i, b) for (j, i), b in plan.budgets.items() if j + i <= plan.M1
        )
        delta2 = math.fsum(
            cell_term(j, i, b) for (j, i), b in plan.budgets.items() if j + i > plan.M1
        )
        delta3 = scale_tail(der.delta, params.alpha, plan.M2 + 1)
        return PlanBound(
            value=delta1 + delta2 + delta3,
            parts={"delta1": delta1, "delta2": delta2, "delta3": delta3},
        )
    if plan.strategy == PAPER_STEP3:
        _, tau, h = _theta_machinery(params)
        inv_gamma = Fraction(3, 2) * der.mu / d - 1 / tau
        assert inv_gamma > 0
        inv_s = inv_gamma + 1 / h
        M = plan.M2
        N = 2 ** (d * M)
        band_exp = d * (1 / tau + inv_gamma)
        lp = math.fsum(
            2.0 ** float(-(j * der.delta + (m - j) * params.alpha) + m * band_exp)
            for m in range(0, M + 1)
            for j in range(0, m + 1)
        )
        lq = scale_tail(der.delta - d / tau, params.alpha - d / tau, M + 1)
        head = lp * 2.0 ** float(-d * M * inv_s)
        tail = lq * 2.0 ** float(-d * M / h)
        return PlanBound(value=head + tail, parts={"head": head, "tail": tail})
    if plan.strategy == GREEDY:
        cells = math.fsum(cell_term(j, i, b) for (j, i), b in plan.budgets.items())
        growth = _growth_exponent(params)
        tail = scale_tail(der.delta - growth, params.alpha - growth, plan.M2 + 1)
        return PlanBound(value=cells + tail, parts={"cells": cells, "tail": tail})
    raise ValueError("unknown strategy %r" % plan.strategy)


def default_max_diagonal(
    params: EmbeddingParams, kappa: Fraction, n_max: int, rel: float = 0.02
) -> int:
    """Smallest diagonal cap whose tail stays below rel * n_max^(-kappa)."""
    der = derive(params)
    growth = _growth_exponent(params)
    target = rel * float(n_max) ** float(-kappa)
    D = 1
    while D < MAX_DIAGONAL_CAP and scale_tail(
        der.delta - growth, params.alpha - growth, D + 1
    ) > target:
        D += 1
    return D


def _check_dyadic_grid(n_grid) -> list:
    grid = sorted(set(int(n) for n in n_grid))
    if not grid:
        raise ValueError("empty budget grid")
    for n in grid:
        if n < 1 or (n & (n - 1)) != 0:
            raise ValueError("budget grid must be dyadic, got %d" % n)
    return grid


def upper_bound_sequence(
    params: EmbeddingParams,
    n_grid,
    strategy: str = GREEDY,
    max_diagonal: Optional[int] = None,
) -> WidthSequence:
    """Upper-bound width sequence on a dyadic budget grid.

    The abscissa of each point is the budget the plan actually consumed
    (its n_total), so every (n, value) pair is a certified bound; a
    running minimum enforces the nonincreasing property.
    """
    grid = _check_dyadic_grid(n_grid)
    decision = kolmogorov_exponent(params)
    points = []
    if strategy == GREEDY:
        D = max_diagonal or default_max_diagonal(params, decision.kappa, grid[-1])
        state = _GreedyState(params, D)
        for n in grid:
            state.run_to(n)
            points.append((1 + state.grants, state.bound()))
    elif strategy in (PAPER_STEP4, PAPER_STEP3):
        make = paper_allocation_step4 if strategy == PAPER_STEP4 else paper_allocation_step3
        for n in grid:
            plan = make(n, params)
            points.append((plan.n_total, plan_bound(plan, params).value))
    else:
        raise ValueError("unknown strategy %r" % strategy)
    points.sort()
    merged = []
    for n, v in points:
        if merged and merged[-1][0] == n:
            merged[-1] = (n, min(merged[-1][1], v))
        else:
            merged.append((n, v))
    running = []
    best = math.inf
    for n, v in merged:
        best = min(best, v)
        running.append((n, best))
    return WidthSequence(points=running, kind=UPPER, label=strategy)


def lower_bound_sequence(params: EmbeddingParams, n_grid) -> WidthSequence:
    """Single-block factorization lower bounds on a dyadic budget grid.

    Scans the blocks (j, 0) and (0, i); a block of size N certifies
    value = scale * width(N, m) for every n <= m, where m = N/4 in the
    large-mu regimes and m = [N^(2/p2)] in the small-mu regimes.  At
    each n the best admissible block wins.
    """
    grid = _check_dyadic_grid(n_grid)
    decision = kolmogorov_exponent(params)
    der = derive(params)
    d, p1, p2 = params.d, params.p1, params.p2
    power_rule = decision.case_id in ("iv", "vi")
    n_max = grid[-1]
    candidates = []
    for scale_exp in (der.delta, params.alpha):
        idx = 0
        while idx <= 4000:
            N = 2 ** (d * idx)
            if power_rule:
                m = _pow2_strict_floor(Fraction(2 * d * idx) * p2.inv())
            else:
                m = N // 4
            if m >= 1:
                w = kolmogorov_model(p1, p2, N, m).value
                if w > 0:
                    candidates.append((m, 2.0 ** float(-idx * scale_exp) * w))
                if m >= n_max:
                    break
            idx += 1
    points = []
    for n in grid:
        admissible = [v for m, v in candidates if m >= n]
        if not admissible:
            raise AssertionError("no admissible block for n = %d" % n)
        points.append((n, max(admissible)))
    return WidthSequence(points=points, kind=LOWER, label="step5")


def ideal_norm(seq: WidthSequence, r: float) -> float:
    """sup over the sequence of n^(1/r) * value (the ideal quasi-norm proxy)."""
    if not seq.points:
        raise ValueError("empty width sequence")
    if r <= 0:
        raise ValueError("r must be positive")
    return max(float(n) ** (1.0 / r) * v for n, v in seq.points)

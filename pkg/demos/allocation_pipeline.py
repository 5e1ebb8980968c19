"""From a budget allocation to a certified slope.

The block-diagonal model of the weighted embedding assigns each cell
(j, i) the size 2^(d(j+i)) and the scale 2^(-j*delta - i*alpha).  An
upper width bound at budget n splits n - 1 units over the cells and
sums scale * width(size, budget); a lower bound factors one block
through the embedding.  Fitting log2(value) against log2(n) on a
dyadic grid reproduces the table exponent kappa without touching any
order constant.
"""

from fractions import Fraction as F

from nwidths import (
    EmbeddingParams,
    fit_slope,
    kolmogorov_exponent,
    lower_bound_sequence,
    paper_allocation_step4,
    plan_bound,
    upper_bound_sequence,
)

# the small-mu regime: mu = 3/4 < d/tau = 6/5, table case (vi), kappa = 5/16
PARAMS = EmbeddingParams(s1=F(53, 10), s2=0, p1=2, p2=F(5, 2), d=3, alpha=F(3, 4))
WINDOW = (2**8, 2**14)


def show_plan():
    plan = paper_allocation_step4(2**12, PARAMS)
    bound = plan_bound(plan, PARAMS)
    print("two-cut plan at n = 2^12: M1=%d M2=%d epsilon=%s" % (plan.M1, plan.M2, plan.epsilon))
    print("   full-rank zone cleared: delta1 = %g" % bound.parts["delta1"])
    print("   band + tail: delta2 = %.4g, delta3 = %.4g" % (bound.parts["delta2"], bound.parts["delta3"]))
    print("   bound %.4g valid at consumed budget n' = %d" % (bound.value, plan.n_total))


def show_slopes():
    decision = kolmogorov_exponent(PARAMS)
    grid = [2**e for e in range(8, 15)]
    upper = upper_bound_sequence(PARAMS, grid, strategy="greedy")
    lower = lower_bound_sequence(PARAMS, grid)
    print("\ncase %s, kappa = %s, target slope %.4f" % (decision.case_id, decision.kappa, -float(decision.kappa)))
    print("   n        lower        upper")
    lower_at = dict(lower.points)
    for n, v in upper.points:
        print("   %-8d %-12.4g %-12.4g" % (n, lower_at.get(n, float("nan")), v))
    up = fit_slope(upper, WINDOW, target=-float(decision.kappa))
    low = fit_slope(lower, WINDOW, target=-float(decision.kappa))
    print("   fitted slopes: upper %.4f, lower %.4f" % (up.fitted_slope, low.fitted_slope))


if __name__ == "__main__":
    show_plan()
    show_slopes()

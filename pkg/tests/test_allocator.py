import math
from fractions import Fraction as F

import pytest

from nwidths import (
    EmbeddingParams,
    RegimeMismatch,
    WidthSequence,
    default_max_diagonal,
    delta3_tail,
    greedy_allocation,
    ideal_norm,
    kolmogorov_exponent,
    lower_bound_sequence,
    paper_allocation_step3,
    paper_allocation_step4,
    plan_bound,
    scale_tail,
    upper_bound_sequence,
)
from nwidths.allocator import IdealNormParams, _GreedyState, strict_floor

from cases import SLOPE_SETS

# criterion-6 plan-shape fixture: d = 1, tau/h = p2/2 = 2
STEP4_PARAMS = EmbeddingParams(s1=F(3, 2), s2=0, p1=2, p2=4, d=1, alpha=F(1, 5))

SETS = {case: (params, kappa) for case, params, kappa in SLOPE_SETS}


def test_strict_floor_is_strictly_smaller():
    assert strict_floor(F(24)) == 23
    assert strict_floor(F(169, 20)) == 8
    assert strict_floor(8.415) == 8
    assert strict_floor(12.0) == 11


def test_step4_plan_shape_example():
    plan = paper_allocation_step4(2**12, STEP4_PARAMS)
    assert plan.M1 == 8  # [12 - log2(12)]
    assert plan.M2 == 23  # [2 * 12] under the strictly-smaller floor
    assert 0 < plan.epsilon < 1
    assert plan.z1 > 0 and plan.z2 > 0
    assert plan.budget_spent() <= plan.n_total - 1
    bound = plan_bound(plan, STEP4_PARAMS)
    assert bound.parts["delta1"] == 0.0
    assert bound.value > 0


def test_step4_full_rank_zone_is_affordable():
    n = 2**12
    plan = paper_allocation_step4(n, STEP4_PARAMS)
    full_rank = sum(b for (j, i), b in plan.budgets.items() if j + i <= plan.M1)
    assert full_rank <= 2 * n


def test_step4_budgets_follow_the_band_formula():
    plan = paper_allocation_step4(2**12, STEP4_PARAMS)
    eps, z1, z2 = plan.epsilon, plan.z1, plan.z2
    for (j, i), b in plan.budgets.items():
        m = j + i
        if m <= plan.M1:
            assert b == 2**m + 1
        else:
            target = 2.0 ** float((1 - eps) * 12 + i * z1 + j * z2)
            assert 1 <= b
            assert b <= max(1, math.ceil(target))
            assert b >= max(1, math.floor(target) - 1)


def test_scale_tail_matches_direct_summation():
    delta, alpha = F(5, 4), F(1, 2)
    for m0 in (0, 3, 9):
        direct = sum(
            2.0 ** float(-(j * delta + (m - j) * alpha))
            for m in range(m0, m0 + 600)
            for j in range(m + 1)
        )
        assert scale_tail(delta, alpha, m0) == pytest.approx(direct, rel=1e-10)


def test_delta3_tail_dominated_by_mu_rate():
    for case, (params, kappa) in SETS.items():
        from nwidths import derive

        mu = derive(params).mu
        for M2 in range(0, 41):
            assert delta3_tail(params, M2) <= 2.0 * 2.0 ** float(-M2 * mu), (case, M2)


def test_greedy_budget_identity_and_bounds():
    params, _ = SETS["ii"]
    plan = greedy_allocation(257, params, max_diagonal=12)
    assert plan.budget_spent() == plan.n_total - 1
    assert plan.n_total == 257
    assert set(plan.budgets) == {(j, m - j) for m in range(13) for j in range(m + 1)}


def test_greedy_at_budget_one_equals_full_scale_sum():
    params, _ = SETS["ii"]
    plan = greedy_allocation(1, params, max_diagonal=10)
    assert all(b == 1 for b in plan.budgets.values())
    bound = plan_bound(plan, params)
    from nwidths import derive, kolmogorov_model

    der = derive(params)
    direct = sum(
        2.0 ** float(-(j * der.delta + i * params.alpha))
        * kolmogorov_model(params.p1, params.p2, 2 ** (params.d * (j + i)), 1).value
        for (j, i) in plan.budgets
    )
    assert bound.parts["cells"] == pytest.approx(direct, rel=1e-9)
    assert bound.value == pytest.approx(direct + bound.parts["tail"], rel=1e-12)


def test_greedy_full_grant_drives_bound_to_tail():
    params, _ = SETS["i"]  # flat cells complete exactly at full rank
    D = 3
    total = 1 + sum(2 ** (params.d * m) for m in range(D + 1) for _ in range(m + 1))
    state = _GreedyState(params, D)
    state.run_to(total + 50)  # more than enough to zero everything
    assert state.bound() == pytest.approx(state.tail, rel=1e-12)


def test_upper_bound_sequences_nonincreasing_and_lower_below():
    grid = [2**e for e in range(8, 15)]
    for case in ("ii", "iv"):
        params, _ = SETS[case]
        upper = upper_bound_sequence(params, grid, strategy="greedy")
        lower = lower_bound_sequence(params, grid)
        values = [v for _, v in upper.points]
        assert all(a >= b - 1e-15 for a, b in zip(values, values[1:]))
        lower_at = dict(lower.points)
        for n, v in upper.points:
            if n in lower_at:
                assert lower_at[n] <= v * (1 + 1e-9)


def test_strategy_dominance_greedy_beats_step4_at_equal_budget():
    for case in ("iv", "vi"):
        params, kappa = SETS[case]
        for e in (8, 10, 12):
            plan = paper_allocation_step4(2**e, params)
            paper_value = plan_bound(plan, params).value
            D = max(plan.M2 + 1, default_max_diagonal(params, kappa, plan.n_total))
            greedy_value = plan_bound(greedy_allocation(plan.n_total, params, D), params).value
            assert greedy_value <= paper_value * (1 + 1e-9)


def test_regime_gates():
    with pytest.raises(RegimeMismatch):
        paper_allocation_step4(2**10, SETS["iii"][0])
    with pytest.raises(RegimeMismatch):
        paper_allocation_step3(2**10, SETS["iv"][0])
    with pytest.raises(RegimeMismatch):
        paper_allocation_step4(2**10, SETS["i"][0])
    with pytest.raises(RegimeMismatch):
        paper_allocation_step3(2**10, SETS["ii"][0])


def test_step3_plan_budget_identity():
    params, _ = SETS["v"]
    plan = paper_allocation_step3(2**10, params)
    assert plan.strategy == "paper-step3"
    assert plan.budget_spent() <= plan.n_total - 1
    assert plan.n_total == 2 * 2 ** (params.d * plan.M2)
    bound = plan_bound(plan, params)
    assert bound.value == pytest.approx(bound.parts["head"] + bound.parts["tail"], rel=1e-12)


def test_non_dyadic_grid_rejected():
    with pytest.raises(ValueError):
        upper_bound_sequence(SETS["ii"][0], [100, 200])


def test_ideal_norm():
    seq = WidthSequence(points=[(n, 3.0) for n in range(1, 17)], kind="upper")
    assert ideal_norm(seq, 2.0) == pytest.approx(16**0.5 * 3.0, rel=1e-12)
    # n^(1/r) is pointwise monotone in 1/r for n >= 1
    assert ideal_norm(seq, 1.0) >= ideal_norm(seq, 2.0) >= ideal_norm(seq, 4.0)
    with pytest.raises(ValueError):
        ideal_norm(WidthSequence(points=[], kind="upper"), 1.0)


def test_ideal_norm_params_validation():
    IdealNormParams(r=2.0, rho=0.5)
    with pytest.raises(ValueError):
        IdealNormParams(r=2.0, rho=0.0)
    with pytest.raises(ValueError):
        IdealNormParams(r=-1.0)


def test_epsilon_z_constraints_hold_on_both_branches():
    # delta > alpha branch
    plan = paper_allocation_step4(2**12, STEP4_PARAMS)
    assert 0 < plan.epsilon < 1
    # delta < alpha branch: delta = 1/5, alpha = 3, gate d/p2 = 1/4
    params = EmbeddingParams(s1=F(9, 20), s2=0, p1=2, p2=4, d=1, alpha=3)
    dec = kolmogorov_exponent(params)
    assert dec.case_id == "vi"
    plan = paper_allocation_step4(2**12, params)
    assert 0 < plan.epsilon < 1
    assert plan.z1 > 0 and plan.z2 > 0

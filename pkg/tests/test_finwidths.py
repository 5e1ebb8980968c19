import math
from fractions import Fraction as F
from itertools import product

import pytest

from nwidths import (
    INF,
    ExtReal,
    FiniteWidthQuery,
    OracleTooLarge,
    UnsupportedRegion,
    coordinate_oracle,
    dualize,
    gelfand_model,
    kolmogorov_model,
)
from nwidths.finwidths import EXACT, GELFAND, KOLMOGOROV, ORDER_MODEL

P_GRID = [ExtReal(p) for p in (1, F(4, 3), F(3, 2), 2, 3, 4)] + [INF]


def test_kolmogorov_model_examples():
    w = kolmogorov_model(4, 2, 10, 3)
    assert w.fidelity == EXACT
    assert w.value == pytest.approx(8 ** 0.25, rel=1e-12)

    assert kolmogorov_model(4, 2, 10, 10).value == 1.0
    assert kolmogorov_model(4, 2, 10, 11) == kolmogorov_model(4, 2, 10, 11)
    assert kolmogorov_model(4, 2, 10, 11).value == 0.0
    assert kolmogorov_model(4, 2, 10, 11).fidelity == EXACT

    w = kolmogorov_model(1, 4, 256, 64)
    assert w.fidelity == ORDER_MODEL
    assert w.value == pytest.approx(0.5, rel=1e-12)


def test_gelfand_model_examples():
    w = gelfand_model(F(4, 3), 8, 256, 16)
    assert w.fidelity == ORDER_MODEL
    assert w.value == pytest.approx(1.0, rel=1e-12)

    w = gelfand_model(4, 2, 10, 3)
    assert w.fidelity == EXACT
    assert w.value == pytest.approx(8 ** 0.25, rel=1e-12)

    w = gelfand_model(F(3, 2), F(3, 2), 7, 5)
    assert (w.value, w.fidelity) == (1.0, EXACT)


def test_unsupported_regions():
    with pytest.raises(UnsupportedRegion):
        kolmogorov_model(2, "inf", 16, 2)
    with pytest.raises(UnsupportedRegion):
        gelfand_model(1, 2, 16, 2)
    # the rank property applies before the clause dispatch
    assert kolmogorov_model(2, "inf", 16, 17).value == 0.0


def test_dualize_examples():
    q = FiniteWidthQuery(GELFAND, ExtReal(4), ExtReal(2), 10, 3)
    dq = dualize(q)
    assert dq.kind == KOLMOGOROV
    assert (dq.p1, dq.p2) == (ExtReal(2), ExtReal(F(4, 3)))
    assert (dq.N, dq.n) == (10, 3)
    assert dualize(dq) == q

    # exact clause keeps its value under duality
    mine = gelfand_model(q.p1, q.p2, q.N, q.n)
    dual = kolmogorov_model(dq.p1, dq.p2, dq.N, dq.n)
    assert mine.value == dual.value
    assert mine.formula_tag == dual.formula_tag == "tail-count"


def test_order_clause_values_match_under_duality():
    for p1, p2 in product(P_GRID, P_GRID):
        for N in (8, 32, 64):
            for n in (1, 3, N // 2, N):
                try:
                    mine = gelfand_model(p1, p2, N, n)
                except UnsupportedRegion:
                    continue
                dual = kolmogorov_model(p2.conjugate(), p1.conjugate(), N, n)
                assert mine.formula_tag == dual.formula_tag
                assert mine.value == pytest.approx(dual.value, rel=1e-12, abs=1e-300)


def test_monotone_and_rank_on_small_grid():
    for p1, p2 in product(P_GRID, P_GRID):
        for model in (kolmogorov_model, gelfand_model):
            N = 24
            try:
                values = [model(p1, p2, N, n).value for n in range(1, N + 2)]
            except UnsupportedRegion:
                continue
            assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))
            assert values[-1] == 0.0
            assert all(v > 0 for v in values[:-1])


def test_coordinate_oracle_examples():
    assert coordinate_oracle("inf", 1, 5, 2) == pytest.approx(4.0, rel=1e-12)
    assert coordinate_oracle(2, 1, 4, 4) == pytest.approx(1.0, rel=1e-12)
    assert coordinate_oracle(3, 2, 8, 3) == pytest.approx(6 ** (1 / 2 - 1 / 3), rel=1e-12)


def test_coordinate_oracle_guards():
    with pytest.raises(OracleTooLarge):
        coordinate_oracle(4, 2, 13, 3)
    with pytest.raises(ValueError):
        coordinate_oracle(2, 4, 8, 3)
    assert coordinate_oracle(4, 2, 8, 9) == 0.0


def test_oracle_matches_model_exact_clause():
    for p1, p2 in ((ExtReal(4), ExtReal(2)), (INF, ExtReal(1)), (ExtReal(F(3, 2)), ExtReal(1))):
        for N in (5, 9, 12):
            for n in range(1, N + 1):
                got = coordinate_oracle(p1, p2, N, n)
                model = kolmogorov_model(p1, p2, N, n)
                assert model.fidelity == EXACT
                assert got == pytest.approx(model.value, rel=1e-9)


def test_flat_clause_value_one_for_small_budgets():
    # p2 = 2 keeps the width at 1 on n <= N/4 for any 1 <= p1 <= 2
    for p1 in (1, F(4, 3), F(3, 2), 2):
        for N in (16, 64):
            for n in range(1, N // 4 + 1):
                assert kolmogorov_model(p1, 2, N, n).value == 1.0


def test_extension_tagging():
    w = kolmogorov_model(1, 4, 64, 8)
    assert w.formula_tag == "gauss"
    w = kolmogorov_model(1, 4, 64, 40)
    assert w.formula_tag == "gauss-ext"
    assert math.isclose(w.value, min(1.0, 64 ** 0.25 * 40 ** -0.5))
    assert kolmogorov_model(1, 2, 64, 40).formula_tag == "flat-ext"

from fractions import Fraction as F

import pytest

from nwidths import INF, EmbeddingParams, ExtReal, derive, is_compact, validate
from nwidths.params import params_as_dict, parse_params


def test_extreal_parsing_is_exact():
    assert ExtReal("0.2").frac == F(1, 5)
    assert ExtReal("5/4").frac == F(5, 4)
    assert ExtReal("3").frac == 3
    assert ExtReal("inf").is_inf
    assert ExtReal("Infinity").is_inf


def test_extreal_rejects_binary_floats():
    with pytest.raises(ValueError):
        ExtReal(0.2)
    assert ExtReal(2.0) == 2
    assert ExtReal(float("inf")).is_inf


def test_extreal_order_and_reciprocal():
    assert ExtReal(1) < ExtReal(2) < INF
    assert not INF < INF
    assert INF.inv() == 0
    assert ExtReal(F(4, 3)).inv() == F(3, 4)
    assert float(INF) == float("inf")


@pytest.mark.parametrize(
    "p", [1, F(8, 7), F(4, 3), F(3, 2), 2, F(5, 2), 3, 4, 8, "inf"]
)
def test_conjugation_is_an_involution(p):
    p = ExtReal(p)
    assert p.conjugate().conjugate() == p
    assert p.inv() + p.conjugate().inv() == 1


def test_conjugate_table_endpoints():
    assert ExtReal(1).conjugate() == INF
    assert INF.conjugate() == 1
    assert ExtReal(2).conjugate() == 2


def test_derive_examples():
    der = derive(EmbeddingParams(s1=2, s2=0, p1=1, p2=2, d=1, alpha=1))
    assert der.delta == F(3, 2)
    assert der.mu == 1
    assert der.p_tilde_inv == 2
    assert der.theta is None  # p2 == 2
    assert der.theta1 == 1

    der = derive(EmbeddingParams(s1=1, s2=0, p1=4, p2=2, d=1, alpha=1))
    assert der.delta == F(5, 4)
    assert der.mu == 1
    assert der.p_tilde_inv == F(5, 4)

    der = derive(EmbeddingParams(s1=1, s2=0, p1="inf", p2="inf", d=2, alpha=3))
    assert der.delta == 1
    assert der.mu == 1
    assert der.p1_conj == 1


def test_derive_is_pure():
    params = EmbeddingParams(s1=F(7, 3), s2=F(-1, 2), p1=F(3, 2), p2=5, d=2, alpha=F(2, 7))
    assert derive(params) == derive(params)


def test_is_compact_examples():
    # min(alpha, delta) = 3/10 <= 1/2 = d*max(1/p2 - 1/p1, 0)
    assert not is_compact(EmbeddingParams(s1=F(3, 2), s2=0, p1=2, p2=1, d=1, alpha=F(3, 10)))
    assert is_compact(EmbeddingParams(s1=2, s2=0, p1=1, p2=2, d=1, alpha=1))
    # delta = 1/4 <= 2*(1/4); the realizing s1 - s2 is negative, which the
    # predicate still evaluates (validate reports the ordering violation)
    bad = EmbeddingParams(s1=F(-1, 4), s2=0, p1=4, p2=2, d=2, alpha=1)
    assert derive(bad).delta == F(1, 4)
    assert not is_compact(bad)
    assert "s2 < s1 required" in validate(bad)


def test_compactness_reduces_to_mu_positive_for_ordered_exponents():
    for alpha in (F(1, 4), 1, 3):
        for s1 in (F(1, 2), 1, 4):
            params = EmbeddingParams(s1=s1, s2=0, p1=F(3, 2), p2=3, d=1, alpha=alpha)
            mu = min(alpha, derive(params).delta)
            assert is_compact(params) == (mu > 0)


def test_validate_examples():
    assert "s2 < s1 required" in validate(EmbeddingParams(s1=0, s2=1, p1=2, p2=2, d=1, alpha=1))
    assert any(
        "p1" in v for v in validate(EmbeddingParams(s1=1, s2=0, p1=F(1, 2), p2=2, d=1, alpha=1))
    )
    assert validate(EmbeddingParams(s1=2, s2=0, p1=1, p2=2, d=1, alpha=1)) == []
    assert "alpha > 0 required" in validate(EmbeddingParams(s1=1, s2=0, p1=2, p2=2, d=1, alpha=0))


def test_parse_params_key_value_and_json():
    text = "s1=2 s2=0 p1=1 p2=2 q1=inf q2=inf d=1 alpha=1"
    params = parse_params(text)
    assert params == EmbeddingParams(s1=2, s2=0, p1=1, p2=2, d=1, alpha=1)

    json_text = '{"s1": "5/4", "s2": 0, "p1": "inf", "p2": 2, "d": 2, "alpha": 0.2}'
    params = parse_params(json_text)
    assert params.s1 == F(5, 4)
    assert params.p1.is_inf
    assert params.alpha == F(1, 5)  # decimal converts exactly
    assert params.q1.is_inf  # defaulted


def test_parse_params_rejects_unknown_and_missing_fields():
    with pytest.raises(ValueError):
        parse_params("s1=1 s2=0 p1=1 p2=2 d=1 alpha=1 bogus=3")
    with pytest.raises(ValueError):
        parse_params("s1=1 s2=0 p1=1 p2=2 d=1")


def test_params_as_dict_round_trips():
    params = EmbeddingParams(s1=F(5, 4), s2=0, p1="inf", p2=F(4, 3), d=2, alpha=F(1, 5))
    as_dict = params_as_dict(params)
    assert as_dict["p1"] == "inf"
    assert as_dict["alpha"] == "1/5"
    rebuilt = parse_params(" ".join("%s=%s" % kv for kv in as_dict.items()))
    assert rebuilt == params

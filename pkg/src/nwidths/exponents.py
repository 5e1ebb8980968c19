"""Case tables for the width exponents and the a/c/d comparison clauses.

Both width kinds obey  s_n ~ n^(-kappa)  in the non-limiting case, with
kappa read off an exact six-case table in (p1, p2, mu/d).  The tables
are evaluated with exact rationals; every gate is a strict inequality
and equality lands in a dedicated BoundaryCase error, because the
hypotheses are silent there.

Besides the full-parameter entry points, each table has a direct
(p1, p2, mu/d) entry point.  The duality symmetry
kappa_gelfand(p1, p2, mu/d) == kappa_kolmogorov(p2', p1', mu/d)
is stated at that level (delta depends on the p's, so it cannot be held
fixed while swapping exponents).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundaryCase, HypothesisFailure, LimitingCase, NotCompact
from .params import EmbeddingParams, ExtReal, derive, is_compact

KOLMOGOROV = "kolmogorov"
GELFAND = "gelfand"

_HALF = Fraction(1, 2)
_TWO = ExtReal(2)


@dataclass(frozen=True)
class RegimeDecision:
    """Which case fired and the exponent kappa, as an exact rational."""

    width_kind: str
    case_id: str
    kappa: Fraction
    assumptions_used: list[str]

    def __post_init__(self):
        if self.kappa <= 0:
            raise AssertionError("kappa must be positive, got %s" % self.kappa)


@dataclass(frozen=True)
class ComparisonVerdict:
    """Exact evaluation of the a~c, a~d, c~d comparison clauses."""

    a_sim_c: bool
    a_sim_d: bool
    c_sim_d: bool
    matched_clauses: list[str]


def _compactness_ratio(p1: ExtReal, p2: ExtReal, mu_ratio: Fraction) -> bool:
    # min(alpha, delta) > d*max(1/p2 - 1/p1, 0), divided through by d
    return mu_ratio > max(p2.inv() - p1.inv(), Fraction(0))


def kolmogorov_exponent_ratio(p1: ExtReal, p2: ExtReal, mu_ratio: Fraction) -> RegimeDecision:
    """Kolmogorov case table at the (p1, p2, mu/d) level.

    Assumes the non-limiting hypothesis (b) was checked by the caller;
    this entry point cannot see delta and alpha separately.
    """
    p1, p2 = ExtReal(p1), ExtReal(p2)
    ip1, ip2 = p1.inv(), p2.inv()
    r = Fraction(mu_ratio)
    if not _compactness_ratio(p1, p2, r):
        raise NotCompact(
            "mu/d = %s <= max(1/p2 - 1/p1, 0) = %s" % (r, max(ip2 - ip1, 0))
        )
    used = ["a"]

    if p2 < p1:
        # hypothesis (a), second branch: p~ < p2 < p1; equivalent to the
        # compactness gate above, kept explicit for the error contract
        if r + ip1 <= ip2:
            raise HypothesisFailure("(a): p2 <= p~ while p2 < p1")
        used.append("sub:ptilde<p2<p1")
        return RegimeDecision(KOLMOGOROV, "ii", r + ip1 - ip2, used)

    if p1 < p2:
        used.append("c")
        if p2.is_inf:
            raise HypothesisFailure("(c): p2 < inf required when p1 < p2")

    subs = []
    if p1 <= p2 <= _TWO:
        subs.append("sub:1<=p1<=p2<=2")
    if _TWO < p1 and p1 == p2:
        subs.append("sub:2<p1=p2<=inf")
    if subs:
        return RegimeDecision(KOLMOGOROV, "i", r, used + subs)

    if p1 < _TWO < p2:
        gate = ip2
        if r == gate:
            raise BoundaryCase("mu/d == 1/p2; the table is silent on this boundary")
        if r > gate:
            return RegimeDecision(KOLMOGOROV, "iii", r + _HALF - ip2, used + ["sub:p1<2<p2"])
        return RegimeDecision(KOLMOGOROV, "iv", r * p2.frac / 2, used + ["sub:p1<2<p2"])

    # remaining stratum: 2 <= p1 < p2 < inf
    theta = (ip1 - ip2) / (_HALF - ip2)
    gate = ip2 * theta
    if r == gate:
        raise BoundaryCase("mu/d == theta/p2; the table is silent on this boundary")
    if r > gate:
        return RegimeDecision(KOLMOGOROV, "v", r + ip1 - ip2, used + ["sub:2<=p1<p2"])
    return RegimeDecision(KOLMOGOROV, "vi", r * p2.frac / 2, used + ["sub:2<=p1<p2"])


def gelfand_exponent_ratio(p1: ExtReal, p2: ExtReal, mu_ratio: Fraction) -> RegimeDecision:
    """Gelfand case table at the (p1, p2, mu/d) level."""
    p1, p2 = ExtReal(p1), ExtReal(p2)
    ip1, ip2 = p1.inv(), p2.inv()
    r = Fraction(mu_ratio)
    if not _compactness_ratio(p1, p2, r):
        raise NotCompact(
            "mu/d = %s <= max(1/p2 - 1/p1, 0) = %s" % (r, max(ip2 - ip1, 0))
        )
    used = ["a"]

    if p2 < p1:
        if r + ip1 <= ip2:
            raise HypothesisFailure("(a): p2 <= p~ while p2 < p1")
        used.append("sub:ptilde<p2<p1")
        return RegimeDecision(GELFAND, "ii", r + ip1 - ip2, used)

    if p1 < p2:
        used.append("c")
        if p1 == 1:
            raise HypothesisFailure("(c): p1 > 1 required when p1 < p2")

    subs = []
    if _TWO <= p1:
        subs.append("sub:2<=p1<=p2<=inf")
    if p1 == p2 and p1 < _TWO:
        subs.append("sub:1<=p1=p2<2")
    if subs:
        return RegimeDecision(GELFAND, "i", r, used + subs)

    # here 1 < p1 < 2 and p1 < p2
    conj_inv = 1 - ip1  # 1/p1'
    if _TWO < p2:
        gate = conj_inv
        if r == gate:
            raise BoundaryCase("mu/d == 1/p1'; the table is silent on this boundary")
        if r > gate:
            return RegimeDecision(GELFAND, "iii", r + ip1 - _HALF, used + ["sub:1<p1<2<p2"])
        return RegimeDecision(GELFAND, "iv", r / (2 * conj_inv), used + ["sub:1<p1<2<p2"])

    # remaining stratum: 1 < p1 < p2 <= 2
    theta1 = (ip1 - ip2) / (ip1 - _HALF)
    gate = conj_inv * theta1
    if r == gate:
        raise BoundaryCase("mu/d == theta1/p1'; the table is silent on this boundary")
    if r > gate:
        return RegimeDecision(GELFAND, "v", r + ip1 - ip2, used + ["sub:1<p1<p2<=2"])
    return RegimeDecision(GELFAND, "vi", r / (2 * conj_inv), used + ["sub:1<p1<p2<=2"])


def _full(params: EmbeddingParams, ratio_fn) -> RegimeDecision:
    der = derive(params)
    if not is_compact(params):
        raise NotCompact(
            "min(alpha, delta) = %s <= d*max(1/p2 - 1/p1, 0) = %s"
            % (der.mu, params.d * max(params.p2.inv() - params.p1.inv(), Fraction(0)))
        )
    if der.delta == params.alpha:
        raise LimitingCase("delta == alpha violates hypothesis (b), the non-limiting requirement")
    decision = ratio_fn(params.p1, params.p2, der.mu / params.d)
    return RegimeDecision(
        decision.width_kind,
        decision.case_id,
        decision.kappa,
        ["b"] + decision.assumptions_used,
    )


def kolmogorov_exponent(params: EmbeddingParams) -> RegimeDecision:
    """Kolmogorov width exponent: d_n ~ n^(-kappa), with all gates checked."""
    return _full(params, kolmogorov_exponent_ratio)


def gelfand_exponent(params: EmbeddingParams) -> RegimeDecision:
    """Gelfand width exponent: c_n ~ n^(-kappa), with all gates checked."""
    return _full(params, gelfand_exponent_ratio)


def compare_widths_ratio(p1: ExtReal, p2: ExtReal, mu_ratio: Fraction) -> ComparisonVerdict:
    """Evaluate every a~c / a~d / c~d clause exactly at (p1, p2, mu/d).

    Flags are ORs of their clauses; nothing raises, clauses simply do
    not match.  Each per-clause exclusion (mu != d/p1', mu != d/p2) is
    part of the clause predicate.
    """
    p1, p2 = ExtReal(p1), ExtReal(p2)
    ip1, ip2 = p1.inv(), p2.inv()
    r = Fraction(mu_ratio)
    conj1_inv = 1 - ip1  # 1/p1'
    matched = []

    # a ~ c
    if _TWO <= p1 < p2:
        matched.append("i-a")
    if p2 <= p1 and r + ip1 > ip2:  # p~ < p2 <= p1
        matched.append("i-b")
    if 1 < p1 < _TWO and ip2 <= conj1_inv and r != conj1_inv:
        matched.append("i-c")  # 1 < p1 < p1' <= p2, mu != d/p1'

    # a ~ d
    if p1 < p2 <= _TWO:
        matched.append("ii-a")
    if "i-b" in matched:
        matched.append("ii-b")
    if p1 < _TWO < p2 and not p2.is_inf and ip2 >= conj1_inv and r != ip2:
        matched.append("ii-c")  # p1 < 2 < p2 <= p1', p2 finite, mu != d/p2

    # c ~ d
    if "i-b" in matched:
        matched.append("iii-a")
    if 1 < p1 < _TWO and not p2.is_inf and ip2 == conj1_inv and r != ip2:
        matched.append("iii-b")  # p2 == p1' finite, mu != d/p2

    return ComparisonVerdict(
        a_sim_c=any(tag.startswith("i-") for tag in matched),
        a_sim_d=any(tag.startswith("ii-") for tag in matched),
        c_sim_d=any(tag.startswith("iii-") for tag in matched),
        matched_clauses=matched,
    )


def compare_widths(params: EmbeddingParams) -> ComparisonVerdict:
    """Comparison clauses for full parameters (delta > 0 and delta != alpha assumed)."""
    der = derive(params)
    return compare_widths_ratio(params.p1, params.p2, der.mu / params.d)

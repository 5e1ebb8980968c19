"""Width models for the identity map between l_p balls of dimension N.

Three kinds of clause feed the rest of the pipeline:

* exact formulas: the rank-zero case n > N, the equal-exponent case
  p1 == p2, and the coordinate-subspace value (N-n+1)^(1/p2-1/p1) for
  p2 < p1;
* order models with every constant normalized to 1: the flat clause
  (value 1), the Gaussian-type clause min(1, N^e * n^(-1/2)) and its
  theta-powered variant; downstream slope checks are constant-blind;
* a piecewise extension used when a quarter-range clause is evaluated
  on N/4 < n <= N, flagged with an "-ext" tag.

A brute-force coordinate-subspace oracle (exponential in N, capped at
N <= 12) provides an independent check of the exact p2 < p1 formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import OracleTooLarge, UnsupportedRegion
from .params import ExtReal

KOLMOGOROV = "kolmogorov"
GELFAND = "gelfand"

EXACT = "exact"
ORDER_MODEL = "order"

_HALF = Fraction(1, 2)
_TWO = ExtReal(2)


@dataclass(frozen=True)
class FiniteWidthQuery:
    kind: str
    p1: ExtReal
    p2: ExtReal
    N: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "p1", ExtReal(self.p1))
        object.__setattr__(self, "p2", ExtReal(self.p2))
        if self.N < 1 or self.n < 1:
            raise ValueError("N and n must be positive")


@dataclass(frozen=True)
class ModelWidth:
    value: float
    fidelity: str  # EXACT or ORDER_MODEL
    formula_tag: str


def _pow(base: int, exponent: Fraction) -> float:
    """base**exponent through log space; safe for arbitrarily large ints."""
    if base <= 0:
        raise ValueError("positive base required")
    if exponent == 0 or base == 1:
        return 1.0
    return math.exp(float(exponent) * math.log(base))


def _gauss(scale_inv: Fraction, N: int, n: int) -> float:
    """min(1, N^scale_inv * n^(-1/2)), constants normalized to 1."""
    return min(1.0, math.exp(float(scale_inv) * math.log(N) - 0.5 * math.log(n)))


def kolmogorov_model(p1, p2, N: int, n: int) -> ModelWidth:
    """Model Kolmogorov width of id: l_p1^N -> l_p2^N at codimension index n.

    Clause table (p1 <= p2 side valid for n <= N/4 in the flat and
    Gaussian clauses, n <= N otherwise; the piecewise extension covers
    the rest of n <= N and is tagged "-ext"):

    * 1 <= p1 <= p2 <= 2          -> 1
    * p1 < 2 < p2 < inf           -> min(1, N^(1/p2) n^(-1/2))
    * 2 < p1 == p2 <= inf         -> 1
    * 2 <= p1 < p2 < inf          -> min(1, N^(1/p2) n^(-1/2))^theta
    * p2 < p1, n <= N (exact)     -> (N - n + 1)^(1/p2 - 1/p1)
    * n > N (exact)               -> 0

    p1 < p2 == inf has no known order model and raises UnsupportedRegion.
    """
    p1, p2 = ExtReal(p1), ExtReal(p2)
    ip1, ip2 = p1.inv(), p2.inv()
    if n > N:
        return ModelWidth(0.0, EXACT, "rank-zero")
    if p1 == p2:
        return ModelWidth(1.0, EXACT, "flat")
    if p2 < p1:
        return ModelWidth(_pow(N - n + 1, ip2 - ip1), EXACT, "tail-count")
    if p2.is_inf:
        raise UnsupportedRegion(
            "no Kolmogorov order model for p1 < p2 = inf (the excluded (c) region)"
        )
    if p2 <= _TWO:
        # flat clause; the piecewise extension also evaluates to 1 here
        tag = "flat" if 4 * n <= N else "flat-ext"
        return ModelWidth(1.0, ORDER_MODEL, tag)
    if p1 < _TWO:
        tag = "gauss" if 4 * n <= N else "gauss-ext"
        return ModelWidth(_gauss(ip2, N, n), ORDER_MODEL, tag)
    theta = (ip1 - ip2) / (_HALF - ip2)
    return ModelWidth(_gauss(ip2, N, n) ** float(theta), ORDER_MODEL, "gauss-pow")


def gelfand_model(p1, p2, N: int, n: int) -> ModelWidth:
    """Model Gelfand width of id: l_p1^N -> l_p2^N; mirror of the Kolmogorov table.

    * 2 <= p1 <= p2 <= inf        -> 1
    * 1 < p1 < 2 < p2 <= inf      -> min(1, N^(1-1/p1) n^(-1/2))
    * 1 <= p1 == p2 < 2           -> 1
    * 1 < p1 < p2 <= 2            -> min(1, N^(1-1/p1) n^(-1/2))^theta1
    * p2 < p1 (exact)             -> (N - n + 1)^(1/p2 - 1/p1)
    * n > N (exact)               -> 0

    p1 == 1 < p2 has no known order model (the excluded (c) region).
    """
    p1, p2 = ExtReal(p1), ExtReal(p2)
    ip1, ip2 = p1.inv(), p2.inv()
    if n > N:
        return ModelWidth(0.0, EXACT, "rank-zero")
    if p1 == p2:
        return ModelWidth(1.0, EXACT, "flat")
    if p2 < p1:
        return ModelWidth(_pow(N - n + 1, ip2 - ip1), EXACT, "tail-count")
    if p1 == 1:
        raise UnsupportedRegion(
            "no Gelfand order model for p1 = 1 < p2 (the excluded (c) region)"
        )
    if _TWO <= p1:
        tag = "flat" if 4 * n <= N else "flat-ext"
        return ModelWidth(1.0, ORDER_MODEL, tag)
    conj_inv = 1 - ip1  # 1/p1'
    if p2 <= _TWO:
        theta1 = (ip1 - ip2) / (ip1 - _HALF)
        return ModelWidth(_gauss(conj_inv, N, n) ** float(theta1), ORDER_MODEL, "gauss-pow")
    tag = "gauss" if 4 * n <= N else "gauss-ext"
    return ModelWidth(_gauss(conj_inv, N, n), ORDER_MODEL, tag)


def model_width(query: FiniteWidthQuery) -> ModelWidth:
    fn = kolmogorov_model if query.kind == KOLMOGOROV else gelfand_model
    return fn(query.p1, query.p2, query.N, query.n)


def dualize(query: FiniteWidthQuery) -> FiniteWidthQuery:
    """Swap the width kind and replace (p1, p2) by (p2', p1'); N, n unchanged.

    An involution.  Exact clauses keep their value: the equal-norm and
    rank cases are symmetric, and (N-n+1)^(1/p1'-1/p2') equals
    (N-n+1)^(1/p2-1/p1).
    """
    return FiniteWidthQuery(
        kind=GELFAND if query.kind == KOLMOGOROV else KOLMOGOROV,
        p1=query.p2.conjugate(),
        p2=query.p1.conjugate(),
        N=query.N,
        n=query.n,
    )


ORACLE_CAP = 12


def coordinate_oracle(p1, p2, N: int, n: int) -> float:
    """Best coordinate-subspace width for p2 < p1, by full enumeration.

    Minimizes over every coordinate subspace spanned by n-1 of the N
    axes the norm of the identity restricted to the complementary
    coordinates.  The restricted norm is found by scanning the
    equal-magnitude vectors of each support size (the stationary family
    of the p2-norm on the p1-sphere), not by the closed formula, so the
    enumeration is an independent check of (N-n+1)^(1/p2-1/p1).
    """
    p1, p2 = ExtReal(p1), ExtReal(p2)
    if not p2 < p1:
        raise ValueError("coordinate oracle requires p2 < p1")
    if N > ORACLE_CAP:
        raise OracleTooLarge("N = %d exceeds the oracle cap %d" % (N, ORACLE_CAP))
    if n > N:
        return 0.0
    e = p2.inv() - p1.inv()
    best = math.inf
    for kept in combinations(range(N), n - 1):
        m = N - len(kept)
        residual = max(float(k) ** float(e) for k in range(1, m + 1))
        best = min(best, residual)
    return best

"""Discretized weighted sequence spaces on dyadic blocks.

Coefficients live on pairs (j, k) with level j >= 0 and lattice site
k in Z^d.  The plane splits into cells I_{j,i}: the ball |k| <= 2^j at
i = 0 and the dyadic shells 2^(j+i-1) < |k| <= 2^(j+i) for i >= 1,
where |k| is the Euclidean lattice norm (the same norm the weight
uses; the choice affects constants only, never exponents).

On a cell the weight (1 + |2^-j k|^2)^(alpha/2) is comparable to
2^(alpha*i) and the embedding's restriction scales like
2^(-j*delta - i*alpha); cell cardinalities are comparable to
2^(d(j+i)).  Exact lattice counts are available for d <= 3 under a
point cap; the allocator pipelines use the surrogate count 2^(d(j+i))
throughout so runs are reproducible at any d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import EnumerationTooLarge
from .params import ExtReal, as_fraction

EXACT = "exact"
SURROGATE = "surrogate"

DEFAULT_POINT_CAP = 2**24


@dataclass(frozen=True)
class SequenceSpaceSpec:
    """One side of the embedding: l_q(2^{js} l_p(alpha)) on d-dimensional levels.

    The source carries s = delta and the weight exponent alpha; the
    target has s = 0 and alpha = 0.
    """

    s: Fraction
    p: ExtReal
    q: ExtReal
    alpha: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "s", as_fraction(self.s))
        object.__setattr__(self, "p", ExtReal(self.p))
        object.__setattr__(self, "q", ExtReal(self.q))
        object.__setattr__(self, "alpha", as_fraction(self.alpha))


@dataclass(frozen=True)
class BlockCell:
    """One (j, i) cell: cardinality M_{j,i} and operator scale 2^(-j*delta-i*alpha)."""

    j: int
    i: int
    cardinality: int
    scale: float


@dataclass
class SparseSequence:
    """Finitely supported coefficients: (j, k-tuple) -> value."""

    entries: dict = field(default_factory=dict)

    @classmethod
    def from_list(cls, items) -> "SparseSequence":
        """Build from JSON-style [(j, [k...], value), ...] triples."""
        seq = cls()
        for j, k, value in items:
            seq.entries[(int(j), tuple(int(c) for c in k))] = value
        return seq

    def to_list(self) -> list:
        return [[j, list(k), v] for (j, k), v in sorted(self.entries.items())]


@lru_cache(maxsize=4096)
def _ball_count(r2: int, d: int) -> int:
    """Number of lattice points of Z^d with squared Euclidean norm <= r2."""
    if r2 < 0:
        return 0
    if d == 1:
        return 2 * math.isqrt(r2) + 1
    if d == 2:
        r = math.isqrt(r2)
        return sum(2 * math.isqrt(r2 - x * x) + 1 for x in range(-r, r + 1))
    if d == 3:
        r = math.isqrt(r2)
        total = 0
        for x in range(-r, r + 1):
            s2 = r2 - x * x
            rx = math.isqrt(s2)
            total += sum(2 * math.isqrt(s2 - y * y) + 1 for y in range(-rx, rx + 1))
        return total
    raise ValueError("exact lattice counts implemented for d <= 3 only")


def block_cardinality(
    j: int, i: int, d: int, mode: str = EXACT, cap: int = DEFAULT_POINT_CAP
) -> int:
    """|I_{j,i}|: exact lattice count (d <= 3) or the surrogate 2^(d(j+i)).

    Exact mode refuses cells whose surrogate size exceeds the cap; the
    surrogate is available at any dimension.
    """
    if j < 0 or i < 0:
        raise ValueError("j and i must be nonnegative")
    if mode == SURROGATE:
        return 2 ** (d * (j + i))
    if mode != EXACT:
        raise ValueError("mode must be %r or %r" % (EXACT, SURROGATE))
    if 2 ** (d * (j + i)) > cap:
        raise EnumerationTooLarge(
            "cell (j=%d, i=%d, d=%d) exceeds the %d-point cap" % (j, i, d, cap)
        )
    outer = _ball_count(4 ** (j + i), d)
    if i == 0:
        return outer
    return outer - _ball_count(4 ** (j + i - 1), d)


def cell_points(j: int, i: int, d: int, cap: int = DEFAULT_POINT_CAP) -> Iterator[tuple]:
    """Iterate the lattice sites k of cell I_{j,i} (d <= 3, capped)."""
    if 2 ** (d * (j + i)) > cap:
        raise EnumerationTooLarge("cell (j=%d, i=%d, d=%d) exceeds the point cap" % (j, i, d))
    hi2 = 4 ** (j + i)
    lo2 = -1 if i == 0 else 4 ** (j + i - 1)  # membership is lo2 < |k|^2 <= hi2
    r = math.isqrt(hi2)
    if d == 1:
        for x in range(-r, r + 1):
            if lo2 < x * x <= hi2:
                yield (x,)
    elif d == 2:
        for x in range(-r, r + 1):
            rx = math.isqrt(hi2 - x * x)
            for y in range(-rx, rx + 1):
                if lo2 < x * x + y * y <= hi2:
                    yield (x, y)
    elif d == 3:
        for x in range(-r, r + 1):
            rx = math.isqrt(hi2 - x * x)
            for y in range(-rx, rx + 1):
                ry = math.isqrt(hi2 - x * x - y * y)
                for z in range(-ry, ry + 1):
                    if lo2 < x * x + y * y + z * z <= hi2:
                        yield (x, y, z)
    else:
        raise ValueError("cell enumeration implemented for d <= 3 only")


def weight_at(j: int, k: tuple, alpha) -> float:
    """Polynomial weight at a lattice site: (1 + |2^-j k|^2)^(alpha/2)."""
    alpha = as_fraction(alpha)
    norm2 = Fraction(sum(int(c) * int(c) for c in k), 4**j)
    return float(1 + norm2) ** (float(alpha) / 2.0)


def block_scale(j: int, i: int, delta, alpha) -> float:
    """Per-cell operator scale 2^(-j*delta - i*alpha), constant normalized to 1."""
    e = -(j * as_fraction(delta) + i * as_fraction(alpha))
    return 2.0 ** float(e)


def make_block_cell(j: int, i: int, d: int, delta, alpha, mode: str = SURROGATE) -> BlockCell:
    return BlockCell(
        j=j,
        i=i,
        cardinality=block_cardinality(j, i, d, mode=mode),
        scale=block_scale(j, i, delta, alpha),
    )


def _aggregate(values, p: ExtReal) -> float:
    values = list(values)
    if not values:
        return 0.0
    if p.is_inf:
        return max(values)
    pf = float(p.frac)
    return sum(v**pf for v in values) ** (1.0 / pf)


def norm(seq: SparseSequence, spec: SequenceSpaceSpec) -> float:
    """Weighted mixed norm of a finitely supported sequence.

    On level j the entries are aggregated in l_p against the weights
    (1 + |2^-j k|^2)^(alpha/2); levels are aggregated in l_q with the
    factors 2^(j*s).  Suprema replace the sums at infinite exponents.
    """
    by_level: dict[int, list[float]] = {}
    for (j, k), value in seq.entries.items():
        by_level.setdefault(j, []).append(abs(value) * weight_at(j, k, spec.alpha))
    level_terms = []
    for j, vals in sorted(by_level.items()):
        level_terms.append(2.0 ** float(j * spec.s) * _aggregate(vals, spec.p))
    return _aggregate(level_terms, spec.q)

"""Embedding parameters and exact derived quantities.

The embedding under study is the identity between a weighted smoothness
space with exponents (s1, p1, q1) and weight (1+|x|^2)^(alpha/2) on R^d,
and an unweighted target with exponents (s2, p2, q2).  Everything that
decides a case of the exponent tables is exact: rationals are
`fractions.Fraction`, infinity is the tagged token `INF`, and no float
enters a comparison.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

RationalLike = Union[int, str, Fraction]

_INF_STRINGS = {"inf", "+inf", "infinity", "oo"}


@total_ordering
class ExtReal:
    """An exact extended real: a rational number or +infinity.

    Comparisons, reciprocals (1/inf == 0) and Lebesgue conjugation are
    exact.  Strings parse exactly: "inf", "a/b", integers, and decimal
    strings ("0.2" becomes 1/5, not a binary float).
    """

    __slots__ = ("_frac",)

    def __init__(self, value: "ExtReal | RationalLike | float | None" = None, *, inf: bool = False):
        if inf:
            self._frac: Optional[Fraction] = None
        elif isinstance(value, ExtReal):
            self._frac = value._frac
        elif isinstance(value, str):
            s = value.strip().lower()
            self._frac = None if s in _INF_STRINGS else Fraction(s)
        elif isinstance(value, float):
            if math.isinf(value) and value > 0:
                self._frac = None
            elif value == int(value):
                self._frac = Fraction(int(value))
            else:
                raise ValueError(
                    "pass non-integral decimals as strings for exact conversion, got %r" % value
                )
        elif isinstance(value, (int, Fraction)):
            self._frac = Fraction(value)
        else:
            raise TypeError("cannot build ExtReal from %r" % (value,))

    @property
    def is_inf(self) -> bool:
        return self._frac is None

    @property
    def frac(self) -> Fraction:
        if self._frac is None:
            raise ValueError("infinite ExtReal has no rational value")
        return self._frac

    def inv(self) -> Fraction:
        """Exact reciprocal; 1/inf is 0."""
        if self._frac is None:
            return Fraction(0)
        return 1 / self._frac

    def conjugate(self) -> "ExtReal":
        """Lebesgue conjugate exponent p' with 1/p + 1/p' = 1, for p in [1, inf]."""
        if self._frac is None:
            return ExtReal(1)
        if self._frac == 1:
            return INF
        if self._frac < 1:
            raise ValueError("conjugate defined for p >= 1, got %s" % self)
        return ExtReal(self._frac / (self._frac - 1))

    def _key(self, other):
        if isinstance(other, ExtReal):
            return other
        if isinstance(other, (int, Fraction, str)):
            return ExtReal(other)
        if isinstance(other, float):
            return ExtReal(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        o = self._key(other)
        if o is NotImplemented:
            return NotImplemented
        return self._frac == o._frac

    def __lt__(self, other) -> bool:
        o = self._key(other)
        if o is NotImplemented:
            return NotImplemented
        if self._frac is None:
            return False
        if o._frac is None:
            return True
        return self._frac < o._frac

    def __hash__(self):
        return hash(("ExtReal", self._frac))

    def __float__(self) -> float:
        return math.inf if self._frac is None else float(self._frac)

    def __str__(self) -> str:
        return "inf" if self._frac is None else str(self._frac)

    def __repr__(self) -> str:
        return "ExtReal(%s)" % ("'inf'" if self._frac is None else repr(str(self._frac)))


INF = ExtReal(inf=True)


def as_fraction(value: RationalLike | Fraction) -> Fraction:
    """Exact rational from int, Fraction, or string ("a/b" or decimal)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("expected an exact rational, got %r" % (value,))


@dataclass(frozen=True)
class EmbeddingParams:
    """The tuple (s1, s2, p1, p2, q1, q2, d, alpha) with exact entries.

    The constructor only coerces types.  Structural invariants (s2 < s1,
    p and q in [1, inf], alpha > 0) are reported by :func:`validate`;
    non-compact and even ill-ordered inputs stay representable because
    the compactness predicate itself must be testable on them.
    """

    s1: Fraction
    s2: Fraction
    p1: ExtReal
    p2: ExtReal
    d: int = 1
    alpha: Fraction = Fraction(1)
    q1: ExtReal = INF
    q2: ExtReal = INF

    def __post_init__(self):
        object.__setattr__(self, "s1", as_fraction(self.s1))
        object.__setattr__(self, "s2", as_fraction(self.s2))
        object.__setattr__(self, "p1", ExtReal(self.p1))
        object.__setattr__(self, "p2", ExtReal(self.p2))
        object.__setattr__(self, "q1", ExtReal(self.q1))
        object.__setattr__(self, "q2", ExtReal(self.q2))
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "alpha", as_fraction(self.alpha))


@dataclass(frozen=True)
class DerivedQuantities:
    """Everything the case tables read: delta, mu, 1/p~, theta, theta1, conjugates.

    theta is present iff p2 != 2, theta1 iff p1 != 2; the case tables
    never read them where their denominators vanish.
    """

    delta: Fraction
    mu: Fraction
    p_tilde_inv: Fraction
    theta: Optional[Fraction]
    theta1: Optional[Fraction]
    p1_conj: ExtReal
    p2_conj: ExtReal


def derive(params: EmbeddingParams) -> DerivedQuantities:
    """Compute the derived quantities exactly.

    delta = s1 - s2 - d(1/p1 - 1/p2), mu = min(alpha, delta),
    1/p~ = mu/d + 1/p1,
    theta  = (1/p1 - 1/p2) / (1/2 - 1/p2)   (absent when p2 == 2),
    theta1 = (1/p1 - 1/p2) / (1/p1 - 1/2)   (absent when p1 == 2).

    delta <= 0 is allowed here; downstream gates reject it.
    """
    ip1, ip2 = params.p1.inv(), params.p2.inv()
    delta = params.s1 - params.s2 - params.d * (ip1 - ip2)
    mu = min(params.alpha, delta)
    half = Fraction(1, 2)
    theta = None if ip2 == half else (ip1 - ip2) / (half - ip2)
    theta1 = None if ip1 == half else (ip1 - ip2) / (ip1 - half)
    return DerivedQuantities(
        delta=delta,
        mu=mu,
        p_tilde_inv=mu / params.d + ip1,
        theta=theta,
        theta1=theta1,
        p1_conj=params.p1.conjugate(),
        p2_conj=params.p2.conjugate(),
    )


def is_compact(params: EmbeddingParams) -> bool:
    """Exact compactness test: min(alpha, delta) > d * max(1/p2 - 1/p1, 0)."""
    der = derive(params)
    rhs = params.d * max(params.p2.inv() - params.p1.inv(), Fraction(0))
    return min(params.alpha, der.delta) > rhs


def validate(params: EmbeddingParams) -> list[str]:
    """Report every violated structural invariant; never raises."""
    violations = []
    if not params.s2 < params.s1:
        violations.append("s2 < s1 required")
    if not params.alpha > 0:
        violations.append("alpha > 0 required")
    for name in ("p1", "p2", "q1", "q2"):
        v: ExtReal = getattr(params, name)
        if not v.is_inf and v.frac < 1:
            violations.append("%s in [1, inf] required" % name)
    if params.d < 1:
        violations.append("d >= 1 required")
    return violations


_FIELDS = ("s1", "s2", "p1", "p2", "q1", "q2", "d", "alpha")


def parse_params(text: str) -> EmbeddingParams:
    """Parse parameters from flat key=value text or a JSON object.

    Fields: s1, s2, p1, p2, q1, q2, d, alpha.  "inf" denotes infinity;
    rationals accept "a/b" and decimal strings (exact conversion).  The
    fine indices q1, q2 default to inf when omitted (the non-limiting
    exponents do not depend on them).
    """
    text = text.strip()
    if text.startswith("{"):
        raw = json.loads(text, parse_float=Fraction, parse_int=int)
        fields = {k: raw[k] for k in raw}
    else:
        fields = {}
        for token in text.replace(",", " ").replace(";", " ").split():
            if "=" not in token:
                raise ValueError("expected key=value, got %r" % token)
            key, _, value = token.partition("=")
            fields[key.strip()] = value.strip()
    unknown = set(fields) - set(_FIELDS)
    if unknown:
        raise ValueError("unknown parameter fields: %s" % ", ".join(sorted(unknown)))
    missing = {"s1", "s2", "p1", "p2", "d", "alpha"} - set(fields)
    if missing:
        raise ValueError("missing parameter fields: %s" % ", ".join(sorted(missing)))

    def rat(v) -> Fraction:
        if isinstance(v, str):
            return Fraction(v.strip())
        if isinstance(v, (int, Fraction)):
            return Fraction(v)
        raise ValueError("expected exact rational, got %r" % (v,))

    return EmbeddingParams(
        s1=rat(fields["s1"]),
        s2=rat(fields["s2"]),
        p1=ExtReal(fields["p1"]),
        p2=ExtReal(fields["p2"]),
        q1=ExtReal(fields.get("q1", INF)),
        q2=ExtReal(fields.get("q2", INF)),
        d=int(str(fields["d"])),
        alpha=rat(fields["alpha"]),
    )


def params_as_dict(params: EmbeddingParams) -> dict[str, str]:
    """Exact string form of every field, for JSON round trips."""
    return {
        "s1": str(params.s1),
        "s2": str(params.s2),
        "p1": str(params.p1),
        "p2": str(params.p2),
        "q1": str(params.q1),
        "q2": str(params.q2),
        "d": str(params.d),
        "alpha": str(params.alpha),
    }

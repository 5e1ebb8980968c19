"""Walk the exponent tables on a handful of embeddings.

For each parameter tuple (s1, s2, p1, p2, q1, q2, d, alpha) the width
exponent kappa is an exact rational decided by strict inequalities in
(p1, p2, mu/d), where mu = min(alpha, delta) and
delta = s1 - s2 - d(1/p1 - 1/p2).  This script classifies a few
embeddings for both width kinds, shows the declared failure modes, and
sweeps mu across a case boundary to display the regime switch.
"""

from fractions import Fraction as F

from nwidths import (
    EmbeddingParams,
    WidthError,
    compare_widths,
    derive,
    gelfand_exponent,
    is_compact,
    kolmogorov_exponent,
    kolmogorov_exponent_ratio,
)
from nwidths.params import ExtReal

EXAMPLES = [
    ("smooth into L2", EmbeddingParams(s1=2, s2=0, p1=1, p2=2, d=1, alpha=1)),
    ("beyond L2", EmbeddingParams(s1=F(15, 4), s2=0, p1=1, p2=4, d=1, alpha=2)),
    ("weak weight", EmbeddingParams(s1=F(3, 2), s2=0, p1=2, p2=4, d=1, alpha=F(1, 5))),
    ("decreasing p", EmbeddingParams(s1=1, s2=0, p1=4, p2=2, d=1, alpha=1)),
    ("limiting case", EmbeddingParams(s1=F(3, 2), s2=0, p1=1, p2=2, d=1, alpha=1)),
    ("not compact", EmbeddingParams(s1=F(3, 2), s2=0, p1=2, p2=1, d=1, alpha=F(3, 10))),
]


def describe(label, params):
    der = derive(params)
    print("%-14s delta=%s mu=%s compact=%s" % (label, der.delta, der.mu, is_compact(params)))
    for kind, classify in (("kolmogorov", kolmogorov_exponent), ("gelfand", gelfand_exponent)):
        try:
            dec = classify(params)
            print("   %-10s case %-3s kappa = %s" % (kind, dec.case_id, dec.kappa))
        except WidthError as err:
            print("   %-10s %s: %s" % (kind, type(err).__name__, err))
    verdict = compare_widths(params)
    print(
        "   comparisons a~c=%s a~d=%s c~d=%s via %s"
        % (verdict.a_sim_c, verdict.a_sim_d, verdict.c_sim_d, verdict.matched_clauses)
    )


def sweep_mu():
    # crossing mu = d/p2 at p1 = 1, p2 = 4 switches the Kolmogorov
    # exponent from the Gaussian-band rate to mu * p2 / (2d)
    print("\nmu/d sweep at (p1, p2) = (1, 4), boundary at 1/4:")
    for k in range(1, 10):
        r = F(k, 16)
        try:
            dec = kolmogorov_exponent_ratio(ExtReal(1), ExtReal(4), r)
            print("   mu/d = %-5s case %-3s kappa = %s" % (r, dec.case_id, dec.kappa))
        except WidthError as err:
            print("   mu/d = %-5s %s" % (r, type(err).__name__))


if __name__ == "__main__":
    for label, params in EXAMPLES:
        describe(label, params)
    sweep_mu()

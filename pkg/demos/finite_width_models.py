"""Finite-dimensional width models, their duality, and the subset oracle.

The identity l_p1^N -> l_p2^N carries a small table of model widths
(order constants normalized to 1).  Two checks make the table
trustworthy at desk scale: the exact p2 < p1 formula agrees with a
brute-force enumeration of coordinate subspaces, and the Gelfand table
is the Kolmogorov table read through the duality (p1, p2) ->
(p2', p1').
"""

from fractions import Fraction as F

from nwidths import (
    FiniteWidthQuery,
    coordinate_oracle,
    dualize,
    gelfand_model,
    kolmogorov_model,
)


def width_profile():
    print("Kolmogorov width of id: l_1^64 -> l_4^64 (Gaussian-type decay):")
    for n in (1, 4, 8, 16, 32, 64, 65):
        w = kolmogorov_model(1, 4, 64, n)
        print("   n=%-3d value=%-10.4g fidelity=%-6s clause=%s" % (n, w.value, w.fidelity, w.formula_tag))


def oracle_check():
    print("\nexact clause vs subset enumeration, id: l_4^10 -> l_2^10:")
    for n in (1, 3, 6, 10):
        model = kolmogorov_model(4, 2, 10, n).value
        oracle = coordinate_oracle(4, 2, 10, n)
        print("   n=%-3d model=%-12.8g oracle=%-12.8g agree=%s" % (
            n, model, oracle, abs(model - oracle) <= 1e-12 * model))


def duality_tour():
    print("\nduality: gelfand(p1, p2) == kolmogorov(p2', p1'), same N and n:")
    for p1, p2, N, n in ((F(4, 3), 8, 256, 16), (4, 2, 10, 3), (3, 4, 64, 9)):
        q = FiniteWidthQuery("gelfand", p1, p2, N, n)
        dq = dualize(q)
        g = gelfand_model(q.p1, q.p2, N, n)
        k = kolmogorov_model(dq.p1, dq.p2, N, n)
        print("   (%s, %s) -> (%s, %s): %.8g vs %.8g [%s]" % (
            q.p1, q.p2, dq.p1, dq.p2, g.value, k.value, g.formula_tag))
        assert dualize(dq) == q


if __name__ == "__main__":
    width_profile()
    oracle_check()
    duality_tour()

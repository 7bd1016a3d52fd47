"""Mapping cylinder of a chain homotopy equivalence, as a strong equivalence.

For f: C -> F the cylinder is Cyl(f)_n = C_n (+) C_{n-1} (+) F_n with

    d(c, c', x) = (dc - c', -dc', dx + f(c')).

The reduction Cyl => F is classical and exact:
f(c, c', x) = f(c) + x, g(x) = (0, 0, x), h(c, c', x) = (0, -c, 0).

The reduction Cyl => C exists because f is a homotopy equivalence:
G(c) = (c, 0, 0) and F(c, c', x) = c - k'(c') + g(x) satisfy FG = id
exactly, and an explicit homotopy between id and GF is assembled from the
equivalence data (h_rho + V f_rho - G F h_rho with V(x) = (0, gx, kx));
force_reduction then turns that homotopy into a genuine reduction.
"""

from __future__ import annotations

from .chain import ChainComplex, Morphism
from .combinations import Combination
from .reduction import Equivalence, HomotopyEquivalence, Reduction, force_reduction


def mapping_cylinder_equivalence(he: HomotopyEquivalence) -> Equivalence:
    c_cx, f_cx = he.left, he.right
    f, g, k, kp = he.f, he.g, he.k, he.kp

    def basis(n):
        bc = c_cx._basis(n) if n >= 0 else []
        bs = c_cx._basis(n - 1) if n - 1 >= 0 else []
        bf = f_cx._basis(n) if n >= 0 else []
        if bc is None or bs is None or bf is None:
            return None
        return ([("c", x) for x in bc] + [("s", x) for x in bs]
                + [("f", x) for x in bf])

    def tag(part, comb, n):
        return Combination(n, {(part, g2): co for g2, co in comb})

    def diff(n, gen):
        part, x = gen
        if part == "c":
            return tag("c", c_cx.differential.of_gen(n, x), n - 1)
        if part == "s":
            # x has degree n-1 in C
            out = Combination.unit(n - 1, ("c", x)).scale(-1)
            out = out + tag("s", c_cx.differential.of_gen(n - 1, x).scale(-1), n - 1)
            return out + tag("f", f.of_gen(n - 1, x), n - 1)
        return tag("f", f_cx.differential.of_gen(n, x), n - 1)

    cyl = ChainComplex(basis, diff, name=f"Cyl({c_cx.name}->{f_cx.name})")

    # ----- reduction Cyl => F (exact closed form) -----
    def f_rho(n, gen):
        part, x = gen
        if part == "c":
            return f.of_gen(n, x)
        if part == "f":
            return Combination.unit(n, x)
        return Combination.zero(n)

    def h_rho(n, gen):
        part, x = gen
        if part == "c":
            return Combination.unit(n + 1, ("s", x)).scale(-1)
        return Combination.zero(n + 1)

    rho = Reduction(
        Morphism(cyl, f_cx, 0, f_rho, name="cyl_f"),
        Morphism(f_cx, cyl, 0,
                 lambda n, x: Combination.unit(n, ("f", x)), name="cyl_g"),
        Morphism(cyl, cyl, 1, h_rho, name="cyl_h"))

    # ----- reduction Cyl => C (repaired from equivalence data) -----
    def big_f(n, gen):
        part, x = gen
        if part == "c":
            return Combination.unit(n, x)
        if part == "s":
            return kp.of_gen(n - 1, x).scale(-1)
        return g.of_gen(n, x)

    big_f_m = Morphism(cyl, c_cx, 0, big_f, name="cyl_F")
    big_g_m = Morphism(c_cx, cyl, 0,
                       lambda n, x: Combination.unit(n, ("c", x)), name="cyl_G")

    def v_map(n, x):
        # V: F -> Cyl, V(x) = (0, g x, k x)
        return tag("s", g.of_gen(n, x), n + 1) + tag("f", k.of_gen(n, x), n + 1)

    v_m = Morphism(f_cx, cyl, 1, v_map, name="cyl_V")
    h0 = (rho.h + v_m.compose(rho.f)
          - big_g_m.compose(big_f_m).compose(rho.h))
    rho_prime = force_reduction(big_f_m, big_g_m, h0)

    return Equivalence(rho_prime, rho)

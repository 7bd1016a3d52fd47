"""Perturbation lemmas and the span calculus built on them.

basic_perturbation_lemma: given a reduction (f, g, h): C => D and a
perturbation delta of d_C with h.delta locally nilpotent, the series

    phi = sum_{i>=0} (-1)^i (h delta)^i      (finite on each element)

produces the perturbed reduction: top differential d_C + delta, bottom
d_D + f delta phi g, f' = f (id - delta phi h), g' = phi g, h' = phi h.
The series is evaluated per element under an iteration budget; exceeding
the budget raises NilpotencyBudgetExceeded, signalling that the local
nilpotency hypothesis fails or the budget is too small.

easy_perturbation_lemma transfers a perturbation arriving on the small
complex: top becomes d_C + g delta f with (f, g, h) unchanged.

compose_equivalences joins two spans sharing a bottom complex B through the
homotopy pullback T_n = X_n (+) Y_n (+) B_{n+1},
d(x, y, b) = (dx, dy, f1 x - f2 y - db); the reductions T => X and T => Y
have closed forms assembled from the two reductions onto B (a cone
contraction plus a nilpotency-order-2 perturbation, here inlined).
"""

from __future__ import annotations

from .chain import ChainComplex, ComplexMismatch, Morphism
from .combinations import Combination
from .reduction import (
    Equivalence,
    Reduction,
    compose_reductions,
    identity_reduction,
)


class NilpotencyBudgetExceeded(Exception):
    def __init__(self, degree, gen, budget):
        super().__init__(
            f"perturbation series did not vanish within {budget} terms "
            f"on generator {gen!r} of degree {degree}")
        self.degree = degree
        self.gen = gen
        self.budget = budget


class DifferentialNotSquareZero(Exception):
    pass


def rebase(m: Morphism, source, target) -> Morphism:
    """Same action, different end complexes (shares the evaluation cache)."""
    return Morphism(source, target, m.degree, m.of_gen, name=m.name)


def perturbed_complex(c: ChainComplex, delta: Morphism, name="") -> ChainComplex:
    return ChainComplex(
        c._basis,
        lambda n, g: c.differential.of_gen(n, g) + delta.of_gen(n, g),
        name=name or f"{c.name}~")


def validate_square_zero(c: ChainComplex, degrees, gens=None):
    for n in degrees:
        pool = gens(n) if callable(gens) else (gens.get(n, []) if gens else c.basis(n))
        for g in pool:
            if not c.d(c.d(Combination.unit(n, g))).is_zero():
                raise DifferentialNotSquareZero(
                    f"(d)^2 != 0 on {g!r} in degree {n} of {c.name}")


def _budget(max_iters, n):
    if max_iters is None:
        return 1 + 4 * max(n, 0)
    if callable(max_iters):
        return max_iters(n)
    return max_iters


def _series_morphism(h, delta, complex_, max_iters, name):
    """phi = sum (-1)^i (h delta)^i as a morphism on complex_."""
    def phi(n, g):
        acc = Combination.unit(n, g)
        term = acc
        budget = _budget(max_iters, n)
        i = 0
        while True:
            term = h(delta(term))
            if term.is_zero():
                return acc
            i += 1
            if i > budget:
                raise NilpotencyBudgetExceeded(n, g, budget)
            acc = acc + term.scale((-1) ** i)

    return Morphism(complex_, complex_, 0, phi, name=name)


def basic_perturbation_lemma(r: Reduction, delta: Morphism, max_iters=None,
                             check_degrees=None) -> Reduction:
    """Perturb a reduction by delta on the top differential."""
    if delta.source is not r.top or delta.target is not r.top or delta.degree != -1:
        raise ComplexMismatch("delta must be a degree -1 operator on the top complex")
    new_top = perturbed_complex(r.top, delta)
    if check_degrees is not None:
        validate_square_zero(new_top, check_degrees)
    return _bpl_onto(r, delta, new_top, max_iters)


def _bpl_onto(r: Reduction, delta: Morphism, new_top: ChainComplex,
              max_iters=None) -> Reduction:
    """BPL core with the perturbed top complex supplied by the caller."""
    phi = _series_morphism(r.h, delta, r.top, max_iters, "phi")
    d_bottom_extra = r.f.compose(delta).compose(phi).compose(r.g)
    new_bottom = perturbed_complex(r.bottom, d_bottom_extra)

    def f2(n, g):
        x = Combination.unit(n, g)
        return r.f(x - delta(phi(r.h(x))))

    f_new = Morphism(new_top, new_bottom, 0, f2, name=f"{r.f.name}~")
    g_new = Morphism(new_bottom, new_top, 0,
                     lambda n, g: phi(r.g.of_gen(n, g)), name=f"{r.g.name}~")
    h_new = Morphism(new_top, new_top, 1,
                     lambda n, g: phi(r.h.of_gen(n, g)), name=f"{r.h.name}~")
    return Reduction(f_new, g_new, h_new)


def easy_perturbation_lemma(r: Reduction, delta_hat: Morphism,
                            check_degrees=None) -> Reduction:
    """Perturb the bottom differential; the top follows as d_C + g delta f."""
    if (delta_hat.source is not r.bottom or delta_hat.target is not r.bottom
            or delta_hat.degree != -1):
        raise ComplexMismatch("delta_hat must be a degree -1 operator on the bottom")
    new_bottom = perturbed_complex(r.bottom, delta_hat)
    if check_degrees is not None:
        validate_square_zero(new_bottom, check_degrees)
    lifted = r.g.compose(delta_hat).compose(r.f)
    new_top = perturbed_complex(r.top, lifted)
    return Reduction(rebase(r.f, new_top, new_bottom),
                     rebase(r.g, new_bottom, new_top),
                     rebase(r.h, new_top, new_top))


def perturb_equivalence(e: Equivalence, delta_hat: Morphism, max_iters=None) -> Equivalence:
    """Perturb a span by a perturbation of its LEFT bottom differential.

    The perturbation is lifted through the left leg (easy lemma) and pushed
    down the right leg (basic lemma); both legs keep the same, shared,
    perturbed top complex.
    """
    if delta_hat.source is not e.left_bottom or delta_hat.degree != -1:
        raise ComplexMismatch("delta_hat must be a degree -1 operator on the left bottom")
    new_left_bottom = perturbed_complex(e.left_bottom, delta_hat)
    delta_top = e.left.g.compose(delta_hat).compose(e.left.f)
    new_top = perturbed_complex(e.top, delta_top)
    left = Reduction(rebase(e.left.f, new_top, new_left_bottom),
                     rebase(e.left.g, new_left_bottom, new_top),
                     rebase(e.left.h, new_top, new_top))
    right = _bpl_onto(
        Reduction(rebase(e.right.f, e.top, e.right.bottom),
                  rebase(e.right.g, e.right.bottom, e.top),
                  rebase(e.right.h, e.top, e.top)),
        rebase(delta_top, e.top, e.top), None, max_iters)
    # _bpl_onto built its own perturbed top; rebase the right leg onto new_top
    right = Reduction(rebase(right.f, new_top, right.bottom),
                      rebase(right.g, right.bottom, new_top),
                      rebase(right.h, new_top, new_top))
    return Equivalence(left, right)


def compose_equivalences(e1: Equivalence, e2: Equivalence) -> Equivalence:
    """Join A <== X ==> B with B <== Y ==> C into A <== T ==> C."""
    if e1.right_bottom is not e2.left_bottom:
        raise ComplexMismatch("spans do not share their middle complex")
    if e1.right.is_identity:
        # X is B: pull e1.left back along e2.left
        return Equivalence(compose_reductions(e2.left, e1.left), e2.right)
    if e2.left.is_identity:
        return Equivalence(e1.left, compose_reductions(e1.right, e2.right))

    x_cx, y_cx, b_cx = e1.top, e2.top, e1.right_bottom
    f1, g1, h1 = e1.right.f, e1.right.g, e1.right.h
    f2, g2, h2 = e2.left.f, e2.left.g, e2.left.h

    def basis(n):
        bx = x_cx._basis(n) if n >= 0 else []
        by = y_cx._basis(n) if n >= 0 else []
        bb = b_cx._basis(n + 1) if n + 1 >= 0 else []
        if bx is None or by is None or bb is None:
            return None
        return ([("x", g) for g in bx] + [("y", g) for g in by]
                + [("b", g) for g in bb])

    def tag(part, comb, n):
        return Combination(n, {(part, g): c for g, c in comb})

    def diff(n, tg):
        part, g = tg
        if part == "x":
            dx = x_cx.differential.of_gen(n, g)
            fx = f1.of_gen(n, g)
            return tag("x", dx, n - 1) + tag("b", fx, n - 1)
        if part == "y":
            dy = y_cx.differential.of_gen(n, g)
            fy = f2.of_gen(n, g)
            return tag("y", dy, n - 1) + tag("b", fy.scale(-1), n - 1)
        db = b_cx.differential.of_gen(n + 1, g)
        return tag("b", db.scale(-1), n - 1)

    t_cx = ChainComplex(basis, diff, name=f"pullback({x_cx.name},{y_cx.name})")

    def split(comb):
        n = comb.degree
        x = Combination(n)
        y = Combination(n)
        b = Combination(n + 1)
        for (part, g), c in comb:
            if part == "x":
                x = x + Combination.unit(n, g).scale(c)
            elif part == "y":
                y = y + Combination.unit(n, g).scale(c)
            else:
                b = b + Combination.unit(n + 1, g).scale(c)
        return x, y, b

    # reduction T => X: f(x,y,b) = x; g(x) = (x, g2 f1 x, 0);
    # h(x,y,b) = (0, h2 y - g2 b, 0)
    fx = Morphism(t_cx, x_cx, 0,
                  lambda n, tg: split(Combination.unit(n, tg))[0] if tg[0] == "x"
                  else Combination.zero(n),
                  name="pb_fx")
    gx = Morphism(x_cx, t_cx, 0,
                  lambda n, g: (Combination.unit(n, ("x", g))
                                + tag("y", g2(f1.of_gen(n, g)), n)),
                  name="pb_gx")

    def hx(n, tg):
        part, g = tg
        if part == "y":
            return tag("y", h2.of_gen(n, g), n + 1)
        if part == "b":
            return tag("y", g2.of_gen(n + 1, g).scale(-1), n + 1)
        return Combination.zero(n + 1)

    red_x = Reduction(fx, gx, Morphism(t_cx, t_cx, 1, hx, name="pb_hx"))

    # reduction T => Y: f(x,y,b) = y; g(y) = (g1 f2 y, y, 0);
    # h(x,y,b) = (h1 x + g1 b, 0, 0)
    fy = Morphism(t_cx, y_cx, 0,
                  lambda n, tg: split(Combination.unit(n, tg))[1] if tg[0] == "y"
                  else Combination.zero(n),
                  name="pb_fy")
    gy = Morphism(y_cx, t_cx, 0,
                  lambda n, g: (Combination.unit(n, ("y", g))
                                + tag("x", g1(f2.of_gen(n, g)), n)),
                  name="pb_gy")

    def hy(n, tg):
        part, g = tg
        if part == "x":
            return tag("x", h1.of_gen(n, g), n + 1)
        if part == "b":
            return tag("x", g1.of_gen(n + 1, g), n + 1)
        return Combination.zero(n + 1)

    red_y = Reduction(fy, gy, Morphism(t_cx, t_cx, 1, hy, name="pb_hy"))

    return Equivalence(compose_reductions(red_x, e1.left),
                       compose_reductions(red_y, e2.right))


def transfer_contraction(e: Equivalence):
    """Transport the left bottom's structure to the right bottom as a contraction.

    Returns (eps, iota, h) with eps: R -> L, iota: L -> R and
    dh + hd = id_R - iota eps on the right bottom R.  When L is the
    one-point complex this is exactly an augmentation, a degree -1 unit,
    and a contracting homotopy on R.
    """
    eps = e.left.f.compose(e.right.g)
    iota = e.right.f.compose(e.left.g)
    h = e.right.f.compose(e.left.h).compose(e.right.g)
    return eps, iota, h

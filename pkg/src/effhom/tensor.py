"""Tensor products and direct sums of complexes, morphisms, reductions.

Tensor generators are 4-tuples (p, x, q, y) with p + q the total degree;
the left degree p rides along so Koszul signs are computable locally.
Signs follow the Koszul rule: (phi (x) psi)(x (x) y) =
(-1)^(|psi| * p) phi(x) (x) psi(y), and d(x (x) y) = dx (x) y +
(-1)^p x (x) dy.

The tensor of two reductions uses h = h1 (x) id + (g1 f1) (x) h2, which
satisfies all five identities under the Koszul convention (checked by the
test suite rather than asserted blindly).
"""

from __future__ import annotations

from .chain import ChainComplex, Morphism
from .combinations import Combination
from .reduction import Equivalence, Reduction, identity_morphism


def tensor_complex(c: ChainComplex, d: ChainComplex, name="") -> ChainComplex:
    def basis(n):
        out = []
        for p in range(n + 1):
            q = n - p
            bx = c._basis(p) if p >= 0 else []
            by = d._basis(q) if q >= 0 else []
            if bx is None or by is None:
                return None
            for x in bx:
                for y in by:
                    out.append((p, x, q, y))
        return out

    def diff(n, gen):
        p, x, q, y = gen
        out = Combination(n - 1)
        dx = c.differential.of_gen(p, x)
        for x2, coeff in dx:
            out = out + Combination.unit(n - 1, (p - 1, x2, q, y)).scale(coeff)
        dy = d.differential.of_gen(q, y)
        sign = -1 if p % 2 else 1
        for y2, coeff in dy:
            out = out + Combination.unit(n - 1, (p, x, q - 1, y2)).scale(sign * coeff)
        return out

    return ChainComplex(basis, diff, name=name or f"({c.name})(x)({d.name})")


def tensor_morphism(phi: Morphism, psi: Morphism, source: ChainComplex,
                    target: ChainComplex) -> Morphism:
    dphi, dpsi = phi.degree, psi.degree

    def act(n, gen):
        p, x, q, y = gen
        sign = -1 if (dpsi * p) % 2 else 1
        fx = phi.of_gen(p, x)
        fy = psi.of_gen(q, y)
        out = Combination(n + dphi + dpsi)
        for x2, cx in fx:
            for y2, cy in fy:
                out = out + Combination.unit(
                    n + dphi + dpsi, (p + dphi, x2, q + dpsi, y2)).scale(sign * cx * cy)
        return out

    return Morphism(source, target, dphi + dpsi, act,
                    name=f"({phi.name})(x)({psi.name})")


def tensor_reduction(r1: Reduction, r2: Reduction, top=None, bottom=None) -> Reduction:
    top = top if top is not None else tensor_complex(r1.top, r2.top)
    bottom = bottom if bottom is not None else tensor_complex(r1.bottom, r2.bottom)
    f = tensor_morphism(r1.f, r2.f, top, bottom)
    g = tensor_morphism(r1.g, r2.g, bottom, top)
    id1 = identity_morphism(r1.top)
    id2 = identity_morphism(r2.top)
    h = (tensor_morphism(r1.h, id2, top, top)
         + tensor_morphism(r1.g.compose(r1.f), r2.h, top, top))
    return Reduction(f, g, h,
                     is_identity=r1.is_identity and r2.is_identity)


def tensor_equivalence(e1: Equivalence, e2: Equivalence) -> Equivalence:
    """Tensor two spans legwise around a single shared top complex."""
    top = tensor_complex(e1.top, e2.top)
    left_bottom = tensor_complex(e1.left_bottom, e2.left_bottom)
    right_bottom = tensor_complex(e1.right_bottom, e2.right_bottom)
    left = tensor_reduction(e1.left, e2.left, top=top, bottom=left_bottom)
    right = tensor_reduction(e1.right, e2.right, top=top, bottom=right_bottom)
    return Equivalence(left, right)


# ----- direct sums -----

def direct_sum_complex(parts, name="") -> ChainComplex:
    parts = list(parts)

    def basis(n):
        out = []
        for i, p in enumerate(parts):
            b = p._basis(n) if n >= 0 else []
            if b is None:
                return None
            out.extend((i, g) for g in b)
        return out

    def diff(n, tg):
        i, g = tg
        inner = parts[i].differential.of_gen(n, g)
        return Combination(n - 1, {(i, h): c for h, c in inner})

    return ChainComplex(basis, diff, name=name or "direct_sum")


def _summand_morphism(parts_maps, source, target, degree, name=""):
    def act(n, tg):
        i, g = tg
        inner = parts_maps[i].of_gen(n, g)
        return Combination(n + degree, {(i, h): c for h, c in inner})

    return Morphism(source, target, degree, act, name=name)


def direct_sum_reduction(parts, top=None, bottom=None) -> Reduction:
    parts = list(parts)
    top = top if top is not None else direct_sum_complex([r.top for r in parts])
    bottom = bottom if bottom is not None else direct_sum_complex(
        [r.bottom for r in parts])
    f = _summand_morphism([r.f for r in parts], top, bottom, 0, "sum_f")
    g = _summand_morphism([r.g for r in parts], bottom, top, 0, "sum_g")
    h = _summand_morphism([r.h for r in parts], top, top, 1, "sum_h")
    return Reduction(f, g, h, is_identity=all(r.is_identity for r in parts))


def direct_sum_equivalence(parts) -> Equivalence:
    parts = list(parts)
    top = direct_sum_complex([e.top for e in parts])
    lb = direct_sum_complex([e.left_bottom for e in parts])
    rb = direct_sum_complex([e.right_bottom for e in parts])
    left = direct_sum_reduction([e.left for e in parts], top=top, bottom=lb)
    right = direct_sum_reduction([e.right for e in parts], top=top, bottom=rb)
    return Equivalence(left, right)

"""The Eilenberg-Zilber reduction, generically over bisimplicial data.

A BiOps object exposes horizontal and vertical faces/degeneracies on
bi-elements.  Two instances cover everything needed here:

  * ProductBiOps(X, Y): bidegree (p, q) elements are pairs (x, y); the
    diagonal is the Cartesian product X x Y.  Factors may be simplicial
    sets or "based module" factors whose faces may return None (a term
    killed by normalization, e.g. hitting a basepoint).
  * NerveBiOps(K): bidegree (p, q) elements are p-tuples over K_q; the
    horizontal direction is the levelwise nerve of the simplicial abelian
    group K and the diagonal is a model of the classifying space of K.

The reduction C^N(diag) => Tot^N has f = Alexander-Whitney (front face
(x) back face), g = the Eilenberg-MacLane shuffle, and h built from a
universal contraction: on the model Delta[n] x Delta[n] the last-vertex
cone operator T satisfies dT + Td = id - (apex) on normalized chains, so

    H_n = T((id - g f)(iota, iota) - h(d(iota, iota)))

solves dh + hd = id - gf by induction, and naturality transports H_n to
any bisimplicial instance by relabelling vertices through the classifying
map.  The five reduction identities are then enforced with the generic
repair (see reduction.force_reduction); the identity suite is normative.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .chain import ChainComplex, Morphism
from .combinations import Combination
from .reduction import Reduction, force_reduction
from .simplicial import SimplicialSet, normalized_chains


class Simplex(SimplicialSet):
    """The standard n-simplex: k-simplices are monotone vertex tuples."""

    def __init__(self, n):
        self.n = n
        self.name = f"D[{n}]"

    def face(self, i, k, x):
        return x[:i] + x[i + 1:]

    def degeneracy(self, i, k, x):
        return x[:i + 1] + x[i:]

    def nondeg(self, k):
        return [tuple(c) for c in itertools.combinations(range(self.n + 1), k + 1)]

    def is_degenerate(self, k, x):
        return any(a == b for a, b in zip(x, x[1:]))


class ProductBiOps:
    """Bidegree (p, q) elements are pairs (x in X_p, y in Y_q)."""

    def __init__(self, x_factor, y_factor):
        self.x = x_factor
        self.y = y_factor
        self.name = f"{x_factor.name}|x|{y_factor.name}"

    def face_h(self, i, p, q, z):
        fx = self.x.face(i, p, z[0])
        return None if fx is None else (fx, z[1])

    def face_v(self, i, p, q, z):
        fy = self.y.face(i, q, z[1])
        return None if fy is None else (z[0], fy)

    def degen_h(self, i, p, q, z):
        return (self.x.degeneracy(i, p, z[0]), z[1])

    def degen_v(self, i, p, q, z):
        return (z[0], self.y.degeneracy(i, q, z[1]))

    def is_degenerate_h(self, p, q, z):
        return self.x.is_degenerate(p, z[0])

    def is_degenerate_v(self, p, q, z):
        return self.y.is_degenerate(q, z[1])

    def tot_basis(self, p, q):
        bx = self.x.nondeg(p)
        by = self.y.nondeg(q)
        if bx is None or by is None:
            return None
        return [(x, y) for x in bx for y in by]

    def tot_label(self, n, p, z):
        return (p, z[0], n - p, z[1])

    def tot_unlabel(self, label):
        p, x, q, y = label
        return p, (x, y)

    def diag_basis(self, n):
        # nondegenerate diagonal simplices = pairs (s_I x, s_J y), I,J disjoint
        out = []
        for p in range(n + 1):
            for q in range(max(n - p, 0), n + 1):
                bx = self.x.nondeg(p)
                by = self.y.nondeg(q)
                if bx is None or by is None:
                    return None
                for i_set in itertools.combinations(range(n), n - p):
                    rest = [j for j in range(n) if j not in i_set]
                    for j_set in itertools.combinations(rest, n - q):
                        for x in bx:
                            xa, da = x, p
                            for i in sorted(i_set):
                                xa = self.x.degeneracy(i, da, xa)
                                da += 1
                            for y in by:
                                yb, db = y, q
                                for j in sorted(j_set):
                                    yb = self.y.degeneracy(j, db, yb)
                                    db += 1
                                out.append((xa, yb))
        return out


class NerveBiOps:
    """The levelwise nerve of a simplicial abelian group K.

    Bidegree (p, q): p-tuples of K_q-simplices.  Horizontally this is the
    bar-type nerve (drop / add adjacent / drop); vertically componentwise.
    """

    def __init__(self, k: SimplicialSet):
        if not hasattr(k, "mul"):
            raise TypeError("NerveBiOps needs a simplicial abelian group")
        self.k = k
        self.name = f"N({k.name})"

    def face_h(self, i, p, q, z):
        if i == 0:
            return z[1:]
        if i == p:
            return z[:-1]
        return z[:i - 1] + (self.k.mul(q, z[i - 1], z[i]),) + z[i + 1:]

    def face_v(self, i, p, q, z):
        return tuple(self.k.face(i, q, c) for c in z)

    def degen_h(self, i, p, q, z):
        return z[:i] + (self.k.zero(q),) + z[i:]

    def degen_v(self, i, p, q, z):
        return tuple(self.k.degeneracy(i, q, c) for c in z)

    def is_degenerate_h(self, p, q, z):
        zero = self.k.zero(q)
        return any(c == zero for c in z)

    def is_degenerate_v(self, p, q, z):
        if q == 0:
            return False
        for j in range(q):
            if all(self.k.degeneracy(j, q - 1, self.k.face(j, q, c)) == c
                   for c in z):
                return True
        return False

    def tot_basis(self, p, q):
        sims = self.k.simplices(q)
        if sims is None:
            return None
        zero = self.k.zero(q)
        pool = [c for c in sims if c != zero]
        return [z for z in itertools.product(pool, repeat=p)
                if not self.is_degenerate_v(p, q, z)]

    def tot_label(self, n, p, z):
        return (p, z)

    def tot_unlabel(self, label):
        return label

    def diag_basis(self, n):
        sims = self.k.simplices(n)
        if sims is None:
            return None
        space = DiagSpace(self)
        return [z for z in itertools.product(sims, repeat=n)
                if not space.is_degenerate(n, z)]


class DiagSpace(SimplicialSet):
    """The diagonal simplicial set of a BiOps object."""

    def __init__(self, biops):
        self.biops = biops
        self.name = f"diag({biops.name})"

    def face(self, i, n, z):
        w = self.biops.face_h(i, n, n, z)
        if w is None:
            return None
        return self.biops.face_v(i, n - 1, n, w)

    def degeneracy(self, i, n, z):
        w = self.biops.degen_h(i, n, n, z)
        return self.biops.degen_v(i, n + 1, n, w)

    def nondeg(self, n):
        return self.biops.diag_basis(n)

    def is_degenerate(self, n, z):
        if n == 0 or z is None:
            return z is None
        for i in range(n):
            y = self.face(i, n, z)
            if y is not None and self.degeneracy(i, n - 1, y) == z:
                return True
        return False


# diagonal simplicial abelian group structure, when the base has one
class DiagGroupSpace(DiagSpace):
    def mul(self, n, z, w):
        return tuple(self.biops.k.mul(n, a, b) for a, b in zip(z, w))

    def zero(self, n):
        return (self.biops.k.zero(n),) * n

    def neg(self, n, z):
        return tuple(self.biops.k.neg(n, a) for a in z)


def tot_chains(biops, name="") -> ChainComplex:
    """Normalized total complex: labels biops.tot_label(n, p, z)."""
    def basis(n):
        out = []
        for p in range(n + 1):
            b = biops.tot_basis(p, n - p)
            if b is None:
                return None
            out.extend(biops.tot_label(n, p, z) for z in b)
        return out

    def keep(p, q, z):
        return (z is not None and not biops.is_degenerate_h(p, q, z)
                and not biops.is_degenerate_v(p, q, z))

    def diff(n, label):
        p, z = biops.tot_unlabel(label)
        q = n - p
        out = Combination(n - 1)
        if p >= 1:
            for i in range(p + 1):
                w = biops.face_h(i, p, q, z)
                if keep(p - 1, q, w):
                    out = out + Combination.unit(
                        n - 1, biops.tot_label(n - 1, p - 1, w)).scale((-1) ** i)
        if q >= 1:
            sign = (-1) ** p
            for j in range(q + 1):
                w = biops.face_v(j, p, q, z)
                if keep(p, q - 1, w):
                    out = out + Combination.unit(
                        n - 1, biops.tot_label(n - 1, p, w)).scale(sign * (-1) ** j)
        return out

    return ChainComplex(basis, diff, name=name or f"Tot({biops.name})")


def _apply_direction(biops, z, p, q, theta, horizontal):
    """Apply the monotone map theta to one direction of a bi-element."""
    n = (p if horizontal else q)
    m = len(theta) - 1
    present = set(theta)
    for v in sorted((v for v in range(n + 1) if v not in present), reverse=True):
        if horizontal:
            z = biops.face_h(v, p, q, z)
            p -= 1
        else:
            z = biops.face_v(v, p, q, z)
            q -= 1
        if z is None:
            return None, p, q
    image = sorted(present)
    rank_of = {v: k for k, v in enumerate(image)}
    sigma = [rank_of[v] for v in theta]
    for i in sorted(j for j in range(m) if sigma[j] == sigma[j + 1]):
        if horizontal:
            z = biops.degen_h(i, p, q, z)
            p += 1
        else:
            z = biops.degen_v(i, p, q, z)
            q += 1
    return z, p, q


def apply_bimonotone(biops, n, z, a, b):
    """z . (a, b) for monotone maps a, b: [m] -> [n] on the two directions."""
    z, p, q = _apply_direction(biops, z, n, n, a, True)
    if z is None:
        return None
    z, p, q = _apply_direction(biops, z, p, q, b, False)
    return z


def aw_combination(biops, n, z) -> Combination:
    """Alexander-Whitney: sum over p of front-p-face (x) back-face parts."""
    out = Combination(n)
    back = z  # (d_0^v)^p z, at bidegree (n, n - p)
    for p in range(n + 1):
        q = n - p
        w = back
        wp = n
        for t in range(n, p, -1):
            w = biops.face_h(wp, wp, q, w)
            wp -= 1
            if w is None:
                break
        if w is not None and not biops.is_degenerate_h(p, q, w) \
                and not biops.is_degenerate_v(p, q, w):
            out = out + Combination.unit(n, biops.tot_label(n, p, w))
        if p < n:
            back = biops.face_v(0, n, q, back)
            if back is None:
                break
    return out


def _shuffles(p, q):
    for a_set in itertools.combinations(range(p + q), p):
        b_set = tuple(j for j in range(p + q) if j not in a_set)
        inversions = sum(1 for a in a_set for b in b_set if a > b)
        yield a_set, b_set, (-1) ** inversions


def eml_combination(biops, diag_space, n, label) -> Combination:
    """Eilenberg-MacLane shuffle of a tot generator into the diagonal."""
    p, z = biops.tot_unlabel(label)
    q = n - p
    out = Combination(n)
    for a_set, b_set, sign in _shuffles(p, q):
        w = z
        wp, wq = p, q
        for i in sorted(b_set):
            w = biops.degen_h(i, wp, wq, w)
            wp += 1
        for j in sorted(a_set):
            w = biops.degen_v(j, wp, wq, w)
            wq += 1
        if not diag_space.is_degenerate(n, w):
            out = out + Combination.unit(n, w).scale(sign)
    return out


@lru_cache(maxsize=None)
def _universal_shi(n):
    """The universal EZ homotopy H_n on Delta[n] x Delta[n].

    Returns a tuple of (a, b, coeff) with a, b monotone value-tuples
    [n+1] -> [n].  Computed by the last-vertex cone recursion and verified
    against its defining equation.
    """
    if n == 0:
        return ()
    model = ProductBiOps(Simplex(n), Simplex(n))
    diag = DiagSpace(model)
    iota = tuple(range(n + 1))
    gen = (iota, iota)

    def cone(comb: Combination) -> Combination:
        k = comb.degree
        out = Combination(k + 1)
        for (a, b), c in comb:
            if a[-1] == n and b[-1] == n:
                continue  # appending the apex again is degenerate
            w = (a + (n,), b + (n,))
            if not diag.is_degenerate(k + 1, w):
                out = out + Combination.unit(k + 1, w).scale(c * (-1) ** (k + 1))
        return out

    def lower_shi(comb: Combination) -> Combination:
        """Apply h (degree n-1 inputs) via the universal H_(n-1)."""
        k = comb.degree
        out = Combination(k + 1)
        table = _universal_shi(k)
        for (a, b), c in comb:
            for (ta, tb, tc) in table:
                w = (tuple(a[v] for v in ta), tuple(b[v] for v in tb))
                if not diag.is_degenerate(k + 1, w):
                    out = out + Combination.unit(k + 1, w).scale(c * tc)
        return out

    def d_diag(comb: Combination) -> Combination:
        k = comb.degree
        out = Combination(k - 1)
        for (a, b), c in comb:
            for i in range(k + 1):
                w = (a[:i] + a[i + 1:], b[:i] + b[i + 1:])
                if not diag.is_degenerate(k - 1, w):
                    out = out + Combination.unit(k - 1, w).scale(c * (-1) ** i)
        return out

    one = Combination.unit(n, gen)
    gf = Combination(n)
    for label, c in aw_combination(model, n, gen):
        gf = gf + eml_combination(model, diag, n, label).scale(c)
    w = one - gf - lower_shi(d_diag(one))
    h_n = cone(w)
    if d_diag(h_n) + lower_shi(d_diag(one)) != one - gf:
        raise AssertionError(f"universal EZ homotopy failed at n={n}")
    return tuple((a, b, c) for (a, b), c in h_n.items_sorted())


def shi_combination(biops, diag_space, n, z) -> Combination:
    out = Combination(n + 1)
    for (a, b, c) in _universal_shi(n):
        w = apply_bimonotone(biops, n, z, a, b)
        if w is not None and not diag_space.is_degenerate(n + 1, w):
            out = out + Combination.unit(n + 1, w).scale(c)
    return out


def ez_reduction(biops, diag_cx=None, tot_cx=None, diag_space=None,
                 repair=True) -> Reduction:
    """The reduction C^N(diag) => Tot^N for any bisimplicial instance."""
    if diag_space is None:
        diag_space = DiagSpace(biops)
    if diag_cx is None:
        diag_cx = normalized_chains(diag_space)
    if tot_cx is None:
        tot_cx = tot_chains(biops)

    f = Morphism(diag_cx, tot_cx, 0,
                 lambda n, z: aw_combination(biops, n, z), name="AW")
    g = Morphism(tot_cx, diag_cx, 0,
                 lambda n, label: eml_combination(biops, diag_space, n, label),
                 name="EML")
    h = Morphism(diag_cx, diag_cx, 1,
                 lambda n, z: shi_combination(biops, diag_space, n, z),
                 name="SHI")
    if repair:
        return force_reduction(f, g, h)
    return Reduction(f, g, h)

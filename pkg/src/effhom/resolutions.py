"""Free ZG-resolutions with contracting homotopies, and K(G,1) homology.

A free resolution is stored by its canonical generators: the differential
is given on (1, z) and extended ZG-linearly, while the contracting homotopy
is only Z-linear and is given on every pair (g, z).  Elements are
Combinations whose generators are pairs (group element, generator label).

The route to the homology of a group G from a small resolution F:

    1. take the (normalized) Bar resolution B of G;
    2. build comparison morphisms f: B -> F, g: F -> B and Z G-linear
       homotopies k (on F) and k' (on B) by recursion over the
       contracting homotopies;
    3. apply Z (x)_ZG - , which sends (g, z) to z;
    4. take the mapping cylinder of the induced homotopy equivalence.

The left bottom complex of the resulting strong equivalence is the
normalized chain complex of K(G,1) and the right one is Z (x) F, effective
whenever F has finite type, so homology groups are computable by Smith
normal form there.
"""

from __future__ import annotations

import itertools

from .chain import ChainComplex, Morphism
from .combinations import Combination
from .cylinder import mapping_cylinder_equivalence
from .groups import CyclicGroup, Group, Norm, cyclic
from .reduction import Equivalence, HomotopyEquivalence


class MissingHomotopy(Exception):
    pass


def act(group: Group, g, comb: Combination) -> Combination:
    """The G-action g . (h, z) = (gh, z), extended linearly."""
    if g == group.identity:
        return comb
    return Combination(comb.degree,
                       [((group.mul(g, h), z), c) for (h, z), c in comb])


class FreeResolution:
    """Free ZG-modules F_n with differential, augmentation and homotopy.

    gens(n): list of generator labels (None when not enumerable).
    diff_gen(n, z): differential of the canonical generator (1, z).
    homotopy_fn(n, g, z): Z-linear contracting homotopy on basis pairs.
    h_minus1: the degree-0 element h_{-1}(1); augmentation eps(z) = 1 by
    default (augmentations send every (g, z) to eps(z)).
    """

    def __init__(self, group: Group, gens, diff_gen, homotopy_fn, h_minus1,
                 augmentation=None, name=""):
        self.group = group
        self._gens = gens
        self._diff_gen = diff_gen
        self._homotopy_fn = homotopy_fn
        self.h_minus1 = h_minus1
        self._aug = augmentation or (lambda z: 1)
        self.name = name
        self._diff_cache = {}
        self._h_cache = {}

    def gens(self, n):
        if n < 0:
            return []
        return self._gens(n)

    def rank(self, n):
        g = self.gens(n)
        if g is None:
            raise ValueError(f"{self.name}: basis not enumerable in degree {n}")
        return len(g)

    def diff_of_gen(self, n, z) -> Combination:
        key = (n, z)
        hit = self._diff_cache.get(key)
        if hit is None:
            hit = self._diff_cache[key] = self._diff_gen(n, z)
        return hit

    def d(self, comb: Combination) -> Combination:
        n = comb.degree
        out = Combination(n - 1)
        for (g, z), c in comb:
            out = out + act(self.group, g, self.diff_of_gen(n, z)).scale(c)
        return out

    def h_of_pair(self, n, g, z) -> Combination:
        key = (n, g, z)
        hit = self._h_cache.get(key)
        if hit is None:
            hit = self._h_cache[key] = self._homotopy_fn(n, g, z)
        return hit

    def h(self, comb: Combination) -> Combination:
        n = comb.degree
        out = Combination(n + 1)
        for (g, z), c in comb:
            out = out + self.h_of_pair(n, g, z).scale(c)
        return out

    def eps(self, comb: Combination) -> int:
        """Augmentation F_0 -> Z (G acts trivially on the target)."""
        return sum(c * self._aug(z) for (g, z), c in comb)

    def eps_gen(self, z) -> int:
        return self._aug(z)

    def __repr__(self):
        return f"FreeResolution({self.name or self.group!r})"


def cyclic_resolution(m: int) -> FreeResolution:
    """The small m-periodic resolution of the cyclic group C_m.

    Rank one in every degree; d alternates multiplication by t - 1 and by
    the norm element N = 1 + t + ... + t^(m-1).  The homotopy:
    h_{-1}(1) = e_0; h_{2j}(t^k e) = (1 + ... + t^(k-1)) e;
    h_{2j+1}(t^k e) = e exactly when k = m - 1.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    group = cyclic(m)

    def gens(n):
        return [0]

    def diff_gen(n, z):
        if n == 0:
            return Combination(-1)
        if n % 2 == 1:
            return Combination(n - 1, {(1, 0): 1, (0, 0): -1})
        return Combination(n - 1, {(k, 0): 1 for k in range(m)})

    def homotopy_fn(n, g, z):
        if n % 2 == 0:
            return Combination(n + 1, {(j, 0): 1 for j in range(g)})
        return Combination(n + 1, {(0, 0): 1} if g == m - 1 else {})

    return FreeResolution(group, gens, diff_gen, homotopy_fn,
                          h_minus1=Combination(0, {(0, 0): 1}),
                          name=f"small(C{m})")


def bar_resolution(group: Group) -> FreeResolution:
    """The normalized Bar resolution: B_n free on words of non-unit elements.

    d[g1|...|gn] = g1 [g2|...|gn]
                   + sum_i (-1)^i [g1|...|g_i g_{i+1}|...|gn]
                   + (-1)^n [g1|...|g_{n-1}],
    words containing the unit being zero.  The homotopy prepends the group
    coordinate: h(g0 [g1|...]) = [g0|g1|...], zero when g0 = 1.
    """
    one = group.identity

    def gens(n):
        if not group.is_finite:
            return None
        if n == 0:
            return [()]
        non_unit = [g for g in group.elements() if g != one]
        return [w for w in itertools.product(non_unit, repeat=n)]

    def word_term(n, w, coeff=1):
        if any(g == one for g in w):
            return Combination(n)
        return Combination(n, {(one, w): coeff})

    def diff_gen(n, w):
        if n == 0:
            return Combination(-1)
        out = Combination(n - 1, {(w[0], w[1:]): 1}
                          if not any(g == one for g in w[1:]) else {})
        for i in range(1, n):
            merged = w[:i - 1] + (group.mul(w[i - 1], w[i]),) + w[i + 1:]
            out = out + word_term(n - 1, merged, (-1) ** i)
        out = out + word_term(n - 1, w[:-1], (-1) ** n)
        return out

    def homotopy_fn(n, g, w):
        if g == one:
            return Combination(n + 1)
        return Combination(n + 1, {(one, (g,) + w): 1})

    return FreeResolution(group, gens, diff_gen, homotopy_fn,
                          h_minus1=Combination(0, {(one, ()): 1}),
                          name=f"bar({group.spec()})")


class ZGMap:
    """A ZG-linear graded map between resolutions, stored on canonical gens."""

    __slots__ = ("source", "target", "degree", "_fn", "name", "_cache")

    def __init__(self, source: FreeResolution, target: FreeResolution,
                 degree, fn, name=""):
        self.source = source
        self.target = target
        self.degree = degree
        self._fn = fn
        self.name = name
        self._cache = {}

    def of_gen(self, n, z) -> Combination:
        key = (n, z)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._fn(n, z)
        return hit

    def __call__(self, comb: Combination) -> Combination:
        n = comb.degree
        out = Combination(n + self.degree)
        grp = self.source.group
        for (g, z), c in comb:
            out = out + act(grp, g, self.of_gen(n, z)).scale(c)
        return out


def comparison(f_from: FreeResolution, f_to: FreeResolution) -> dict:
    """Comparison morphisms between two resolutions of the same group.

    Returns {"f": ZGMap from->to, "g": ZGMap to->from, "k": ZGMap on to
    (dk + kd = id - f g), "kp": ZGMap on from (id - g f)}, built by the
    usual recursion through the contracting homotopies.
    """
    if f_from.group != f_to.group and f_from.group is not f_to.group:
        raise ValueError("resolutions must be over the same group")

    def lift(source, target):
        the_map = {}

        def fn(n, z):
            if n == 0:
                return target.h_minus1.scale(source.eps_gen(z))
            dz = source.diff_of_gen(n, z)
            return target.h(the_map["m"](dz))

        the_map["m"] = ZGMap(source, target, 0, fn)
        return the_map["m"]

    f = lift(f_from, f_to)
    g = lift(f_to, f_from)

    def homotopy_for(res, first, second):
        """k with dk + kd = id - second o first on res (= first's source)."""
        the_map = {}

        def fn(n, z):
            unit = Combination(n, {(res.group.identity, z): 1})
            eta = unit - second(first(unit))
            if n == 0:
                return res.h(eta)
            return res.h(eta - the_map["m"](res.d(unit)))

        the_map["m"] = ZGMap(res, res, 1, fn)
        return the_map["m"]

    k = homotopy_for(f_to, g, f)      # on the target: id - f g
    kp = homotopy_for(f_from, f, g)   # on the source: id - g f
    return {"f": f, "g": g, "k": k, "kp": kp}


def tensor_with_Z(res: FreeResolution, name="") -> ChainComplex:
    """Z (x)_ZG F: kill the group coordinate, keep generator labels."""
    def basis(n):
        return res.gens(n)

    def diff(n, z):
        out = {}
        for (g, z2), c in res.diff_of_gen(n, z):
            out[z2] = out.get(z2, 0) + c
        return Combination(n - 1, out)

    return ChainComplex(basis, diff, name=name or f"Z(x){res.name}")


def tensor_map_with_Z(m: ZGMap, source_cx: ChainComplex,
                      target_cx: ChainComplex) -> Morphism:
    def fn(n, z):
        out = {}
        for (g, z2), c in m.of_gen(n, z):
            out[z2] = out.get(z2, 0) + c
        return Combination(n + m.degree, out)

    return Morphism(source_cx, target_cx, m.degree, fn, name=m.name)


def kg1_equivalence_complexes(group: Group, res: FreeResolution):
    """The homotopy equivalence C(K(G,1)) <-> Z (x) F after Z (x)_ZG."""
    bar = bar_resolution(group)
    cmp_maps = comparison(bar, res)
    left = tensor_with_Z(bar, name=f"C(K({group.spec()},1))")
    right = tensor_with_Z(res)
    f = tensor_map_with_Z(cmp_maps["f"], left, right)
    g = tensor_map_with_Z(cmp_maps["g"], right, left)
    k = tensor_map_with_Z(cmp_maps["k"], right, right)
    kp = tensor_map_with_Z(cmp_maps["kp"], left, left)
    return HomotopyEquivalence(f, g, k, kp), bar


def kg1_effective_homology(group: Group, res: FreeResolution) -> Equivalence:
    """Strong equivalence C(K(G,1)) <== Cyl ==> Z (x) F (Algorithm: K(G,1))."""
    he, _ = kg1_equivalence_complexes(group, res)
    return mapping_cylinder_equivalence(he)


class NormedResolution:
    """A resolution with a compatible norm structure.

    norm: a Norm on the group; gen_norm(n, z): the generator norms.  The
    norm of a combination is the max over terms of |g| + |z| (zero for the
    empty combination).
    """

    def __init__(self, res: FreeResolution, norm: Norm, gen_norm):
        self.res = res
        self.norm = norm
        self.gen_norm = gen_norm

    def combination_norm(self, comb: Combination) -> int:
        n = comb.degree
        best = 0
        for (g, z), _ in comb:
            best = max(best, self.norm(g) + self.gen_norm(n, z))
        return best


def cyclic_normed_resolution(m: int) -> NormedResolution:
    from .groups import standard_norm
    res = cyclic_resolution(m)
    return NormedResolution(res, standard_norm(res.group), lambda n, z: n)


def bar_normed_resolution(group: Group) -> NormedResolution:
    from .groups import standard_norm
    res = bar_resolution(group)
    norm = standard_norm(group)
    return NormedResolution(res, norm, lambda n, w: sum(norm(g) for g in w))

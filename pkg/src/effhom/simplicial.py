"""Simplicial sets with concrete simplex values.

Every space here represents simplices by plain hashable data (group
elements, tuples, pairs), so faces and degeneracies are ordinary functions
and degenerate simplices need no special wrapper.  The AbstractSimplex
utility expresses a possibly-degenerate simplex as a strictly decreasing
degeneracy word applied to a nondegenerate core, which is occasionally the
convenient normal form (and is exercised by the identity tests).

Conventions for the nerve K(G,1): n-simplices are n-tuples,

    d_0 drops g1,  d_i merges g_i g_(i+1) (0 < i < n),  d_n drops g_n,
    s_i inserts the unit at position i (s_0 in front),

so nondegenerate = no unit entries.  K(G,0) is the discrete space G.
"""

from __future__ import annotations

import itertools

from .chain import ChainComplex
from .combinations import Combination


class NotAbelian(Exception):
    pass


class SimplicialSet:
    """Interface: face(i, n, x), degeneracy(i, n, x), nondeg(n)."""

    name = "space"

    def face(self, i, n, x):
        raise NotImplementedError

    def degeneracy(self, i, n, x):
        raise NotImplementedError

    def nondeg(self, n):
        """Nondegenerate n-simplices (list), or None if not enumerable."""
        raise NotImplementedError

    def is_degenerate(self, n, x):
        if n == 0:
            return False
        return any(self.degeneracy(i, n - 1, self.face(i, n, x)) == x
                   for i in range(n))

    def simplices(self, n):
        """All n-simplices, degenerate included (enumerable spaces only)."""
        seen = []
        found = set()
        for p in range(n + 1):
            base = self.nondeg(p)
            if base is None:
                return None
            for x in base:
                for subset in itertools.combinations(range(n), n - p):
                    y = x
                    dim = p
                    for i in sorted(subset):
                        y = self.degeneracy(i, dim, y)
                        dim += 1
                    if y not in found:
                        found.add(y)
                        seen.append(y)
        return seen


class AbstractSimplex:
    """A degeneracy word (strictly decreasing indices) over a core simplex."""

    __slots__ = ("degens", "core")

    def __init__(self, degens, core):
        self.degens = tuple(degens)
        if any(a <= b for a, b in zip(self.degens, self.degens[1:])):
            raise ValueError("degeneracy indices must be strictly decreasing")
        self.core = core

    def dimension(self, core_dim):
        return core_dim + len(self.degens)

    def __eq__(self, other):
        return (isinstance(other, AbstractSimplex)
                and self.degens == other.degens and self.core == other.core)

    def __hash__(self):
        return hash((self.degens, self.core))

    def __repr__(self):
        return f"AbstractSimplex({list(self.degens)}, {self.core!r})"


def push_degeneracy(i, degens):
    """Canonical form of s_i composed before the word s_(degens).

    Uses s_i s_j = s_(j+1) s_i for i <= j to push s_i right until the
    word is strictly decreasing again.
    """
    out = []
    rest = list(degens)
    while rest and i <= rest[0]:
        out.append(rest.pop(0) + 1)
    out.append(i)
    out.extend(rest)
    return tuple(out)


def express(space: SimplicialSet, n, x) -> AbstractSimplex:
    """Write x as a degeneracy word over a nondegenerate core."""
    peeled = []  # outermost first: x = s_(i1) s_(i2) ... (core)
    dim = n
    while dim > 0:
        for i in range(dim):
            y = space.face(i, dim, x)
            if space.degeneracy(i, dim - 1, y) == x:
                peeled.append(i)
                x = y
                dim -= 1
                break
        else:
            break
    degens = ()
    for i in reversed(peeled):
        degens = push_degeneracy(i, degens)
    return AbstractSimplex(degens, x)


def apply_monotone(space: SimplicialSet, n, x, theta):
    """x . theta for a monotone map theta: [m] -> [n] given as a value tuple."""
    m = len(theta) - 1
    image = sorted(set(theta))
    y = x
    dim = n
    for v in sorted((v for v in range(n + 1) if v not in set(theta)),
                    reverse=True):
        y = space.face(v, dim, y)
        dim -= 1
    # now y corresponds to the injection; apply the surjective part
    rank_of = {v: k for k, v in enumerate(image)}
    sigma = [rank_of[v] for v in theta]
    for i in sorted(j for j in range(m) if sigma[j] == sigma[j + 1]):
        y = space.degeneracy(i, dim, y)
        dim += 1
    return y


class KG0(SimplicialSet):
    """The discrete simplicial set on the elements of G."""

    def __init__(self, group):
        self.group = group
        self.name = f"K({group.spec()},0)"

    def face(self, i, n, x):
        return x

    def degeneracy(self, i, n, x):
        return x

    def nondeg(self, n):
        if n == 0:
            return None if not self.group.is_finite else list(self.group.elements())
        return []

    def is_degenerate(self, n, x):
        return n > 0

    # simplicial group structure (constant in n)
    def mul(self, n, x, y):
        return self.group.mul(x, y)

    def zero(self, n):
        return self.group.identity

    def neg(self, n, x):
        return self.group.inv(x)


class KG1(SimplicialSet):
    """The nerve of G: n-simplices are n-tuples of elements."""

    def __init__(self, group):
        self.group = group
        self.name = f"K({group.spec()},1)"

    def face(self, i, n, x):
        if i == 0:
            return x[1:]
        if i == n:
            return x[:-1]
        return x[:i - 1] + (self.group.mul(x[i - 1], x[i]),) + x[i + 1:]

    def degeneracy(self, i, n, x):
        return x[:i] + (self.group.identity,) + x[i:]

    def nondeg(self, n):
        if n == 0:
            return [()]
        if not self.group.is_finite:
            return None
        one = self.group.identity
        pool = [g for g in self.group.elements() if g != one]
        return [w for w in itertools.product(pool, repeat=n)]

    def is_degenerate(self, n, x):
        one = self.group.identity
        return any(g == one for g in x)

    def mul(self, n, x, y):
        self._check_abelian()
        return tuple(self.group.mul(a, b) for a, b in zip(x, y))

    def zero(self, n):
        return (self.group.identity,) * n

    def neg(self, n, x):
        self._check_abelian()
        return tuple(self.group.inv(a) for a in x)

    def _check_abelian(self):
        elems = getattr(self, "_abelian_checked", None)
        if elems is None:
            grp = self.group
            if grp.is_finite:
                sample = list(grp.elements())[:12]
                for a in sample:
                    for b in sample:
                        if grp.mul(a, b) != grp.mul(b, a):
                            raise NotAbelian(f"{grp!r} is not abelian")
            self._abelian_checked = True


class CircleSpace(SimplicialSet):
    """The minimal simplicial circle: Delta[1] with its endpoints identified.

    An n-simplex is a monotone 0/1 tuple of length n+1; the two constant
    tuples are the same basepoint, normalized to all zeros.  One
    nondegenerate simplex in dimensions 0 and 1, none above.
    """

    name = "S1"

    @staticmethod
    def _norm(t):
        return (0,) * len(t) if all(v == 1 for v in t) else t

    def face(self, i, n, x):
        return self._norm(x[:i] + x[i + 1:])

    def degeneracy(self, i, n, x):
        return self._norm(x[:i + 1] + x[i:])

    def nondeg(self, n):
        if n == 0:
            return [(0,)]
        if n == 1:
            return [(0, 1)]
        return []

    def is_degenerate(self, n, x):
        if n == 0:
            return False
        if n == 1:
            return self._norm(x) != (0, 1)
        return True  # every 0/1 tuple of length >= 3 repeats a value


class ProductSpace(SimplicialSet):
    """Cartesian product, componentwise structure."""

    def __init__(self, left: SimplicialSet, right: SimplicialSet):
        self.left = left
        self.right = right
        self.name = f"{left.name}x{right.name}"

    def face(self, i, n, x):
        return (self.left.face(i, n, x[0]), self.right.face(i, n, x[1]))

    def degeneracy(self, i, n, x):
        return (self.left.degeneracy(i, n, x[0]),
                self.right.degeneracy(i, n, x[1]))

    def nondeg(self, n):
        out = []
        for p in range(n + 1):
            for q in range(n - p, n + 1):
                lx = self.left.nondeg(p)
                ry = self.right.nondeg(q)
                if lx is None or ry is None:
                    return None
                if p == n and q == n:
                    out.extend((a, b) for a in lx for b in ry)
                    continue
                # degeneracy patterns: disjoint subsets I (|I| = n-p) and
                # J (|J| = n-q) of {0..n-1}
                for i_set in itertools.combinations(range(n), n - p):
                    rest = [j for j in range(n) if j not in i_set]
                    for j_set in itertools.combinations(rest, n - q):
                        for a in lx:
                            xa, da = a, p
                            for i in sorted(i_set):
                                xa = self.left.degeneracy(i, da, xa)
                                da += 1
                            for b in ry:
                                yb, db = b, q
                                for j in sorted(j_set):
                                    yb = self.right.degeneracy(j, db, yb)
                                    db += 1
                                out.append((xa, yb))
        return out

    def is_degenerate(self, n, x):
        if n == 0:
            return False
        return any(self.degeneracy(i, n - 1, self.face(i, n, x)) == x
                   for i in range(n))


class WBar(SimplicialSet):
    """Classifying space of a simplicial abelian group K.

    n-simplices are tuples (x_(n-1), ..., x_0) with x_j in K_j.
    """

    def __init__(self, k: SimplicialSet):
        if not hasattr(k, "mul"):
            raise NotAbelian("wbar needs a simplicial abelian group")
        self.k = k
        self.name = f"wbar({k.name})"

    def face(self, i, n, x):
        # x = (x_(n-1), ..., x_0); index j in the tuple holds x_(n-1-j)
        if i == 0:
            return x[1:]
        out = []
        for t in range(i - 1):
            out.append(self.k.face(i - 1 - t, n - 1 - t, x[t]))
        merged = self.k.face(0, n - i, x[i - 1])
        if i < n:
            merged = self.k.mul(n - i - 1, merged, x[i])
            out.append(merged)
            out.extend(x[i + 1:])
        return tuple(out)

    def degeneracy(self, i, n, x):
        if i == 0:
            return (self.k.zero(n),) + x
        out = []
        for t in range(i):
            out.append(self.k.degeneracy(i - 1 - t, n - 1 - t, x[t]))
        out.append(self.k.zero(n - i))
        out.extend(x[i:])
        return tuple(out)

    def nondeg(self, n):
        sims = [self.k.simplices(j) for j in range(n)]
        if any(s is None for s in sims):
            return None
        out = []
        for combo_ in itertools.product(*[sims[n - 1 - t] for t in range(n)]):
            if not self.is_degenerate(n, tuple(combo_)):
                out.append(tuple(combo_))
        return out

    def mul(self, n, x, y):
        return tuple(self.k.mul(n - 1 - t, a, b)
                     for t, (a, b) in enumerate(zip(x, y)))

    def zero(self, n):
        return tuple(self.k.zero(n - 1 - t) for t in range(n))

    def neg(self, n, x):
        return tuple(self.k.neg(n - 1 - t, a) for t, a in enumerate(x))


def wbar(k: SimplicialSet) -> WBar:
    return WBar(k)


def normalized_chains(space: SimplicialSet, name="") -> ChainComplex:
    def basis(n):
        return space.nondeg(n)

    def diff(n, x):
        out = Combination(n - 1)
        if n == 0:
            return out
        for i in range(n + 1):
            y = space.face(i, n, x)
            if not space.is_degenerate(n - 1, y):
                out = out + Combination.unit(n - 1, y).scale((-1) ** i)
        return out

    return ChainComplex(basis, diff, name=name or f"C({space.name})")


def unnormalized_chains(space: SimplicialSet, name="") -> ChainComplex:
    """All simplices as basis; only for small oracle checks."""
    def basis(n):
        return space.simplices(n)

    def diff(n, x):
        out = Combination(n - 1)
        if n == 0:
            return out
        for i in range(n + 1):
            out = out + Combination.unit(n - 1, space.face(i, n, x)).scale((-1) ** i)
        return out

    return ChainComplex(basis, diff, name=name or f"Cu({space.name})")


def check_simplicial_identities(space: SimplicialSet, n, x):
    """All five families of identities on one n-simplex; returns failures."""
    bad = []
    for j in range(n + 1):
        for i in range(j):
            if i < j:  # d_i d_j = d_(j-1) d_i
                a = space.face(i, n - 1, space.face(j, n, x))
                b = space.face(j - 1, n - 1, space.face(i, n, x))
                if a != b:
                    bad.append(("dd", i, j))
    for j in range(n):
        for i in range(j + 1):  # s_i s_j = s_(j+1) s_i for i <= j
            a = space.degeneracy(i, n + 1, space.degeneracy(j, n, x))
            b = space.degeneracy(j + 1, n + 1, space.degeneracy(i, n, x))
            if a != b:
                bad.append(("ss", i, j))
    for j in range(n):
        for i in range(n + 2):
            sx = space.degeneracy(j, n, x)
            got = space.face(i, n + 1, sx)
            if i < j:
                want = space.degeneracy(j - 1, n - 1, space.face(i, n, x))
            elif i in (j, j + 1):
                want = x
            else:
                want = space.degeneracy(j, n - 1, space.face(i - 1, n, x))
            if got != want:
                bad.append(("ds", i, j))
    return bad

"""Chain complexes and degree-homogeneous morphisms.

A complex is non-negatively graded with a degree -1 differential given
functionally on generators and extended linearly.  The per-degree basis
oracle is either a function returning a finite generator list ("effective")
or None for degrees where only membership is meaningful ("locally
effective"); Bar-type complexes over infinite groups are the latter.

Morphisms are functions generator -> Combination with a memoization cache,
because Bar-type complexes have huge bases and deep composites must reuse
work.  Values are logically immutable; concurrent readers under the GIL see
deterministic results regardless of interleaving.
"""

from __future__ import annotations

from .combinations import Combination
from .exact_linear import SparseIntMatrix, homology_of_pair


class NotEffective(Exception):
    """A finite basis was required in a degree where none is enumerable."""


class ComplexMismatch(Exception):
    """Composed objects do not share the required chain complex."""


class ChainComplex:
    """A graded free Z-module with a square-zero degree -1 differential.

    basis: callable degree -> list of generators, or None for locally
    effective degrees.  diff: callable (degree, generator) -> Combination
    of degree-1 lower.  Degrees below 0 are empty.
    """

    def __init__(self, basis, diff, name=""):
        self._basis = basis
        self.name = name
        self.differential = Morphism(self, self, -1, diff, name=f"d[{name}]")

    def basis(self, n):
        if n < 0:
            return []
        b = self._basis(n)
        if b is None:
            raise NotEffective(f"{self.name or 'complex'} has no basis oracle in degree {n}")
        return b

    def is_effective(self, n):
        return n < 0 or self._basis(n) is not None

    def d(self, x):
        """Differential applied to a Combination or (degree, generator)."""
        if isinstance(x, Combination):
            return self.differential(x)
        n, g = x
        return self.differential.of_gen(n, g)

    def matrix(self, n):
        """Matrix of d_n : C_n -> C_{n-1}; rows indexed by C_{n-1} basis."""
        src = self.basis(n)
        tgt = self.basis(n - 1)
        index = {g: i for i, g in enumerate(tgt)}
        entries = {}
        for j, g in enumerate(src):
            for h, c in self.differential.of_gen(n, g):
                entries[(index[h], j)] = c
        return SparseIntMatrix(len(tgt), len(src), entries)

    def homology(self, n):
        return homology_of_pair(self.matrix(n), self.matrix(n + 1))

    def rank(self, n):
        return len(self.basis(n))

    def __repr__(self):
        return f"ChainComplex({self.name or hex(id(self))})"


class Morphism:
    """A degree-homogeneous linear map between chain complexes.

    The action is stored on generators and extended linearly; evaluations
    are memoized per (degree, generator).
    """

    __slots__ = ("source", "target", "degree", "_fn", "name", "_cache")

    def __init__(self, source, target, degree, fn, name=""):
        self.source = source
        self.target = target
        self.degree = degree
        self._fn = fn
        self.name = name
        self._cache = {}

    def of_gen(self, n, g):
        key = (n, g)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._fn(n, g)
            if hit.degree != n + self.degree:
                raise ValueError(
                    f"morphism {self.name or ''} not degree-homogeneous at deg {n}: "
                    f"got {hit.degree}, expected {n + self.degree}")
            self._cache[key] = hit
        return hit

    def __call__(self, x: Combination) -> Combination:
        n = x.degree
        return x.map_generators(n + self.degree, lambda g: self.of_gen(n, g))

    # ----- morphism algebra -----

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other."""
        if other.target is not self.source:
            raise ComplexMismatch(
                f"cannot compose {self.name or 'morphism'} after {other.name or 'morphism'}")
        return Morphism(
            other.source, self.target, self.degree + other.degree,
            lambda n, g: self(other.of_gen(n, g)),
            name=f"({self.name}.{other.name})")

    def __add__(self, other: "Morphism") -> "Morphism":
        if self.source is not other.source or self.target is not other.target:
            raise ComplexMismatch("sum of morphisms with different ends")
        if self.degree != other.degree:
            raise ValueError("sum of morphisms with different degrees")
        return Morphism(
            self.source, self.target, self.degree,
            lambda n, g: self.of_gen(n, g) + other.of_gen(n, g),
            name=f"({self.name}+{other.name})")

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + other.scale(-1)

    def scale(self, k) -> "Morphism":
        return Morphism(self.source, self.target, self.degree,
                        lambda n, g: self.of_gen(n, g).scale(k),
                        name=f"({k}*{self.name})")

    def __repr__(self):
        return f"Morphism({self.name or hex(id(self))}, deg {self.degree})"


def identity_morphism(c: ChainComplex) -> Morphism:
    return Morphism(c, c, 0, lambda n, g: Combination.unit(n, g), name="id")


def zero_morphism(source, target, degree) -> Morphism:
    return Morphism(source, target, degree,
                    lambda n, g: Combination.zero(n + degree), name="0")


def complex_from_ranks(ranks, diffs, name=""):
    """An effective complex from rank list and dense differential columns.

    ranks[n] is the rank in degree n; generators are the ints 0..rank-1.
    diffs[n] maps generator index -> list of (target_index, coeff).
    """
    def basis(n):
        return list(range(ranks[n])) if 0 <= n < len(ranks) else []

    def diff(n, g):
        table = diffs.get(n, {}) if isinstance(diffs, dict) else (
            diffs[n] if 0 <= n < len(diffs) else {})
        return Combination(n - 1, [(t, c) for t, c in table.get(g, [])])

    return ChainComplex(basis, diff, name=name)


def direct_sum_complex(parts, name=""):
    """Direct sum, generators tagged (i, g) by summand index."""
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

    return ChainComplex(basis, diff, name=name or "(+)".join(p.name for p in parts))


def restrict_positive(c: ChainComplex, name=""):
    """The sub-complex of degrees >= 1.

    Only valid when d_1 = 0 (checked lazily on use), so that degrees >= 1
    form a genuine subcomplex; used to strip basepoint degree-0 parts.
    """
    def basis(n):
        return c._basis(n) if n >= 1 else []

    def diff(n, g):
        if n <= 1:
            return Combination(n - 1)
        return c.differential.of_gen(n, g)

    return ChainComplex(basis, diff, name=name or f"{c.name}|>=1")

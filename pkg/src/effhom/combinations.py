"""Formal Z-linear combinations of degree-tagged basis generators.

Generators are opaque hashable labels (ints, strings, nested tuples of
those, frozen pairs...).  A structural sort key gives a total order across
mixed label shapes so that bases and serializations are deterministic.
"""

from __future__ import annotations


def generator_key(g):
    """Total-order key usable across heterogeneous generator labels."""
    if isinstance(g, bool):
        return (0, "bool", g)
    if isinstance(g, int):
        return (0, "int", g)
    if isinstance(g, str):
        return (1, g)
    if isinstance(g, tuple):
        return (2, len(g), tuple(generator_key(x) for x in g))
    if isinstance(g, frozenset):
        return (3, tuple(sorted(generator_key(x) for x in g)))
    return (4, type(g).__name__, repr(g))


class Combination:
    """A finite Z-linear sum of generators in a single degree.

    Zero coefficients are never stored.  Combinations are immutable values;
    arithmetic returns new objects.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        if terms is None:
            self.terms = {}
        elif isinstance(terms, dict):
            self.terms = {g: c for g, c in terms.items() if c}
        else:
            acc = {}
            for g, c in terms:
                if c:
                    acc[g] = acc.get(g, 0) + c
            self.terms = {g: c for g, c in acc.items() if c}

    @classmethod
    def zero(cls, degree):
        return cls(degree)

    @classmethod
    def unit(cls, degree, g, coeff=1):
        return cls(degree, {g: coeff} if coeff else {})

    def is_zero(self):
        return not self.terms

    def __iter__(self):
        return iter(self.terms.items())

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda t: generator_key(t[0]))

    def __len__(self):
        return len(self.terms)

    def coefficient(self, g):
        return self.terms.get(g, 0)

    def __add__(self, other):
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        terms = dict(self.terms)
        for g, c in other.terms.items():
            n = terms.get(g, 0) + c
            if n:
                terms[g] = n
            else:
                del terms[g]
        out = Combination.__new__(Combination)
        out.degree = self.degree
        out.terms = terms
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k):
        if k == 0:
            return Combination(self.degree)
        if k == 1:
            return self
        out = Combination.__new__(Combination)
        out.degree = self.degree
        out.terms = {g: k * c for g, c in self.terms.items()}
        return out

    def map_generators(self, degree, fn):
        """Sum fn(g) scaled by coefficients; fn returns a Combination."""
        acc = {}
        for g, c in self.terms.items():
            for g2, c2 in fn(g).terms.items():
                n = acc.get(g2, 0) + c * c2
                if n:
                    acc[g2] = n
                else:
                    del acc[g2]
        out = Combination.__new__(Combination)
        out.degree = degree
        out.terms = acc
        return out

    def __eq__(self, other):
        return (isinstance(other, Combination)
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"0[deg {self.degree}]"
        bits = []
        for g, c in self.items_sorted():
            bits.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{g!r}")
        return f"({' '.join(bits)})[deg {self.degree}]"


def combo(degree, *pairs):
    """Shorthand: combo(n, (g1, c1), (g2, c2), ...)."""
    return Combination(degree, list(pairs))

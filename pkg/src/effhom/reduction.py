"""Reductions and strong equivalences between chain complexes.

A reduction (f, g, h): C => D exhibits C as D plus an acyclic complement:

    fg = id_D,   dh + hd = id_C - gf,   fh = 0,   hg = 0,   hh = 0.

verify_reduction checks the five identities generator by generator and
returns failures as data, not exceptions.

force_reduction upgrades weaker data to a true reduction: given chain maps
with fg = id exactly and ANY homotopy h0 with dh0 + h0d = id - gf, let
pi = id - gf (an idempotent chain map), psi = pi h0 pi and h = psi d psi.
Then f psi = 0 and psi g = 0 kill the side conditions, dh + hd = pi is a
direct computation, and hh = 0 follows because P = dh and Q = hd are
orthogonal idempotents with P + Q = pi and h = Q h P.
"""

from __future__ import annotations

from .chain import ChainComplex, ComplexMismatch, Morphism, identity_morphism, zero_morphism
from .combinations import Combination
from .exact_linear import homology_of_pair


class Reduction:
    """The triple (f, g, h) with f: top -> bottom, g: bottom -> top, h on top."""

    __slots__ = ("f", "g", "h", "is_identity")

    def __init__(self, f: Morphism, g: Morphism, h: Morphism, is_identity=False):
        if f.degree != 0 or g.degree != 0 or h.degree != 1:
            raise ValueError("reduction components have degrees (0, 0, +1)")
        if g.target is not f.source or g.source is not f.target:
            raise ComplexMismatch("f and g must connect the same two complexes")
        if h.source is not f.source or h.target is not f.source:
            raise ComplexMismatch("h must be an operator on the top complex")
        self.f = f
        self.g = g
        self.h = h
        self.is_identity = is_identity

    @property
    def top(self) -> ChainComplex:
        return self.f.source

    @property
    def bottom(self) -> ChainComplex:
        return self.f.target

    def __repr__(self):
        return f"Reduction({self.top.name} => {self.bottom.name})"


def identity_reduction(c: ChainComplex) -> Reduction:
    ident = identity_morphism(c)
    return Reduction(ident, ident, zero_morphism(c, c, 1), is_identity=True)


class ReductionReport:
    """Outcome of checking the five reduction identities on sampled generators."""

    def __init__(self):
        self.checked = 0
        self.failures = []  # (identity, degree, generator)

    def record(self, ok, identity, degree, gen):
        self.checked += 1
        if not ok:
            self.failures.append((identity, degree, gen))

    @property
    def ok(self):
        return not self.failures

    def __repr__(self):
        state = "ok" if self.ok else f"{len(self.failures)} failures"
        return f"ReductionReport({self.checked} checks, {state})"


def _gens(complex_, n, override):
    if override is not None:
        return override(n) if callable(override) else override.get(n, [])
    return complex_.basis(n)


def verify_reduction(r: Reduction, degrees, top_gens=None, bottom_gens=None) -> ReductionReport:
    """Check all five identities per generator over the given degrees.

    For locally effective complexes pass top_gens/bottom_gens (a callable
    degree -> generators, or a dict).  Failures are returned in the report.
    """
    report = ReductionReport()
    top, bottom = r.top, r.bottom
    d_top, d_bot = top.differential, bottom.differential
    for n in degrees:
        for g in _gens(bottom, n, bottom_gens):
            one = Combination.unit(n, g)
            report.record(r.f(r.g(one)) == one, "fg = id", n, g)
            report.record(r.h(r.g(one)).is_zero(), "hg = 0", n, g)
        for g in _gens(top, n, top_gens):
            one = Combination.unit(n, g)
            lhs = d_top(r.h(one)) + r.h(d_top(one))
            rhs = one - r.g(r.f(one))
            report.record(lhs == rhs, "dh + hd = id - gf", n, g)
            report.record(r.f(r.h(one)).is_zero(), "fh = 0", n, g)
            report.record(r.h(r.h(one)).is_zero(), "hh = 0", n, g)
            # the two complexes must actually be complexes on touched elements
            report.record(d_top(d_top(one)).is_zero(), "dd = 0 (top)", n, g)
            report.record(d_bot(d_bot(r.f(one))).is_zero(), "dd = 0 (bottom)", n, g)
    return report


def compose_reductions(r1: Reduction, r2: Reduction) -> Reduction:
    """(C => D) then (D => E) gives C => E.

    f = f2 f1, g = g1 g2, h = h1 + g1 h2 f1.
    """
    if r1.bottom is not r2.top:
        raise ComplexMismatch(
            f"bottom of {r1!r} is not the top of {r2!r}")
    if r1.is_identity:
        return r2
    if r2.is_identity:
        return r1
    f = r2.f.compose(r1.f)
    g = r1.g.compose(r2.g)
    h = r1.h + r1.g.compose(r2.h).compose(r1.f)
    return Reduction(f, g, h)


def force_reduction(f: Morphism, g: Morphism, h0: Morphism) -> Reduction:
    """Repair (f, g, h0) with fg = id and dh0 + h0d = id - gf into a reduction."""
    top = f.source
    ident = identity_morphism(top)
    pi = ident - g.compose(f)
    psi = pi.compose(h0).compose(pi)
    h = psi.compose(top.differential).compose(psi)
    return Reduction(f, g, h)


class HomotopyEquivalence:
    """Chain homotopy equivalence data (f, g, k, k').

    f: C -> F and g: F -> C with homotopies k on F (dk + kd = id_F - fg)
    and kp on C (dkp + kpd = id_C - gf).
    """

    __slots__ = ("f", "g", "k", "kp")

    def __init__(self, f, g, k, kp):
        if k.source is not f.target or kp.source is not f.source:
            raise ComplexMismatch("homotopies must live on the two ends")
        self.f = f
        self.g = g
        self.k = k
        self.kp = kp

    @property
    def left(self):
        return self.f.source

    @property
    def right(self):
        return self.f.target


class Equivalence:
    """A span of reductions with a common top: C <== B ==> E."""

    __slots__ = ("left", "right")

    def __init__(self, left: Reduction, right: Reduction):
        if left.top is not right.top:
            raise ComplexMismatch("the two reductions must share their top complex")
        self.left = left
        self.right = right

    @property
    def top(self):
        return self.left.top

    @property
    def left_bottom(self):
        return self.left.bottom

    @property
    def right_bottom(self):
        return self.right.bottom

    def __repr__(self):
        return (f"Equivalence({self.left_bottom.name} <= "
                f"{self.top.name} => {self.right_bottom.name})")


def equivalence_from_reduction(r: Reduction) -> Equivalence:
    """View C => E as the span C <== C ==> E with an identity left leg."""
    return Equivalence(identity_reduction(r.top), r)


def homology_via_equivalence(e: Equivalence, n: int):
    """H_n of the right bottom complex (which must be effective near n)."""
    c = e.right_bottom
    return homology_of_pair(c.matrix(n), c.matrix(n + 1))

"""Groups: cyclic, infinite cyclic, direct products, central extensions, norms.

Element representations are plain hashable values: an exponent int for
cyclic groups (any int for the integers), a pair tuple for products, and an
(a, g) pair for central extensions.  This keeps elements usable directly as
generator labels and in serialized files.
"""

from __future__ import annotations

import itertools


class UnsupportedGroup(Exception):
    pass


class InvalidCocycle(Exception):
    pass


class Group:
    """Interface: identity, mul, inv, order (None if infinite), elements()."""

    identity = None
    order = None  # None means infinite

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def elements(self):
        """Iterate all elements (finite groups only)."""
        raise UnsupportedGroup(f"{self!r} is not finite")

    @property
    def is_finite(self):
        return self.order is not None

    def power(self, a, k):
        out = self.identity
        x = a if k >= 0 else self.inv(a)
        for _ in range(abs(k)):
            out = self.mul(out, x)
        return out

    def spec(self):
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.spec()})"


class CyclicGroup(Group):
    """C_m for m >= 1, or the integers when m is None.

    Elements are exponents: 0 <= k < m for finite order, any int for Z.
    """

    def __init__(self, order=None):
        if order is not None and order < 1:
            raise ValueError("cyclic group order must be >= 1")
        self.order = order
        self.identity = 0

    def mul(self, a, b):
        return (a + b) % self.order if self.order else a + b

    def inv(self, a):
        return (-a) % self.order if self.order else -a

    def elements(self):
        if self.order is None:
            raise UnsupportedGroup("the integers are not enumerable")
        return range(self.order)

    @property
    def generator(self):
        return 1

    def spec(self):
        return "z" if self.order is None else f"cyclic:{self.order}"

    def __eq__(self, other):
        return isinstance(other, CyclicGroup) and self.order == other.order

    def __hash__(self):
        return hash(("cyclic", self.order))


def cyclic(m):
    return CyclicGroup(m)


def integers():
    return CyclicGroup(None)


class ProductGroup(Group):
    """Direct product; elements are pairs (a, b)."""

    def __init__(self, left: Group, right: Group):
        self.left = left
        self.right = right
        if left.is_finite and right.is_finite:
            self.order = left.order * right.order
        else:
            self.order = None
        self.identity = (left.identity, right.identity)

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def inv(self, a):
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    def elements(self):
        return ((a, b) for a in self.left.elements() for b in self.right.elements())

    def spec(self):
        return f"{self.left.spec()} x {self.right.spec()}"

    def __eq__(self, other):
        return (isinstance(other, ProductGroup)
                and self.left == other.left and self.right == other.right)

    def __hash__(self):
        return hash(("product", self.left, self.right))


def product(g, g2):
    return ProductGroup(g, g2)


class Cocycle2:
    """A normalized 2-cocycle f: G x G -> A with A abelian.

    Normalization: f(g, 1) = 0 = f(1, g).  Cocycle identity:
    f(gh, k) = f(h, k) - f(g, h) + f(g, hk).
    """

    def __init__(self, group: Group, coeffs: Group, fn, name="cocycle"):
        self.group = group
        self.coeffs = coeffs
        self.fn = fn
        self.name = name

    def __call__(self, g, h):
        return self.fn(g, h)


def trivial_cocycle(group: Group, coeffs: Group) -> Cocycle2:
    return Cocycle2(group, coeffs, lambda g, h: coeffs.identity, name="trivial")


def validate_cocycle2(f: Cocycle2, sample_budget=2000) -> bool:
    """Exhaustive for small finite G, sampled otherwise."""
    g_grp, a_grp = f.group, f.coeffs
    one = g_grp.identity
    zero = a_grp.identity
    if g_grp.is_finite:
        elems = list(g_grp.elements())
    else:
        raise UnsupportedGroup("cocycle validation needs a finite group")
    for g in elems:
        if f(g, one) != zero or f(one, g) != zero:
            return False
    triples = itertools.product(elems, repeat=3)
    if len(elems) ** 3 > sample_budget:
        import random
        rng = random.Random(11)
        triples = ((rng.choice(elems), rng.choice(elems), rng.choice(elems))
                   for _ in range(sample_budget))
    for g, h, k in triples:
        lhs = f(g_grp.mul(g, h), k)
        rhs = a_grp.mul(a_grp.mul(f(h, k), a_grp.inv(f(g, h))), f(g, g_grp.mul(h, k)))
        if lhs != rhs:
            return False
    return True


class CentralExtensionGroup(Group):
    """A x_f G: pairs (a, g) with (a1,g1)(a2,g2) = (a1+a2+f(g1,g2), g1g2)."""

    def __init__(self, sub: Group, quot: Group, cocycle: Cocycle2):
        if not validate_cocycle2(cocycle):
            raise InvalidCocycle("the 2-cocycle conditions fail")
        self.sub = sub
        self.quot = quot
        self.cocycle = cocycle
        self.order = (sub.order * quot.order
                      if sub.is_finite and quot.is_finite else None)
        self.identity = (sub.identity, quot.identity)

    def mul(self, x, y):
        a1, g1 = x
        a2, g2 = y
        a = self.sub.mul(self.sub.mul(a1, a2), self.cocycle(g1, g2))
        return (a, self.quot.mul(g1, g2))

    def inv(self, x):
        a, g = x
        ginv = self.quot.inv(g)
        corr = self.cocycle(g, ginv)
        return (self.sub.inv(self.sub.mul(a, corr)), ginv)

    def elements(self):
        return ((a, g) for a in self.sub.elements() for g in self.quot.elements())

    def spec(self):
        return f"ext({self.sub.spec()}, {self.quot.spec()}; {self.cocycle.name})"


def central_extension(sub, quot, cocycle) -> CentralExtensionGroup:
    return CentralExtensionGroup(sub, quot, cocycle)


def leary_cocycle(p, n) -> Cocycle2:
    """The extension cocycle for <x,y,z | x^p=y^p=z^(p^(n-2))=1, [x,y]=z^(p^(n-3))>.

    G = C_p x C_p with elements x^p1 y^q1 written (p1, q1); A = C_(p^(n-2));
    f((p1,q1),(p2,q2)) = q1 p2 (p-1) p^(n-3) mod p^(n-2).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    a_grp = cyclic(p ** (n - 2))
    g_grp = product(cyclic(p), cyclic(p))

    def fn(u, v):
        q1 = u[1]
        p2 = v[0]
        return (q1 * p2 * (p - 1) * p ** (n - 3)) % (p ** (n - 2))

    return Cocycle2(g_grp, a_grp, fn, name=f"leary:{p}:{n}")


def leary_group(p, n) -> CentralExtensionGroup:
    f = leary_cocycle(p, n)
    return central_extension(f.coeffs, f.group, f)


class Norm:
    """A size function on a group: zero only at 1, subadditive."""

    def __init__(self, group: Group, fn):
        self.group = group
        self.fn = fn

    def __call__(self, g):
        v = self.fn(g)
        if v < 0:
            raise ValueError("norms are non-negative")
        return v


def standard_norm(group: Group) -> Norm:
    """Representative-exponent norm for cyclic groups, |k| on Z, sums on products."""
    if isinstance(group, CyclicGroup):
        if group.order is None:
            return Norm(group, abs)
        m = group.order
        return Norm(group, lambda k: k % m)
    if isinstance(group, ProductGroup):
        nl = standard_norm(group.left)
        nr = standard_norm(group.right)
        return Norm(group, lambda x: nl(x[0]) + nr(x[1]))
    raise UnsupportedGroup(f"no standard norm for {group!r}")


# ----- the group spec grammar: cyclic:m, z, products with x, leary:p:n -----

def parse_group_spec(text: str) -> Group:
    parts = [p.strip() for p in text.strip().split(" x ")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"bad group spec: {text!r}")
    groups = [_parse_atom(p) for p in parts]
    out = groups[0]
    for g in groups[1:]:
        out = product(out, g)
    return out


def _parse_atom(text: str) -> Group:
    if text == "z":
        return integers()
    if text.startswith("cyclic:"):
        try:
            m = int(text.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad cyclic order in {text!r}")
        if m < 1:
            raise ValueError(f"cyclic order must be >= 1 in {text!r}")
        return cyclic(m)
    if text.startswith("leary:"):
        bits = text.split(":")
        if len(bits) != 3:
            raise ValueError(f"expected leary:p:n, got {text!r}")
        return leary_group(int(bits[1]), int(bits[2]))
    raise ValueError(f"unknown group spec {text!r}")

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from effhom.groups import (
    CentralExtensionGroup,
    Cocycle2,
    InvalidCocycle,
    UnsupportedGroup,
    central_extension,
    cyclic,
    integers,
    leary_cocycle,
    leary_group,
    parse_group_spec,
    product,
    standard_norm,
    trivial_cocycle,
    validate_cocycle2,
)


def check_group_axioms(g, max_triples=10000):
    elems = list(g.elements())
    for a in elems:
        assert g.mul(a, g.identity) == a
        assert g.mul(g.identity, a) == a
        assert g.mul(a, g.inv(a)) == g.identity
    triples = list(itertools.product(elems, repeat=3))
    if len(triples) > max_triples:
        rng = random.Random(5)
        triples = [tuple(rng.choice(elems) for _ in range(3))
                   for _ in range(max_triples)]
    for a, b, c in triples:
        assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
    closure = {g.mul(a, b) for a in elems for b in elems}
    assert closure <= set(elems)


def test_cyclic_basics():
    c5 = cyclic(5)
    assert c5.order == 5
    assert len(list(c5.elements())) == 5
    assert c5.power(1, 5) == 0  # t^5 = 1
    check_group_axioms(c5)


def test_product_of_cyclics():
    g = product(cyclic(3), cyclic(3))
    assert g.order == 9
    elems = list(g.elements())
    assert len(elems) == 9
    for x in elems:  # exponent 3
        assert g.power(x, 3) == g.identity
    check_group_axioms(g)


def test_integers_norm():
    z = integers()
    n = standard_norm(z)
    assert n(0) == 0 and n(-4) == 4
    for a in range(-6, 7):
        assert (n(a) == 0) == (a == 0)
        for b in range(-6, 7):
            assert n(z.mul(a, b)) <= n(a) + n(b)


def test_standard_norm_cyclic():
    n = standard_norm(cyclic(5))
    assert n(2) == 2 and n(0) == 0
    n7 = standard_norm(cyclic(7))
    for a in range(7):
        for b in range(7):
            assert n7((a + b) % 7) <= n7(a) + n7(b)


def test_norm_product_sums():
    g = product(cyclic(3), cyclic(3))
    n = standard_norm(g)
    assert n((1, 2)) == 3


def test_norm_unsupported():
    with pytest.raises(UnsupportedGroup):
        standard_norm(leary_group(3, 4))


def test_trivial_cocycle_valid():
    g = cyclic(3)
    assert validate_cocycle2(trivial_cocycle(g, cyclic(4)))


def test_constant_nonzero_cocycle_invalid():
    g, a = cyclic(3), cyclic(4)
    bad = Cocycle2(g, a, lambda x, y: 1)
    assert not validate_cocycle2(bad)


def test_leary_cocycle_valid():
    assert validate_cocycle2(leary_cocycle(3, 4))


def test_central_extension_trivial_is_product():
    a, g = cyclic(2), cyclic(3)
    e = central_extension(a, g, trivial_cocycle(g, a))
    assert e.order == 6
    check_group_axioms(e)
    direct = product(a, g)
    for x in e.elements():
        for y in e.elements():
            assert e.mul(x, y) == direct.mul(x, y)


def test_central_extension_rejects_bad_cocycle():
    g, a = cyclic(3), cyclic(4)
    with pytest.raises(InvalidCocycle):
        central_extension(a, g, Cocycle2(g, a, lambda x, y: 2))


def test_leary_group_order_and_commutator():
    e = leary_group(3, 4)
    assert e.order == 81
    assert len(list(e.elements())) == 81
    check_group_axioms(e)
    # x = (0,(1,0)), y = (0,(0,1)); [x, y] = z^(p^(n-3)) = 3 in C_9
    x = (0, (1, 0))
    y = (0, (0, 1))
    comm = e.mul(e.mul(x, y), e.mul(e.inv(x), e.inv(y)))
    assert comm == (3, (0, 0))


def test_extension_is_central():
    e = leary_group(3, 4)
    elems = list(e.elements())
    for a in range(9):
        za = (a, (0, 0))
        for x in elems[:20]:
            assert e.mul(za, x) == e.mul(x, za)


def test_extension_with_cocycle_is_c4():
    # C2 by C2 with f(t,t) = u gives the cyclic group of order 4
    c2 = cyclic(2)
    f = Cocycle2(c2, cyclic(2), lambda g, h: 1 if (g == 1 and h == 1) else 0)
    e = central_extension(cyclic(2), c2, f)
    assert e.order == 4
    x = (0, 1)
    orders = set()
    for el in e.elements():
        k, acc = 1, el
        while acc != e.identity:
            acc = e.mul(acc, el)
            k += 1
        orders.add(k)
    assert 4 in orders  # an element of order 4: the group is C4


@given(st.integers(2, 12))
@settings(max_examples=10, deadline=None)
def test_cyclic_axioms_random_order(m):
    check_group_axioms(cyclic(m))


def test_parse_group_spec():
    assert parse_group_spec("cyclic:5") == cyclic(5)
    assert parse_group_spec("z").order is None
    g = parse_group_spec("cyclic:3 x cyclic:3")
    assert g.order == 9
    e = parse_group_spec("leary:3:4")
    assert isinstance(e, CentralExtensionGroup) and e.order == 81
    with pytest.raises(ValueError):
        parse_group_spec("cyclic:0")
    with pytest.raises(ValueError):
        parse_group_spec("dihedral:3")

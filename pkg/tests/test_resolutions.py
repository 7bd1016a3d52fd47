import itertools

from effhom.combinations import Combination
from effhom.exact_linear import AbelianGroup
from effhom.groups import cyclic, product
from effhom.reduction import homology_via_equivalence, verify_reduction
from effhom.resolutions import (
    bar_resolution,
    comparison,
    cyclic_resolution,
    kg1_effective_homology,
    kg1_equivalence_complexes,
    tensor_with_Z,
)


def unit(n, g, z):
    return Combination(n, {(g, z): 1})


def check_resolution_identities(res, max_degree):
    """d^2 = 0, eps d1 = 0, and all contracting homotopy identities."""
    grp = res.group
    elems = list(grp.elements())
    assert res.eps(res.h_minus1) == 1
    for n in range(1, max_degree + 1):
        for z in res.gens(n):
            ddz = res.d(res.d(unit(n, grp.identity, z)))
            if n >= 2:
                assert ddz.is_zero(), (n, z)
            else:
                assert res.eps(res.d(unit(1, grp.identity, z))) == 0, z
    # h_{-1} eps + d_1 h_0 = id on F_0
    for g in elems:
        for z in res.gens(0):
            x = unit(0, g, z)
            lhs = res.h_minus1.scale(res.eps(x)) + res.d(res.h(x))
            assert lhs == x, (g, z)
    # h_{n-1} d_n + d_{n+1} h_n = id for n >= 1
    for n in range(1, max_degree + 1):
        for g in elems:
            for z in res.gens(n):
                x = unit(n, g, z)
                lhs = res.h(res.d(x)) + res.d(res.h(x))
                assert lhs == x, (n, g, z)


def test_cyclic_resolution_identities_m3():
    check_resolution_identities(cyclic_resolution(3), 6)


def test_cyclic_resolution_identities_m5():
    check_resolution_identities(cyclic_resolution(5), 5)


def test_cyclic_resolution_h0_formula():
    res = cyclic_resolution(5)
    # h_0(t^2 e0) = (1 + t) e1
    assert res.h(unit(0, 2, 0)) == Combination(1, {(0, 0): 1, (1, 0): 1})


def test_cyclic_tensor_with_Z_matrices():
    cx = tensor_with_Z(cyclic_resolution(5))
    # d1 = 0 (t - 1 collapses), d2 = *5 (the norm element)
    assert cx.matrix(1).is_zero()
    assert cx.matrix(2).to_rows() == [[5]]
    assert cx.matrix(3).is_zero()
    assert cx.homology(0) == AbelianGroup(1)
    assert cx.homology(1) == AbelianGroup(0, [5])
    assert cx.homology(2) == AbelianGroup(0)


def test_bar_resolution_ranks_normalized():
    bar = bar_resolution(cyclic(3))
    assert [bar.rank(n) for n in range(4)] == [1, 2, 4, 8]


def test_bar_resolution_identities_c2():
    check_resolution_identities(bar_resolution(cyclic(2)), 4)


def test_bar_resolution_identities_c3():
    check_resolution_identities(bar_resolution(cyclic(3)), 3)


def test_bar_tensor_d1_vanishes():
    cx = tensor_with_Z(bar_resolution(cyclic(2)))
    assert cx.matrix(1).is_zero()


def test_self_comparison_has_null_homotopy_defect():
    res = cyclic_resolution(3)
    maps = comparison(res, res)
    grp = res.group
    # d k + k d = id - f g on the target resolution
    for n in range(0, 5):
        for g in grp.elements():
            x = unit(n, g, 0)
            lhs = res.d(maps["k"](x)) + maps["k"](res.d(x)) if n > 0 else \
                res.d(maps["k"](x))
            rhs = x - maps["f"](maps["g"](x))
            assert lhs == rhs, (n, g)


def test_comparison_bar_to_small_c2():
    grp = cyclic(2)
    bar = bar_resolution(grp)
    small = cyclic_resolution(2)
    maps = comparison(bar, small)
    # degree-0 lift sends the empty word to e0
    assert maps["f"].of_gen(0, ()) == Combination(0, {(0, 0): 1})
    # chain map property f d = d f through degree 4
    for n in range(1, 5):
        for w in bar.gens(n):
            x = unit(n, grp.identity, w)
            assert maps["f"](bar.d(x)) == small.d(maps["f"](x)), (n, w)
    # homotopy identities on both sides through degree 4
    for n in range(0, 5):
        for g in grp.elements():
            for z in small.gens(n):
                x = unit(n, g, z)
                lhs = small.d(maps["k"](x)) + (maps["k"](small.d(x)) if n > 0
                                               else Combination(n))
                assert lhs == x - maps["f"](maps["g"](x)), ("k", n, g, z)
            for w in bar.gens(n):
                x = unit(n, g, w)
                lhs = bar.d(maps["kp"](x)) + (maps["kp"](bar.d(x)) if n > 0
                                              else Combination(n))
                assert lhs == x - maps["g"](maps["f"](x)), ("kp", n, g, w)


def test_comparison_both_sides_h1_is_z2():
    grp = cyclic(2)
    bar_cx = tensor_with_Z(bar_resolution(grp))
    small_cx = tensor_with_Z(cyclic_resolution(2))
    assert bar_cx.homology(1) == AbelianGroup(0, [2])
    assert small_cx.homology(1) == AbelianGroup(0, [2])


def test_kg1_c5_homology_through_4():
    eq = kg1_effective_homology(cyclic(5), cyclic_resolution(5))
    expected = [AbelianGroup(1), AbelianGroup(0, [5]), AbelianGroup(0),
                AbelianGroup(0, [5]), AbelianGroup(0)]
    for n, want in enumerate(expected):
        assert homology_via_equivalence(eq, n) == want, n


def test_kg1_c3_closed_form_through_7():
    eq = kg1_effective_homology(cyclic(3), cyclic_resolution(3))
    for n in range(8):
        want = AbelianGroup(1) if n == 0 else (
            AbelianGroup(0, [3]) if n % 2 else AbelianGroup(0))
        assert homology_via_equivalence(eq, n) == want, n


def test_kg1_equivalence_verifies_c2():
    eq = kg1_effective_homology(cyclic(2), cyclic_resolution(2))
    assert verify_reduction(eq.left, range(0, 6)).ok
    assert verify_reduction(eq.right, range(0, 6)).ok


def test_kg1_equivalence_verifies_c3_low_degrees():
    eq = kg1_effective_homology(cyclic(3), cyclic_resolution(3))
    assert verify_reduction(eq.left, range(0, 4)).ok
    assert verify_reduction(eq.right, range(0, 4)).ok


def test_kg1_left_complex_is_bar_chains():
    grp = cyclic(2)
    eq = kg1_effective_homology(grp, cyclic_resolution(2))
    # left bottom = normalized chains of K(C2,1): one nondegenerate simplex
    # per degree (words in the single non-unit element)
    assert [eq.left_bottom.rank(n) for n in range(5)] == [1, 1, 1, 1, 1]


def test_kg1_matches_direct_bar_homology_c2():
    grp = cyclic(2)
    eq = kg1_effective_homology(grp, cyclic_resolution(2))
    direct = tensor_with_Z(bar_resolution(grp))
    for n in range(4):
        assert homology_via_equivalence(eq, n) == direct.homology(n), n


def test_homology_independent_of_resolution():
    for m in (2, 3, 4):
        grp = cyclic(m)
        via_bar = tensor_with_Z(bar_resolution(grp))
        via_small = tensor_with_Z(cyclic_resolution(m))
        for n in range(4):
            assert via_bar.homology(n) == via_small.homology(n), (m, n)

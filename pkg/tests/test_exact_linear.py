import itertools
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from effhom.exact_linear import (
    AbelianGroup,
    CompositionNotZero,
    SparseIntMatrix,
    homology_of_pair,
    smith_normal_form,
)


def snf_diag(rows):
    _, rank, factors = smith_normal_form(SparseIntMatrix.from_rows(rows))
    return rank, factors


def test_identity_2x2():
    rank, factors = snf_diag([[1, 0], [0, 1]])
    assert rank == 2
    assert factors == [1, 1]


def test_zero_3x4():
    m = SparseIntMatrix(3, 4)
    s, rank, factors = smith_normal_form(m)
    assert rank == 0
    assert factors == []
    assert s.is_zero()


def test_upper_triangular():
    # oracle: gcd of entries is 2, |det| = 12, so diag must be (2, 6)
    rank, factors = snf_diag([[2, 4], [0, 6]])
    assert rank == 2
    assert factors == [2, 6]


def test_empty_shapes_are_legal():
    for rows, cols in [(0, 5), (5, 0), (0, 0)]:
        s, rank, factors = smith_normal_form(SparseIntMatrix(rows, cols))
        assert rank == 0 and factors == []


def test_single_negative_entry():
    rank, factors = snf_diag([[-7]])
    assert rank == 1 and factors == [7]


def minors_gcd(rows, k):
    """gcd of all k x k minors, brute force."""
    n = len(rows)
    m = len(rows[0]) if rows else 0
    g = 0
    for ri in itertools.combinations(range(n), k):
        for ci in itertools.combinations(range(m), k):
            sub = [[rows[i][j] for j in ci] for i in ri]
            g = gcd(g, det(sub))
    return g


def det(sq):
    n = len(sq)
    if n == 0:
        return 1
    if n == 1:
        return sq[0][0]
    total = 0
    for j in range(n):
        if sq[0][j]:
            minor = [row[:j] + row[j + 1:] for row in sq[1:]]
            total += (-1) ** j * sq[0][j] * det(minor)
    return total


@given(st.integers(1, 5), st.integers(1, 5), st.data())
@settings(max_examples=60, deadline=None)
def test_snf_matches_minor_gcds(n, m, data):
    rows = [[data.draw(st.integers(-9, 9)) for _ in range(m)] for _ in range(n)]
    _, rank, factors = smith_normal_form(SparseIntMatrix.from_rows(rows))
    # product of first k invariant factors = gcd of k x k minors (up to sign)
    prod = 1
    for k in range(1, rank + 1):
        prod *= factors[k - 1]
        assert prod == abs(minors_gcd(rows, k))
    if rank < min(n, m):
        assert minors_gcd(rows, rank + 1) == 0


@given(st.integers(1, 40), st.integers(1, 40), st.data())
@settings(max_examples=30, deadline=None)
def test_snf_divisibility_chain_random_sparse(n, m, data):
    k = data.draw(st.integers(0, min(n * m, 60)))
    entries = {}
    for _ in range(k):
        i = data.draw(st.integers(0, n - 1))
        j = data.draw(st.integers(0, m - 1))
        entries[(i, j)] = data.draw(st.integers(-9, 9))
    _, rank, factors = smith_normal_form(SparseIntMatrix(n, m, entries))
    assert all(factors[i + 1] % factors[i] == 0 for i in range(len(factors) - 1))
    assert all(d > 0 for d in factors)
    assert rank == len(factors)


def test_homology_cyclic_odd_degree():
    # Z <--0-- Z <--5-- Z gives Z/5 in the middle
    d_n = SparseIntMatrix(1, 1)           # zero map out
    d_next = SparseIntMatrix.from_rows([[5]])
    assert homology_of_pair(d_n, d_next) == AbelianGroup(0, [5])


def test_homology_of_a_point():
    d_n = SparseIntMatrix(0, 1)
    d_next = SparseIntMatrix(1, 0)
    assert homology_of_pair(d_n, d_next) == AbelianGroup(1)


def test_homology_cyclic_even_degree():
    # multiplication by m out, zero in: kernel is 0
    d_n = SparseIntMatrix.from_rows([[5]])
    d_next = SparseIntMatrix(1, 0)
    assert homology_of_pair(d_n, d_next) == AbelianGroup(0)


def test_homology_scaled_identity_block():
    # d_n = 0, d_next = m*I yields torsion (m, ..., m)
    for m, n in [(2, 3), (5, 4)]:
        d_n = SparseIntMatrix(1, n)
        d_next = SparseIntMatrix(n, n, {(i, i): m for i in range(n)})
        assert homology_of_pair(d_n, d_next) == AbelianGroup(0, [m] * n)


def test_homology_rejects_nonzero_composition():
    d_n = SparseIntMatrix.from_rows([[1]])
    d_next = SparseIntMatrix.from_rows([[1]])
    with pytest.raises(CompositionNotZero):
        homology_of_pair(d_n, d_next)


def test_abelian_group_canonical_form():
    assert AbelianGroup(0, [6, 2]) == AbelianGroup(0, [2, 6])
    assert AbelianGroup(1, [1, 1, 3]) == AbelianGroup(1, [3])
    assert AbelianGroup.from_invariant_factors(0, [2, 3]) == AbelianGroup(0, [6])
    assert AbelianGroup.from_invariant_factors(0, [4, 6]) == AbelianGroup(0, [2, 12])
    assert str(AbelianGroup(0)) == "0"
    assert str(AbelianGroup(1, [5])) == "Z + Z/5"


def test_matrix_multiplication():
    a = SparseIntMatrix.from_rows([[1, 2], [3, 4]])
    b = SparseIntMatrix.from_rows([[0, 1], [1, 0]])
    assert a.mul(b).to_rows() == [[2, 1], [4, 3]]

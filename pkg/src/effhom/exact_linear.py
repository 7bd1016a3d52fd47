"""Exact integer linear algebra: sparse matrices, Smith normal form, homology.

All arithmetic is over Z with Python's arbitrary-precision integers, so there
is no overflow at any size.  Matrices are sparse maps (row, col) -> nonzero
entry.  The Smith normal form uses gcd-driven row/column reduction pivoting on
the smallest-magnitude nonzero entry, which keeps coefficient growth tame at
desk scale; correctness over speed.

The homology of a pair of consecutive differentials d_n, d_{n+1} with
d_n . d_{n+1} = 0 is read off the classical way: the kernel of d_n is a pure
subgroup (hence a direct summand) of the ambient free group, so

    H_n = ker d_n / im d_{n+1}
        = Z^(nullity(d_n) - rank(d_{n+1}))  (+)  Z/s_1 (+) ... (+) Z/s_r

where s_1 | ... | s_r are the invariant factors of d_{n+1} that exceed 1.
"""

from __future__ import annotations


class CompositionNotZero(Exception):
    """d_n . d_{n+1} != 0: the input is not part of a chain complex."""


class SparseIntMatrix:
    """An immutable-by-convention sparse integer matrix.

    Entries are held in a dict (row, col) -> value with no stored zeros.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items() if hasattr(entries, "items") else entries:
                if not (0 <= i < rows and 0 <= j < cols):
                    raise ValueError(f"entry ({i},{j}) out of bounds for {rows}x{cols}")
                if v:
                    self.entries[(i, j)] = int(v)

    @classmethod
    def from_rows(cls, rows_list):
        """Build from a dense list of rows (lists of ints)."""
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows_list):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = int(v)
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return (isinstance(other, SparseIntMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"SparseIntMatrix({self.rows}x{self.cols}, {len(self.entries)} entries)"

    def to_rows(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self):
        return SparseIntMatrix(self.cols, self.rows,
                               {(j, i): v for (i, j), v in self.entries.items()})

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        by_row = {}
        for (i, j), v in self.entries.items():
            by_row.setdefault(i, []).append((j, v))
        other_by_row = {}
        for (j, k), w in other.entries.items():
            other_by_row.setdefault(j, []).append((k, w))
        acc = {}
        for i, terms in by_row.items():
            for j, v in terms:
                for k, w in other_by_row.get(j, ()):
                    key = (i, k)
                    acc[key] = acc.get(key, 0) + v * w
        return SparseIntMatrix(self.rows, other.cols,
                               {k: v for k, v in acc.items() if v})

    def is_zero(self):
        return not self.entries


class _WorkMatrix:
    """Mutable row/column indexed view used during SNF reduction."""

    def __init__(self, m: SparseIntMatrix):
        self.rows = m.rows
        self.cols = m.cols
        self.row = {}   # i -> {j: v}
        self.col = {}   # j -> set of i with nonzero (i, j)
        for (i, j), v in m.entries.items():
            self.row.setdefault(i, {})[j] = v
            self.col.setdefault(j, set()).add(i)

    def get(self, i, j):
        return self.row.get(i, {}).get(j, 0)

    def set(self, i, j, v):
        if v:
            self.row.setdefault(i, {})[j] = v
            self.col.setdefault(j, set()).add(i)
        else:
            r = self.row.get(i)
            if r and j in r:
                del r[j]
                self.col[j].discard(i)

    def add_row(self, dst, src, k):
        """row[dst] += k * row[src]"""
        if k == 0:
            return
        for j, v in list(self.row.get(src, {}).items()):
            self.set(dst, j, self.get(dst, j) + k * v)

    def add_col(self, dst, src, k):
        if k == 0:
            return
        for i in list(self.col.get(src, set())):
            self.set(i, dst, self.get(i, dst) + k * self.get(i, src))

    def swap_rows(self, a, b):
        if a == b:
            return
        ra = self.row.get(a, {}).copy()
        rb = self.row.get(b, {}).copy()
        for j in set(ra) | set(rb):
            self.set(a, j, rb.get(j, 0))
            self.set(b, j, ra.get(j, 0))

    def swap_cols(self, a, b):
        if a == b:
            return
        ca = {i: self.get(i, a) for i in self.col.get(a, set()).copy()}
        cb = {i: self.get(i, b) for i in self.col.get(b, set()).copy()}
        for i in set(ca) | set(cb):
            self.set(i, a, cb.get(i, 0))
            self.set(i, b, ca.get(i, 0))

    def min_pivot(self, t):
        """Smallest-magnitude nonzero entry in the submatrix at (t, t)."""
        best = None
        best_pos = None
        for i, r in self.row.items():
            if i < t:
                continue
            for j, v in r.items():
                if j < t:
                    continue
                a = abs(v)
                if best is None or a < best:
                    best, best_pos = a, (i, j)
                    if best == 1:
                        return best_pos
        return best_pos


def smith_normal_form(m: SparseIntMatrix):
    """Diagonalize m by unimodular row/column operations.

    Returns (s, rank, invariant_factors) where s is diagonal with
    d_1 | d_2 | ... | d_rank positive on the diagonal.  Transforms are not
    returned; the diagonal is exactly the invariant factors of m.
    """
    w = _WorkMatrix(m)
    t = 0
    limit = min(m.rows, m.cols)
    while t < limit:
        pos = w.min_pivot(t)
        if pos is None:
            break
        w.swap_rows(t, pos[0])
        w.swap_cols(t, pos[1])
        while True:
            pivot = w.get(t, t)
            # clear column t
            dirty = False
            for i in list(w.col.get(t, set())):
                if i <= t:
                    continue
                q = w.get(i, t) // pivot
                w.add_row(i, t, -q)
                if w.get(i, t):
                    dirty = True
            # clear row t
            for j in list(w.row.get(t, {})):
                if j <= t:
                    continue
                q = w.get(t, j) // pivot
                w.add_col(j, t, -q)
                if w.get(t, j):
                    dirty = True
            if not dirty:
                break
            # residues are smaller than |pivot|; re-pivot and repeat
            pos = w.min_pivot(t)
            w.swap_rows(t, pos[0])
            w.swap_cols(t, pos[1])
        # enforce divisibility of the remaining submatrix by the pivot
        pivot = w.get(t, t)
        offender = None
        for i, r in w.row.items():
            if i <= t:
                continue
            for j, v in r.items():
                if j > t and v % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            w.add_row(t, offender, 1)
            continue  # redo elimination at the same t
        t += 1
    rank = t
    diag = []
    for k in range(rank):
        d = w.get(k, k)
        diag.append(abs(d))
    s = SparseIntMatrix(m.rows, m.cols, {(k, k): diag[k] for k in range(rank)})
    return s, rank, diag


def rank(m: SparseIntMatrix) -> int:
    return smith_normal_form(m)[1]


class AbelianGroup:
    """A finitely generated abelian group in canonical form.

    free_rank copies of Z plus cyclic factors Z/d_1 (+) ... (+) Z/d_k with the
    divisibility chain d_1 | d_2 | ... | d_k, each d_i >= 2.  Unit factors are
    dropped and negative inputs normalized; the canonical form is unique.
    """

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank=0, torsion=()):
        if free_rank < 0:
            raise ValueError("free rank must be non-negative")
        tors = sorted(abs(int(d)) for d in torsion if abs(int(d)) != 1)
        if any(d == 0 for d in tors):
            raise ValueError("torsion coefficients must be nonzero")
        for a, b in zip(tors, tors[1:]):
            if b % a:
                raise ValueError(f"torsion {tors} is not a divisibility chain")
        self.free_rank = free_rank
        self.torsion = tuple(tors)

    @classmethod
    def from_invariant_factors(cls, free_rank, factors):
        """Normalize arbitrary cyclic orders into divisibility-chain form."""
        factors = [abs(int(d)) for d in factors if abs(int(d)) > 1]
        # repeatedly replace pairs (a, b) by (gcd, lcm) until chained
        from math import gcd
        changed = True
        while changed:
            changed = False
            factors.sort()
            for i in range(len(factors)):
                for j in range(i + 1, len(factors)):
                    a, b = factors[i], factors[j]
                    if b % a:
                        g = gcd(a, b)
                        factors[i], factors[j] = g, a * b // g
                        changed = True
            factors = [d for d in factors if d > 1]
        return cls(free_rank, factors)

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __eq__(self, other):
        return (isinstance(other, AbelianGroup)
                and self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        return f"AbelianGroup(free_rank={self.free_rank}, torsion={list(self.torsion)})"

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology_of_pair(d_n: SparseIntMatrix, d_next: SparseIntMatrix) -> AbelianGroup:
    """ker d_n / im d_{n+1} as a canonical AbelianGroup.

    d_n is the outgoing differential on the chain group C (a map out of C,
    cols(d_n) = dim C) and d_next the incoming one (rows(d_next) = dim C).
    Raises CompositionNotZero when d_n . d_next != 0.
    """
    if d_n.cols != d_next.rows:
        raise ValueError(
            f"shape mismatch: d_n is {d_n.rows}x{d_n.cols}, "
            f"d_next is {d_next.rows}x{d_next.cols}")
    if not d_n.mul(d_next).is_zero():
        raise CompositionNotZero("d_n . d_next != 0")
    nullity = d_n.cols - rank(d_n)
    _, r_next, factors = smith_normal_form(d_next)
    return AbelianGroup(nullity - r_next, [d for d in factors if d > 1])

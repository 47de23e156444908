"""Exact dense linear algebra over any exact field scalar.

Matrices are immutable tuples of tuples.  Entries may be Fractions or
FieldElements (anything with field arithmetic dunders); no floating
point is used anywhere.  Reduced row-echelon forms have leading
coefficient 1, and kernel bases are re-echelonized, so every output is
canonical and byte-reproducible.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _intgcd


class Matrix:
    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries, cols=None):
        self.entries = tuple(tuple(r) for r in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else (cols or 0)
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n, one=Fraction(1)):
        zero = one * 0
        return cls(tuple(tuple(one if i == j else zero for j in range(n))
                         for i in range(n)))

    @classmethod
    def zeros(cls, rows, cols, zero=Fraction(0)):
        return cls(tuple((zero,) * cols for _ in range(rows)), cols=cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix({self.entries!r})"

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Matrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Matrix(tuple(tuple(a - b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self):
        return Matrix(tuple(tuple(-a for a in r) for r in self.entries))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols = list(zip(*other.entries))
            return Matrix(tuple(
                tuple(_dot(r, c) for c in cols) for r in self.entries))
        return Matrix(tuple(tuple(a * other for a in r) for r in self.entries))

    def __rmul__(self, scalar):
        return Matrix(tuple(tuple(scalar * a for a in r) for r in self.entries))

    def transpose(self):
        return Matrix(tuple(zip(*self.entries))) if self.rows else Matrix(())

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(r[j] for r in self.entries)

    def vec(self, v):
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(_dot(r, v) for r in self.entries)

    def is_symmetric(self):
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.rows) for j in range(self.rows))

    def is_antisymmetric(self):
        return all(self.entries[i][j] == -self.entries[j][i]
                   for i in range(self.rows) for j in range(self.rows))

    def trace(self):
        t = self.entries[0][0]
        for i in range(1, self.rows):
            t = t + self.entries[i][i]
        return t


def _dot(r, c):
    acc = None
    for a, b in zip(r, c):
        acc = a * b if acc is None else acc + a * b
    return acc


def rref(m):
    """Reduced row-echelon form; returns (Matrix, pivot column tuple)."""
    a = [list(r) for r in m.entries]
    rows, cols = m.rows, m.cols
    pivots = []
    pr = 0
    for pc in range(cols):
        pivot = None
        for r in range(pr, rows):
            if a[r][pc] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        a[pr], a[pivot] = a[pivot], a[pr]
        lead = a[pr][pc]
        a[pr] = [x / lead for x in a[pr]]
        for r in range(rows):
            if r != pr and a[r][pc] != 0:
                f = a[r][pc]
                a[r] = [x - f * y for x, y in zip(a[r], a[pr])]
        pivots.append(pc)
        pr += 1
        if pr == rows:
            break
    return Matrix(a), tuple(pivots)


def row_space(m):
    """Canonical basis (nonzero RREF rows) of the row space."""
    r, pivots = rref(m)
    return Matrix(r.entries[:len(pivots)]) if pivots else Matrix.zeros(0, m.cols)


def rank(m):
    return len(rref(m)[1])


def kernel(m):
    """Canonical (RREF) basis of the right kernel, one row per basis
    vector; zero-row Matrix when the kernel is trivial."""
    r, pivots = rref(m)
    zero = m.entries[0][0] * 0 if m.rows else Fraction(0)
    one = zero + 1
    free = [c for c in range(m.cols) if c not in pivots]
    if not free:
        return Matrix.zeros(0, m.cols, zero)
    basis = []
    for c in free:
        v = [zero] * m.cols
        v[c] = one
        for i, pc in enumerate(pivots):
            v[pc] = -r.entries[i][c]
        basis.append(v)
    return row_space(Matrix(basis))


def _one_like(m):
    for r in m.entries:
        for a in r:
            if a != 0:
                return a / a
    return Fraction(1)


@dataclass(frozen=True)
class SolveResult:
    """Full solution set of A x = b: one particular solution (None when
    the system is inconsistent) and the canonical kernel basis."""

    particular: tuple | None
    kernel: Matrix

    @property
    def consistent(self):
        return self.particular is not None


def solve_linear(a, b):
    """Exact solution set of a x = b by elimination on [a | b]."""
    if len(b) != a.rows:
        raise ValueError("shape mismatch")
    aug = Matrix(tuple(tuple(r) + (bv,) for r, bv in zip(a.entries, b)))
    r, pivots = rref(aug)
    ker = kernel(a)
    if a.cols in pivots:
        return SolveResult(None, ker)
    zero = a.entries[0][0] * 0 if a.rows else Fraction(0)
    x = [zero] * a.cols
    for i, pc in enumerate(pivots):
        x[pc] = r.entries[i][a.cols]
    return SolveResult(tuple(x), ker)


def det(m):
    """Determinant by ordinary elimination over the scalar field."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in m.entries]
    zero = a[0][0] * 0
    result = None
    sign = 1
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if a[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            return zero
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        lead = a[c][c]
        result = lead if result is None else result * lead
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = a[r][c] / lead
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return result if sign > 0 else -result


def inverse(m):
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    one = _one_like(m)
    zero = one * 0
    aug = Matrix(tuple(
        tuple(r) + tuple(one if i == j else zero for j in range(m.cols))
        for i, r in enumerate(m.entries)))
    r, pivots = rref(aug)
    if len(pivots) < m.rows or any(p >= m.cols for p in pivots):
        raise ValueError("matrix is singular")
    return Matrix(tuple(row[m.cols:] for row in r.entries))


def int_rank(rows):
    """Rank of an integer matrix by fraction-free elimination with
    content stripping; fast path for large dimension counts."""
    a = [list(map(int, r)) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    rk = 0
    pr = 0
    for pc in range(ncols):
        pivot = None
        best = None
        for r in range(pr, nrows):
            v = abs(a[r][pc])
            if v and (best is None or v < best):
                pivot, best = r, v
        if pivot is None:
            continue
        a[pr], a[pivot] = a[pivot], a[pr]
        prow = a[pr]
        pv = prow[pc]
        for r in range(pr + 1, nrows):
            v = a[r][pc]
            if v:
                row = a[r]
                nr = [pv * x - v * y for x, y in zip(row, prow)]
                g = 0
                for x in nr:
                    g = _intgcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    nr = [x // g for x in nr]
                a[r] = nr
        rk += 1
        pr += 1
        if pr == nrows:
            break
    return rk

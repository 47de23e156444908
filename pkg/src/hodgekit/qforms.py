"""Rational quadratic spaces: Gram matrices, signatures, orthogonal
complements, isotropy, and the dual bivector feeding the harmonic
quotient.

A QuadraticSpace may be built over Q (Fraction entries) or over a
number field (FieldElement entries); the signature is only defined for
rational Gram matrices.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import Degenerate, NotSymmetric
from .exactmath import Matrix, det, inverse, kernel
from .exactmath.linalg import row_space


@dataclass(frozen=True)
class QuadraticSpace:
    """Vector space with a nondegenerate symmetric Gram matrix."""

    gram: Matrix

    def __post_init__(self):
        g = self.gram
        if g.rows != g.cols:
            raise NotSymmetric("Gram matrix must be square")
        if not g.is_symmetric():
            raise NotSymmetric("Gram matrix must be symmetric")
        if det(g) == 0:
            raise Degenerate("Gram matrix must be nondegenerate")

    @property
    def dim(self):
        return self.gram.rows

    def form(self, u, v):
        """The bilinear form q(u, v)."""
        return _dot(self.gram.vec(v), u)

    def is_isotropic(self, v):
        return self.form(v, v) == 0

    def one(self):
        for r in self.gram.entries:
            for a in r:
                if a != 0:
                    return a / a
        raise Degenerate("zero Gram matrix")


def _dot(a, b):
    acc = None
    for x, y in zip(a, b):
        acc = x * y if acc is None else acc + x * y
    return acc


@dataclass(frozen=True)
class Signature:
    positives: int
    negatives: int

    def as_pair(self):
        return (self.positives, self.negatives)


def congruence_diagonal(gram):
    """Exact symmetric (congruence) diagonalization: returns (diagonal
    entries, basis matrix U) with U * gram * U^T diagonal.  Rows of U are
    the diagonalizing basis."""
    n = gram.rows
    g = [list(r) for r in gram.entries]
    zero = gram.entries[0][0] * 0 if n else Fraction(0)
    one = zero + 1
    u = [[one if i == j else zero for j in range(n)] for i in range(n)]
    diag = []
    for step in range(n):
        if g[step][step] == 0:
            p = None
            for r in range(step + 1, n):
                if g[r][r] != 0:
                    p = r
                    break
            if p is not None:
                g[step], g[p] = g[p], g[step]
                u[step], u[p] = u[p], u[step]
                for row in g:
                    row[step], row[p] = row[p], row[step]
            else:
                # all remaining diagonal entries vanish: use the 2x2
                # hyperbolic trick on a nonzero off-diagonal entry
                found = None
                for r in range(step, n):
                    for c in range(r + 1, n):
                        if g[r][c] != 0:
                            found = (r, c)
                            break
                    if found:
                        break
                if found is None:
                    raise Degenerate("degenerate block during diagonalization")
                r, c = found
                for j in range(n):
                    g[r][j] = g[r][j] + g[c][j]
                for i in range(n):
                    g[i][r] = g[i][r] + g[i][c]
                for j in range(n):
                    u[r][j] = u[r][j] + u[c][j]
                if r != step:
                    g[step], g[r] = g[r], g[step]
                    u[step], u[r] = u[r], u[step]
                    for row in g:
                        row[step], row[r] = row[r], row[step]
        d = g[step][step]
        diag.append(d)
        for r in range(step + 1, n):
            if g[r][step] != 0:
                f = g[r][step] / d
                for j in range(n):
                    g[r][j] = g[r][j] - f * g[step][j]
                for j in range(n):
                    u[r][j] = u[r][j] - f * u[step][j]
                for i in range(n):
                    g[i][r] = g[i][r] - f * g[i][step]
    return diag, Matrix(u)


def signature(space):
    """Signature by exact congruence diagonalization (rational Gram
    matrices only)."""
    if space.dim and not isinstance(space.gram.entries[0][0], Fraction):
        raise TypeError("signature requires a rational Gram matrix")
    diag, _ = congruence_diagonal(space.gram)
    pos = sum(1 for d in diag if d > 0)
    return Signature(pos, space.dim - pos)


def orth_complement(space, w):
    """Canonical basis of the q-orthogonal complement of the row span of
    w; the full space for an empty w."""
    if w.rows == 0:
        return Matrix.identity(space.dim, space.one())
    return kernel(w * space.gram)


def subspace(space, rows):
    """Canonical (RREF) basis of the span of the given row vectors."""
    return row_space(Matrix(rows))


def dual_bivector(space):
    """The symmetric 2-tensor with matrix gram**-1, written as a
    quadratic polynomial in the basis coordinates: the coefficient of
    x_i*x_j for i < j is twice the tensor entry and the coefficient of
    x_i**2 is the diagonal entry."""
    b = inverse(space.gram)
    n = space.dim
    out = {}
    for i in range(n):
        for j in range(i, n):
            c = b.entries[i][j] if i == j else b.entries[i][j] + b.entries[j][i]
            if c != 0:
                exp = [0] * n
                exp[i] += 1
                exp[j] += 1
                out[tuple(exp)] = c
    return out


def bivector_pairing(space, biv, u, v):
    """Evaluate a Sym^2 element, written as a quadratic polynomial,
    against the q-lowered covectors of u and v; for the dual bivector
    this recovers q(u, v)."""
    lu = space.gram.vec(u)
    lv = space.gram.vec(v)
    acc = None
    for exp, c in biv.items():
        idx = [i for i, e in enumerate(exp) for _ in range(e)]
        if len(idx) != 2:
            raise ValueError("not a quadratic form")
        i, j = idx
        if i == j:
            term = c * lu[i] * lv[i]
        else:
            term = c * (lu[i] * lv[j] + lu[j] * lv[i]) / 2
        acc = term if acc is None else acc + term
    if acc is None:
        return space.gram.entries[0][0] * 0
    return acc

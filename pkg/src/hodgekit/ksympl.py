"""k-symplectic structures: symbolic Pfaffians, degeneracy-quadric
extraction, Clifford operator construction, and the dimension
divisibility bounds.

A candidate is a linearly independent family of antisymmetric matrices
Psi_1..Psi_k on a 4n-dimensional space.  Verification computes the
Pfaffian of the generic combination sum t_i Psi_i, demands the exact
shape c * q(t)**n for a nondegenerate quadratic form q, and checks that
the combination has rank 2n at a certified point of the quadric,
passing to a quadratic extension field when the quadric has no obvious
rational point.
"""

from dataclasses import dataclass
from fractions import Fraction
import random

from .errors import (BasePointIsotropic, InternalError, OddDimension,
                     RelationsFail, TooLarge, ValidationError)
from .exactmath import Matrix, det, inverse, kernel, nf_create, rank
from .exactmath.linalg import rref
from .exactmath.mpoly import (mp_add, mp_eval, mp_items_grlex, mp_mul, mp_neg,
                              mp_pow, mp_scale)
from .qforms import congruence_diagonal

MAX_VDIM = 8
MAX_K = 5


@dataclass(frozen=True)
class KSymplecticCandidate:
    """Independent family of antisymmetric matrices, the image of a basis
    of W under a linear map W -> Lambda^2(V)."""

    psis: tuple

    def __post_init__(self):
        psis = self.psis
        if not psis:
            raise ValidationError("empty family")
        v_dim = psis[0].rows
        if v_dim % 4 != 0:
            raise ValidationError("dim V must be divisible by 4")
        if v_dim > MAX_VDIM:
            raise TooLarge(f"dim V = {v_dim} exceeds the cap {MAX_VDIM}")
        if len(psis) > MAX_K:
            raise TooLarge(f"k = {len(psis)} exceeds the cap {MAX_K}")
        for m in psis:
            if m.rows != v_dim or m.cols != v_dim:
                raise ValidationError("family matrices must share one shape")
            if not m.is_antisymmetric():
                raise ValidationError("family matrices must be antisymmetric")
        flat = Matrix(tuple(tuple(c for row in m.entries for c in row)
                            for m in psis))
        if len(rref(flat)[1]) != len(psis):
            raise ValidationError("family matrices must be linearly independent")

    @property
    def v_dim(self):
        return self.psis[0].rows

    @property
    def k(self):
        return len(self.psis)


@dataclass(frozen=True)
class PfaffianForm:
    """Homogeneous Pfaffian polynomial of the generic combination."""

    k: int
    poly: tuple  # grlex-sorted ((exponents, Fraction), ...)

    def as_dict(self):
        return dict(self.poly)


def pfaffian(entries, seed=0):
    """Exact Pfaffian of an antisymmetric matrix with polynomial entries
    (dicts mapping exponent tuples to Fractions), by recursive expansion
    along the first row; self-checked against det on random rational
    specializations."""
    n = len(entries)
    if n % 2 != 0:
        raise OddDimension("Pfaffian needs even dimension")
    if n > MAX_VDIM:
        raise TooLarge(f"dimension {n} exceeds the cap {MAX_VDIM}")
    nvars = 0
    for i in range(n):
        for j in range(n):
            if entries[i][j] != mp_neg(entries[j][i]):
                raise ValidationError("matrix is not antisymmetric")
            if entries[i][j]:
                nvars = len(next(iter(entries[i][j])))
    memo = {}

    def pf(idx):
        if not idx:
            return {(0,) * nvars: Fraction(1)}
        key = idx
        if key in memo:
            return memo[key]
        first = idx[0]
        rest = idx[1:]
        acc = {}
        for pos, j in enumerate(rest):
            a = entries[first][j]
            if a:
                sub = pf(tuple(x for x in rest if x != j))
                term = mp_mul(a, sub)
                if pos % 2 == 1:
                    term = mp_neg(term)
                acc = mp_add(acc, term)
        memo[key] = acc
        return acc

    result = pf(tuple(range(n)))
    _pfaffian_self_check(entries, result, seed)
    return PfaffianForm(nvars, tuple(mp_items_grlex(result)))


def _pfaffian_self_check(entries, pf_poly, seed):
    n = len(entries)
    nvars = None
    for row in entries:
        for e in row:
            if e:
                nvars = len(next(iter(e)))
                break
        if nvars is not None:
            break
    if nvars is None:
        return
    rng = random.Random(seed)
    for _ in range(3):
        point = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                      for _ in range(nvars))
        spec = Matrix(tuple(tuple(mp_eval(e, point) for e in row)
                            for row in entries))
        pv = mp_eval(pf_poly, point)
        if pv * pv != det(spec):
            raise InternalError("Pfaffian self-check failed: Pf^2 != det")


@dataclass(frozen=True)
class KSymplecticReport:
    """Outcome of verification: the degeneracy quadric and scalar on
    success, a failure reason otherwise."""

    ok: bool
    quadric: Matrix | None
    scalar: Fraction | None
    rank_on_quadric: int | None
    witness_point: tuple | None
    witness_field_poly: tuple | None
    failure_reason: str | None

    @property
    def n(self):
        return None if self.quadric is None else self.rank_on_quadric // 2


def _fail(reason):
    return KSymplecticReport(False, None, None, None, None, None, reason)


def verify_k_symplectic(cand, seed=0):
    """Decide whether the family defines a k-symplectic structure: the
    Pfaffian of the generic combination must be c * q**n with q a
    nondegenerate quadratic form, and the combination must have rank
    (dim V)/2 at a certified point of {q = 0}."""
    v_dim, k = cand.v_dim, cand.k
    n = v_dim // 4
    generic = [[_generic_entry(cand, i, j) for j in range(v_dim)]
               for i in range(v_dim)]
    p = pfaffian(generic, seed=seed).as_dict()
    if not p:
        return _fail("NotGenericallySymplectic")
    factors = _factor_multivariate(p, k)
    if len(factors) != 1:
        return _fail("NotQuadricPower")
    qpoly, mult = factors[0]
    if _poly_degree(qpoly) != 2 or mult != n:
        return _fail("NotQuadricPower")
    qpoly = _canonical_quadric(qpoly)
    scalar = _exact_ratio(p, mp_pow(qpoly, n))
    if scalar is None:
        raise InternalError("factorization does not reproduce the Pfaffian")
    qmat = _quadric_matrix(qpoly, k)
    if det(qmat) == 0:
        return _fail("DegenerateQuadric")
    point, field_poly = _quadric_point(qmat)
    m_at = _combination(cand, point)
    r = rank(m_at)
    if r != v_dim // 2:
        return _fail("WrongRankOnQuadric")
    return KSymplecticReport(True, qmat, scalar, r, point, field_poly, None)


def _generic_entry(cand, i, j):
    out = {}
    k = cand.k
    for a, psi in enumerate(cand.psis):
        c = psi.entries[i][j]
        if c != 0:
            exp = [0] * k
            exp[a] = 1
            out[tuple(exp)] = c
    return out


def _poly_degree(p):
    return max((sum(e) for e in p), default=-1)


def _factor_multivariate(p, k):
    """Irreducible factorization over Q via sympy; returns a list of
    (coefficient dict, multiplicity) with deterministic normalization."""
    import sympy

    ts = sympy.symbols(f"t0:{k}")
    expr = sympy.Add(*[sympy.Rational(c) * sympy.Mul(*[ts[a]**e
                                                       for a, e in enumerate(exp)])
                       for exp, c in p.items()])
    _, factors = sympy.factor_list(expr, *ts)
    out = []
    for f, mult in factors:
        poly = sympy.Poly(f, *ts)
        d = {}
        for exp, c in poly.terms():
            d[tuple(int(x) for x in exp)] = Fraction(sympy.Rational(c))
        out.append((d, int(mult)))
    out.sort(key=lambda fm: sorted(fm[0]))
    return out


def _canonical_quadric(q):
    """Scale so the grlex-leading coefficient is 1."""
    lead = mp_items_grlex(q)[0][1]
    return mp_scale(q, Fraction(1) / lead)


def _exact_ratio(p, q):
    """The constant c with p = c * q, or None."""
    items = mp_items_grlex(q)
    if not items:
        return None
    exp, c0 = items[0]
    if exp not in p:
        return None
    c = p[exp] / c0
    return c if mp_scale(q, c) == p else None


def _quadric_matrix(q, k):
    entries = [[Fraction(0)] * k for _ in range(k)]
    for exp, c in q.items():
        idx = [i for i, e in enumerate(exp) for _ in range(e)]
        if len(idx) != 2:
            raise InternalError("quadric factor is not quadratic")
        i, j = idx
        if i == j:
            entries[i][i] = c
        else:
            entries[i][j] = entries[j][i] = c / 2
    return Matrix(entries)


def _is_square(f):
    if f < 0:
        return None
    from math import isqrt

    p, q = f.numerator, f.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def _quadric_point(qmat):
    """A certified nonzero point on {q = 0}: rational when some
    diagonalized pair of entries has a rational square ratio, otherwise
    over the quadratic extension adjoining that square root.  Returns
    (point coordinates, extension polynomial or None)."""
    diag, u = congruence_diagonal(qmat)
    k = qmat.rows
    for i in range(k):
        for j in range(i + 1, k):
            r = _is_square(-diag[i] / diag[j])
            if r is not None:
                point = tuple(a + r * b
                              for a, b in zip(u.entries[i], u.entries[j]))
                return point, None
    if k < 2:
        raise InternalError("one-variable nondegenerate quadric has no point")
    mu = -diag[0] / diag[1]
    field = nf_create([-mu, 0, 1])
    r = field.gen()
    point = tuple(field.from_rational(a) + r * field.from_rational(b)
                  for a, b in zip(u.entries[0], u.entries[1]))
    return point, field.defining_poly


def _combination(cand, point):
    acc = None
    for c, psi in zip(point, cand.psis):
        if isinstance(c, (int, Fraction)):
            term = psi * c
        else:
            lifted = Matrix(tuple(tuple(c.parent.from_rational(x) for x in row)
                                  for row in psi.entries))
            term = lifted * c
        acc = term if acc is None else acc + term
    return acc


@dataclass(frozen=True)
class CliffordResult:
    """Operators A_i = Psi(w0)^-1 Psi(w_i) on an orthogonal basis of the
    complement of the base point: pairwise anticommuting with scalar
    squares, i.e. a Clifford module structure on V."""

    operators: tuple
    squares: tuple
    base_point: tuple
    orth_basis: tuple


def clifford_operators(cand, report, omega0):
    """Clifford module verification at an anisotropic base point."""
    if not report.ok:
        raise ValidationError("report does not certify a k-symplectic structure")
    q = report.quadric
    omega0 = tuple(Fraction(c) for c in omega0)
    norm0 = _qform(q, omega0, omega0)
    if norm0 == 0:
        raise BasePointIsotropic("base point lies on the quadric")
    comp = kernel(Matrix((q.vec(omega0),)))
    obasis = _orthogonalize(q, comp.entries)
    m0 = _combination(cand, omega0)
    if det(m0) == 0:
        raise InternalError("Psi(base point) is singular despite anisotropy")
    m0_inv = inverse(m0)
    ops = []
    for w in obasis:
        ops.append(m0_inv * _combination(cand, w))
    v_dim = cand.v_dim
    ident = Matrix.identity(v_dim)
    squares = []
    for i, a in enumerate(ops):
        sq = a * a
        lam = sq.entries[0][0]
        if lam == 0 or sq != ident * lam:
            raise RelationsFail("operator square is not a nonzero scalar")
        squares.append(lam)
        for j in range(i):
            anti = a * ops[j] + ops[j] * a
            if any(c != 0 for row in anti.entries for c in row):
                raise RelationsFail("operators fail to anticommute")
    return CliffordResult(tuple(ops), tuple(squares), omega0, tuple(obasis))


def _qform(q, u, v):
    acc = Fraction(0)
    for x, y in zip(q.vec(v), u):
        acc += x * y
    return acc


def _orthogonalize(q, vectors):
    """Deterministic q-orthogonal basis of the span of the given vectors;
    isotropic candidates are repaired by adding a later vector."""
    basis = []
    pool = [tuple(v) for v in vectors]
    while pool:
        reduced = []
        for v in pool:
            w = list(v)
            for u in basis:
                f = _qform(q, v, u) / _qform(q, u, u)
                w = [x - f * y for x, y in zip(w, u)]
            reduced.append(tuple(w))
        pick = None
        for idx, w in enumerate(reduced):
            if any(c != 0 for c in w) and _qform(q, w, w) != 0:
                pick = idx
                break
        if pick is None:
            # all reduced vectors isotropic: some pairwise pairing is
            # nonzero because the form is nondegenerate on the span
            found = None
            for a in range(len(reduced)):
                for b in range(a + 1, len(reduced)):
                    if _qform(q, reduced[a], reduced[b]) != 0:
                        found = (a, b)
                        break
                if found:
                    break
            if found is None:
                nonzero = [w for w in reduced if any(c != 0 for c in w)]
                if not nonzero:
                    break
                raise InternalError("orthogonalization stalled on a "
                                    "totally isotropic block")
            a, b = found
            merged = tuple(x + y for x, y in zip(reduced[a], reduced[b]))
            pool = [merged] + [w for i, w in enumerate(reduced) if i not in found]
            continue
        basis.append(reduced[pick])
        pool = [w for i, w in enumerate(reduced)
                if i != pick and any(c != 0 for c in w)]
    return basis


def divisibility_bound(k):
    """2**floor((k-1)/2): dim V of any k-symplectic space is divisible by
    this Clifford-module bound."""
    if k < 1:
        raise ValidationError("k must be at least 1")
    return 2 ** ((k - 1) // 2)


def torus_bound(d):
    """2**floor((d+1)/2): divisibility bound for the first cohomology of
    a symplectic torus inside a manifold generic in a d-dimensional
    deformation family."""
    if d < 0:
        raise ValidationError("d must be nonnegative")
    return 2 ** ((d + 1) // 2)


def check_torus(d, dim_h1):
    """Whether dim H^1 of the torus satisfies the divisibility bound."""
    return dim_h1 % torus_bound(d) == 0


def subvariety_bound(d, e):
    """(d+2)*e: lower bound for the dimension of the degree-2
    transcendental cohomology of a symplectic subvariety."""
    if d < 0 or e < 1:
        raise ValidationError("need d >= 0 and e >= 1")
    return (d + 2) * e

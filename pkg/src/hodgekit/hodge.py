"""K3-type Hodge structures as exact data.

A period is a vector over a number field spanning the (2,0)-line; it is
validated against the two defining conditions q(O, O) = 0 and
q(O, conj O) > 0 at a chosen embedding.  The transcendental lattice is
the span of the rational coefficient vectors of the period in the power
basis, which is the minimal rational subspace whose complexification
contains the period line.

The endomorphism algebra is computed as the space of rational matrices
keeping the period line invariant: every Galois conjugate of the period
is then a simultaneous eigenvector, which forces the algebra to be a
commutative field.  The polarization adjoint a -> q^-1 a^T q classifies
it: pointwise fixed means totally real (Mumford-Tate SO_E), otherwise a
CM field over the fixed subfield E_0 (Mumford-Tate U_E).
"""

from dataclasses import dataclass
from fractions import Fraction
import random

from .errors import (InternalError, IsotropyFails, NotClosed, NotCommutative,
                     PositivityFails, ValidationError, WrongSignature)
from .exactmath import (Matrix, certified_sign, conjugate_element, kernel,
                        nf_create, nf_embeddings, solve_linear)
from .exactmath.linalg import inverse, row_space
from .qforms import QuadraticSpace, orth_complement, signature

TOTALLY_REAL = "TotallyReal"
CM = "CM"
SO_E = "SO_E"
U_E = "U_E"


@dataclass(frozen=True)
class K3Period:
    """Validated period datum: space (V, q), field F with a chosen
    embedding, and the period vector over F."""

    space: QuadraticSpace
    field: object
    embedding: object
    omega: tuple
    omega_conj: tuple

    @property
    def dim(self):
        return self.space.dim


def validate_period(space, field, embedding, omega, precision_start=64):
    """Certify the period conditions: signature (2, m-2), q(O, O) = 0
    exactly, q(O, conj O) > 0 at the embedding."""
    m = space.dim
    omega = tuple(omega)
    if len(omega) != m:
        raise ValidationError("period length does not match the space")
    if all(v.is_zero() for v in omega):
        raise ValidationError("period vector must be nonzero")
    sig = signature(space).as_pair()
    if sig != (2, m - 2):
        raise WrongSignature(f"signature {sig} is not (2, {m - 2})")
    iso = _field_form(space, omega, omega)
    if not iso.is_zero():
        raise IsotropyFails(
            f"q(omega, omega) is nonzero: {list(iso.coords)}", witness=iso)
    omega_conj = tuple(conjugate_element(v, embedding) for v in omega)
    pos = _field_form(space, omega, omega_conj)
    s = certified_sign(pos, embedding, precision_start=precision_start)
    if s <= 0:
        raise PositivityFails(f"q(omega, conj omega) has sign {s}, not positive")
    return K3Period(space, field, embedding, omega, omega_conj)


def _field_form(space, u, v):
    acc = None
    g = space.gram.entries
    for i, ui in enumerate(u):
        for j, vj in enumerate(v):
            if g[i][j] == 0:
                continue
            term = ui * vj * g[i][j]
            acc = term if acc is None else acc + term
    if acc is None:
        return u[0] * 0
    return acc


@dataclass(frozen=True)
class K3Hodge:
    """Period plus derived transcendental lattice T and its orthogonal
    complement (the algebraic part)."""

    period: K3Period
    trans: Matrix      # rows: canonical basis of T
    alg: Matrix        # rows: canonical basis of T-perp

    @property
    def space(self):
        return self.period.space

    @property
    def dim_t(self):
        return self.trans.rows


def transcendental_lattice(period):
    """Span of the rational coefficient vectors of the period in the
    power basis of its field; minimal by the Galois-span argument, and
    re-verified to contain the period after complexification."""
    m = period.dim
    e = period.field.degree
    vecs = []
    for j in range(e):
        v = tuple(period.omega[i].coords[j] for i in range(m))
        if any(c != 0 for c in v):
            vecs.append(v)
    t = row_space(Matrix(vecs))
    tsig = signature(QuadraticSpace(_restrict_gram(period.space, t))).as_pair()
    if tsig != (2, t.rows - 2):
        raise WrongSignature(
            f"q restricted to the transcendental lattice has signature {tsig}")
    _express_in_basis(t, period.omega, period.field)  # must succeed
    tperp = orth_complement(period.space, t)
    if t.rows + tperp.rows != m:
        raise InternalError("T and its complement do not decompose V")
    return K3Hodge(period, t, tperp)


def _restrict_gram(space, basis):
    rows = basis.entries
    return Matrix(tuple(tuple(space.form(u, v) for v in rows) for u in rows))


def _express_in_basis(basis, omega, field):
    """Coordinates of the period over the row basis, solved over F."""
    cols = Matrix(tuple(zip(*(tuple(field.from_rational(c) for c in row)
                              for row in basis.entries))))
    sol = solve_linear(cols, omega)
    if sol.particular is None:
        raise InternalError("period does not lie in the computed lattice")
    return sol.particular


def is_hodge_substructure(h, w):
    """A rational subspace is a Hodge substructure iff it splits into its
    intersections with T and T-perp and meets T in 0 or all of T; valid
    because T is simple and T-perp is a sum of trivial structures."""
    w = row_space(w)
    wt = _intersect(w, h.trans)
    wp = _intersect(w, h.alg)
    if wt.rows not in (0, h.trans.rows):
        return False
    return wt.rows + wp.rows == w.rows


def _intersect(a, b):
    """Canonical basis of the intersection of two row spaces."""
    if a.rows == 0 or b.rows == 0:
        return Matrix.zeros(0, a.cols)
    stacked = Matrix(a.entries + b.entries)
    ker = kernel(stacked.transpose())
    if ker.rows == 0:
        return Matrix.zeros(0, a.cols)
    rows = []
    for lam in ker.entries:
        vec = [Fraction(0)] * a.cols
        for c, row in zip(lam[:a.rows], a.entries):
            if c != 0:
                vec = [x + c * y for x, y in zip(vec, row)]
        rows.append(tuple(vec))
    return row_space(Matrix(rows))


@dataclass(frozen=True)
class MTDescriptor:
    """Mumford-Tate shape: the group family and the rank of the lattice
    over the endomorphism field."""

    family: str
    rank: int


@dataclass(frozen=True)
class EndFieldResult:
    """The Hodge endomorphism field E of the transcendental lattice with
    its classification data."""

    basis: tuple              # rational matrices on T spanning E
    e: int
    primitive_matrix: Matrix
    primitive_minpoly: tuple
    field: object             # NumberField defined by the minimal polynomial
    classification: str
    fixed_subalgebra: tuple   # basis of E_0 (empty in the totally real case)
    adjoint_images: tuple     # a* for each basis matrix
    mt: MTDescriptor


def endomorphism_field(h, seed=0):
    """Solve for all rational matrices phi on T with phi(O) parallel to
    O, then verify the field axioms and classify by the polarization
    adjoint."""
    period = h.period
    field = period.field
    e_f = field.degree
    t = h.dim_t
    omega_t = _express_in_basis(h.trans, period.omega, field)
    gram_t = _restrict_gram(period.space, h.trans)

    # proportionality as vanishing 2x2 minors, restricted to Q
    prods = [[omega_t[r] * omega_t[k] for k in range(t)] for r in range(t)]
    rows = []
    for r in range(t):
        for s in range(r + 1, t):
            for j in range(e_f):
                row = [Fraction(0)] * (t * t)
                for k in range(t):
                    row[s * t + k] += prods[r][k].coords[j]
                    row[r * t + k] -= prods[s][k].coords[j]
                rows.append(tuple(row))
    ker = kernel(Matrix(rows)) if rows else Matrix.identity(t * t)
    basis = tuple(Matrix(tuple(tuple(v[i * t + j] for j in range(t))
                               for i in range(t)))
                  for v in ker.entries)
    e = len(basis)
    if e == 0:
        raise InternalError("endomorphism algebra came out empty")
    cols = _basis_columns(basis, t)
    if solve_linear(cols, _flatten(Matrix.identity(t))).particular is None:
        raise InternalError("identity is missing from the endomorphism algebra")
    for a in basis:
        for b in basis:
            if a * b != b * a:
                raise NotCommutative("endomorphism algebra is not commutative")
            if solve_linear(cols, _flatten(a * b)).particular is None:
                raise NotClosed("endomorphism algebra is not closed under product")

    gram_inv = inverse(gram_t)
    adj = []
    for a in basis:
        astar = gram_inv * a.transpose() * gram_t
        if solve_linear(cols, _flatten(astar)).particular is None:
            raise NotClosed("endomorphism algebra is not closed under adjoint")
        adj.append(astar)
    for a, astar in zip(basis, adj):
        if gram_inv * astar.transpose() * gram_t != a:
            raise InternalError("adjoint is not an involution")

    totally_real = all(a == astar for a, astar in zip(basis, adj))
    fixed = ()
    if not totally_real:
        rows = []
        for lam in range(e):
            diff = basis[lam] - adj[lam]
            rows.append(_flatten(diff))
        fix_ker = kernel(Matrix(tuple(zip(*rows))))
        fixed = tuple(_combine(basis, lam) for lam in fix_ker.entries)
        if 2 * len(fixed) != e:
            raise InternalError("fixed subalgebra does not have dimension e/2")

    prim, minpoly = _primitive_element(basis, t, e, seed)
    efield = nf_create(minpoly)
    _check_root_pattern(efield, totally_real)
    if t % e != 0:
        raise InternalError("field degree does not divide the lattice dimension")
    mt = MTDescriptor(SO_E if totally_real else U_E, t // e)
    return EndFieldResult(basis, e, prim, minpoly, efield,
                          TOTALLY_REAL if totally_real else CM,
                          fixed, tuple(adj), mt)


def _flatten(m):
    return tuple(c for row in m.entries for c in row)


def _basis_columns(basis, t):
    return Matrix(tuple(zip(*(_flatten(b) for b in basis))))


def _combine(basis, lam):
    acc = None
    for c, b in zip(lam, basis):
        term = b * c
        acc = term if acc is None else acc + term
    return acc


def _matrix_minpoly(m):
    """Minimal polynomial by the first linear dependence among powers."""
    t = m.rows
    powers = [Matrix.identity(t)]
    while True:
        rows = [_flatten(p) for p in powers]
        ker = kernel(Matrix(tuple(zip(*rows))))
        if ker.rows > 0:
            lam = ker.entries[0]
            lead = lam[-1]
            return tuple(c / lead for c in lam)
        powers.append(powers[-1] * m)


def _primitive_element(basis, t, e, seed):
    """A basis combination whose minimal polynomial has degree e, found
    by trying basis matrices then seeded small integer combinations."""
    for b in basis:
        p = _matrix_minpoly(b)
        if len(p) - 1 == e:
            return b, p
    rng = random.Random(seed)
    for _ in range(1000):
        coeffs = [rng.randint(-3, 3) for _ in basis]
        cand = None
        for c, b in zip(coeffs, basis):
            term = b * c
            cand = term if cand is None else cand + term
        if cand is None:
            continue
        p = _matrix_minpoly(cand)
        if len(p) - 1 == e:
            return cand, p
    raise InternalError("no primitive element found")


def _check_root_pattern(efield, totally_real):
    embs = nf_embeddings(efield)
    reals = sum(1 for s in embs if s.is_real)
    if totally_real and reals != len(embs):
        raise InternalError("totally real classification with nonreal roots")
    if not totally_real and reals != 0:
        raise InternalError("CM classification with real roots")


def hodge_classes_tensor_square(h):
    """Canonical basis of the rational (2,2)-classes in T (x) T: the
    tensors whose (4,0), (3,1), (1,3) and (0,4) frame components vanish.
    The dimension always equals dim E."""
    period = h.period
    field = period.field
    t = h.dim_t
    omega_t = _express_in_basis(h.trans, period.omega, field)
    omega_conj_t = tuple(conjugate_element(v, period.embedding) for v in omega_t)
    gram_t = _restrict_gram(period.space, h.trans)
    gram_f = Matrix(tuple(tuple(field.from_rational(c) for c in row)
                          for row in gram_t.entries))

    # frame: omega, conj omega, then a basis of the (1,1)-part inside T
    lowered = Matrix((gram_f.vec(omega_t), gram_f.vec(omega_conj_t)))
    w11 = kernel(lowered)
    frame_rows = (tuple(omega_t), tuple(omega_conj_t)) + w11.entries
    p = Matrix(frame_rows).transpose()
    p_inv = inverse(p)

    rows = []
    e_f = field.degree
    forbidden = [(0, 0), (1, 1)]
    forbidden += [(0, j) for j in range(2, t)] + [(j, 0) for j in range(2, t)]
    forbidden += [(1, j) for j in range(2, t)] + [(j, 1) for j in range(2, t)]
    # frame component (r, s) of the elementary tensor E_ab is
    # p_inv[r][a] * p_inv[s][b]
    for r, s in forbidden:
        for j in range(e_f):
            row = []
            for a in range(t):
                for b in range(t):
                    c = p_inv.entries[r][a] * p_inv.entries[s][b]
                    row.append(c.coords[j])
            rows.append(tuple(row))
    ker = kernel(Matrix(rows))
    classes = tuple(Matrix(tuple(tuple(v[a * t + b] for b in range(t))
                                 for a in range(t)))
                    for v in ker.entries)
    return classes

"""Number fields Q[x]/(f) with exact arithmetic and certified complex
embeddings.

A NumberField carries a monic irreducible defining polynomial; elements
are coordinate vectors in the power basis 1, x, ..., x**(e-1).  Each of
the e embeddings into C is certified by an isolating box with rational
corners; sign questions are settled by interval evaluation at doubling
precision, with exact zero decided algebraically.

Conjugation is handled through the conjugation automorphism of the
chosen embedding: the field element tau with sigma(tau(v)) equal to the
complex conjugate of sigma(v).  When the image field is not stable
under conjugation no such tau exists and period-style inputs are
rejected (ConjugationNotInternal).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import (DegreeTooLarge, InternalError, NotMonic, NotRealValued,
                      Reducible)
from . import unipoly as up
from .intervals import box_disjoint, interval, iv_sign, poly_eval_box
from .rootiso import RealRoot, isolate_nonreal_roots, isolate_real_roots

MAX_DEGREE = 16
_SIGN_BITS_CAP = 4096


@dataclass(frozen=True)
class NumberField:
    """Q[x]/(defining_poly), defining_poly monic irreducible."""

    defining_poly: tuple

    @property
    def degree(self):
        return len(self.defining_poly) - 1

    def element(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.degree:
            raise ValueError("coordinate vector has wrong length")
        return FieldElement(self, coords)

    def from_rational(self, c):
        return self.element((Fraction(c),) + (Fraction(0),) * (self.degree - 1))

    def zero(self):
        return self.from_rational(0)

    def one(self):
        return self.from_rational(1)

    def gen(self):
        if self.degree == 1:
            # x - c: the generator is the rational c itself
            return self.from_rational(-self.defining_poly[0])
        coords = [Fraction(0)] * self.degree
        coords[1] = Fraction(1)
        return self.element(coords)

    def embeddings(self):
        return nf_embeddings(self)

    def __repr__(self):
        return f"NumberField({list(self.defining_poly)})"


def nf_create(coeffs):
    """Build the number field defined by a monic irreducible polynomial
    (coefficients constant-first)."""
    f = up.normalize(tuple(Fraction(c) for c in coeffs))
    e = up.degree(f)
    if e < 1 or e > MAX_DEGREE:
        raise DegreeTooLarge(f"defining polynomial degree {e} outside 1..{MAX_DEGREE}")
    if f[-1] != 1:
        raise NotMonic("defining polynomial must be monic")
    _, factors = up.factor_rational(f)
    if len(factors) != 1 or factors[0][1] != 1:
        witness = factors[0][0]
        raise Reducible(f"defining polynomial factors; witness degree {up.degree(witness)}",
                        witness=witness)
    return NumberField(f)


QQ = None  # the rationals as a degree-1 field, created below


class FieldElement:
    """Element of a NumberField in power-basis coordinates."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent, coords):
        self.parent = parent
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.parent != self.parent:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.parent.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.parent,
                            tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.parent, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.parent,
                            tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return FieldElement(self.parent, tuple(a * c for a in self.coords))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prod = up.mul(self.coords, o.coords)
        return FieldElement(self.parent, _reduce(self.parent, prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.parent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid: s*self + t*f = 1 in Q[x]
        f = self.parent.defining_poly
        a, b = up.normalize(self.coords), f
        s0, s1 = (Fraction(1),), ()
        while b:
            q, r = up.divmod_poly(a, b)
            a, b = b, r
            s0, s1 = s1, up.sub(s0, up.mul(q, s1))
        # a is now a nonzero constant gcd
        inv = tuple(c / a[0] for c in s0)
        return FieldElement(self.parent, _reduce(self.parent, inv))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.parent.from_rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.parent == other.parent and self.coords == other.coords

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        return hash((self.parent, self.coords))

    def __repr__(self):
        return f"FieldElement({list(self.coords)})"


def _reduce(field, coeffs):
    """Reduce a polynomial in the generator modulo the defining poly."""
    e = field.degree
    coeffs = list(coeffs) + [Fraction(0)] * max(0, e - len(coeffs))
    if len(coeffs) <= e:
        return tuple(coeffs[:e])
    powers = _power_table(field)
    out = coeffs[:e]
    for k in range(e, len(coeffs)):
        c = coeffs[k]
        if c:
            pk = powers[k - e]
            for i in range(e):
                out[i] += c * pk[i]
    return tuple(out)


@lru_cache(maxsize=None)
def _power_table(field):
    """Coordinates of gen**e, ..., gen**(2e-2) in the power basis."""
    f = field.defining_poly
    e = up.degree(f)
    rows = []
    cur = [-c for c in f[:-1]]  # gen**e
    rows.append(tuple(cur))
    for _ in range(e - 2 if e >= 2 else 0):
        nxt = [Fraction(0)] * e
        carry = cur[e - 1]
        for i in range(e - 1):
            nxt[i + 1] = cur[i]
        if carry:
            for i in range(e):
                nxt[i] += carry * rows[0][i]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


def mult_matrix(a):
    """Matrix of multiplication by a on the power basis (columns are the
    images of the basis)."""
    from .linalg import Matrix

    field = a.parent
    e = field.degree
    cols = []
    cur = a
    gen = field.gen()
    for _ in range(e):
        cols.append(cur.coords)
        cur = cur * gen
    return Matrix(tuple(zip(*cols)))


def field_trace(a):
    """Trace of a from its field down to Q."""
    return mult_matrix(a).trace()


@dataclass(frozen=True)
class ComplexEmbedding:
    """One embedding of a number field into C, certified by an isolating
    box around the image of the generator."""

    parent: NumberField
    index: int
    re_root: RealRoot
    im_root: RealRoot | None
    is_real: bool
    conjugate_index: int

    @property
    def root_box(self):
        im = self.im_root.interval if self.im_root is not None else (Fraction(0), Fraction(0))
        return (self.re_root.interval, im)

    def _refined_parts(self, width):
        re = self.re_root.refined_below(width)
        im = self.im_root.refined_below(width) if self.im_root is not None else None
        return re, im

    def eval_box(self, element, width):
        """Enclosure of element evaluated at this embedding, with the
        generator box refined below the given width."""
        if element.parent != self.parent:
            raise ValueError("element of a different field")
        re, im = self._refined_parts(width)
        gen_box = (re.interval, im.interval if im is not None else interval(0))
        return poly_eval_box(element.coords, gen_box)

    def __repr__(self):
        kind = "real" if self.is_real else "complex"
        return f"ComplexEmbedding(#{self.index}, {kind}, box={self.root_box})"


@lru_cache(maxsize=None)
def nf_embeddings(field):
    """All complex embeddings: real ones first (increasing), then nonreal
    sorted by (real part, imaginary part).  Conjugation is recorded as an
    index involution fixing exactly the real embeddings."""
    f = field.defining_poly
    e = field.degree
    if e == 1:
        root = RealRoot(None, -f[0], -f[0])
        return (ComplexEmbedding(field, 0, root, None, True, 0),)
    reals = isolate_real_roots(f)
    embs = [ComplexEmbedding(field, i, r, None, True, i)
            for i, r in enumerate(reals)]
    off = len(reals)
    for pos, (crb, conj_pos) in enumerate(isolate_nonreal_roots(f, e - off)):
        embs.append(ComplexEmbedding(field, off + pos, crb.xr, crb.yr,
                                     False, off + conj_pos))
    if len(embs) != e:
        raise InternalError("embedding count does not match degree")
    return tuple(embs)


@lru_cache(maxsize=None)
def roots_in_field(field):
    """All roots of the defining polynomial inside the field itself,
    found by Trager's norm method; always contains the generator."""
    f = field.defining_poly
    e = field.degree
    gen = field.gen()
    if e == 1:
        return (gen,)
    if e == 2:
        # sum of the two roots is -f[1]
        return tuple(sorted((gen, field.from_rational(-f[1]) - gen),
                            key=lambda r: r.coords))
    norm = None
    shift = None
    for s in range(1, 4 * e * e + 2):
        n = _trager_norm(f, s)
        if up.is_squarefree(n):
            norm, shift = n, s
            break
    if norm is None:
        raise InternalError("no squarefree Trager norm found")
    _, factors = up.factor_rational(norm)
    roots = []
    f_lift = tuple(field.from_rational(c) for c in f)
    for h, _mult in factors:
        h_lift = tuple(field.from_rational(c) for c in h)
        # substitute y -> y + shift*gen
        shifted = up.compose(h_lift, (gen * shift, field.one()))
        g = up.gcd(f_lift, shifted)
        if up.degree(g) == 1:
            roots.append(-g[0])
    if not any(r == gen for r in roots):
        raise InternalError("Trager root search lost the generator")
    return tuple(sorted(roots, key=lambda r: r.coords))


def _trager_norm(f, s):
    """Res_x(f(x), f(y - s*x)) as a Fraction polynomial in y."""
    import sympy

    x, y = sympy.symbols("x y")
    fe = sum(sympy.Rational(c) * x**k for k, c in enumerate(f))
    ge = sum(sympy.Rational(c) * (y - s * x)**k for k, c in enumerate(f))
    res = sympy.Poly(fe, x).resultant(sympy.Poly(sympy.expand(ge), x))
    pres = sympy.Poly(res, y)
    return up.normalize([Fraction(sympy.Rational(c))
                         for c in reversed(pres.all_coeffs())])


@lru_cache(maxsize=None)
def conjugation_automorphism(field, index):
    """Image of the generator under the automorphism tau satisfying
    sigma(tau(v)) = conj(sigma(v)) for the embedding of the given index,
    or None when the embedded field is not conjugation stable."""
    embs = nf_embeddings(field)
    emb = embs[index]
    if emb.is_real:
        return field.gen()
    target = embs[emb.conjugate_index]
    for cand in roots_in_field(field):
        if _embedded_root_is(cand, emb, target.index):
            return cand
    return None


def _embedded_root_is(cand, emb, root_index):
    """Certified test: does sigma(cand), a root of the defining poly,
    coincide with the root isolated by embedding root_index?"""
    embs = nf_embeddings(emb.parent)
    width = Fraction(1, 2**16)
    while True:
        val = emb.eval_box(cand, width)
        boxes = []
        for other in embs:
            re, im = other._refined_parts(width)
            boxes.append((re.interval,
                          im.interval if im is not None else interval(0)))
        hits = [i for i, b in enumerate(boxes) if not box_disjoint(val, b)]
        if len(hits) == 1:
            return hits[0] == root_index
        width /= 2**8


def apply_automorphism(tau_gen, v):
    """Apply the automorphism gen -> tau_gen to a field element."""
    field = v.parent
    acc = field.zero()
    for c in reversed(v.coords):
        acc = acc * tau_gen + c
    return acc


def conjugate_element(v, emb):
    """The element representing conj(sigma(v)) inside the field, via the
    conjugation automorphism of the embedding."""
    from ..errors import ConjugationNotInternal

    tau = conjugation_automorphism(v.parent, emb.index)
    if tau is None:
        raise ConjugationNotInternal(
            "complex conjugation does not stabilize the embedded field; "
            "re-present the data over a conjugation-closed field")
    return apply_automorphism(tau, v)


def certified_sign(v, emb, assume_real=False, precision_start=64):
    """Sign (-1, 0, +1) of a field element known to be real-valued at the
    embedding.  Zero is decided exactly; a nonzero sign is certified by
    interval evaluation at doubling precision.

    Realness must be certifiable (real embedding, or fixed by the
    conjugation automorphism) unless the caller asserts it via
    assume_real.
    """
    if v.is_zero():
        return 0
    if not emb.is_real and not assume_real:
        tau = conjugation_automorphism(v.parent, emb.index)
        if tau is None or apply_automorphism(tau, v) != v:
            raise NotRealValued(
                "value is not certifiably real at this embedding")
    bits = max(4, precision_start)
    while bits <= _SIGN_BITS_CAP:
        val = emb.eval_box(v, Fraction(1, 2**bits))
        s = iv_sign(val[0])
        if s is not None and s != 0:
            return s
        bits *= 2
    raise NotRealValued(
        "sign could not be certified; the asserted real value appears to vanish "
        "or not be real")


def _make_rationals():
    return NumberField(up.normalize((Fraction(0), Fraction(1))))


QQ = _make_rationals()

"""Certified real and complex root isolation for rational polynomials.

Real roots are isolated per irreducible factor with Sturm sequences;
rational roots are represented exactly as degenerate intervals, so
bisection refinement never stalls on a rational midpoint.

Nonreal roots of f are located through the projections of the system
Re f(x+iy) = Im f(x+iy) = 0: their x-coordinates are roots of
R_x = Res_y(u, w) and their y-coordinates roots of R_y = Res_x(u, w),
where u + i*y*w = f(x+iy).  Candidate boxes (x-root interval) x (y-root
interval) are pruned by interval evaluation of f until exactly
deg(f) - #real boxes survive; each survivor then isolates one root, and
both coordinates refine by plain Sturm bisection.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InternalError
from . import unipoly as up
from .intervals import iv_disjoint, poly_eval_box


@dataclass(frozen=True)
class RealRoot:
    """One real algebraic number: either an exact rational (lo == hi) or
    an isolating interval of an irreducible polynomial with a sign change
    at the endpoints."""

    poly: tuple | None
    lo: Fraction
    hi: Fraction

    @property
    def exact(self):
        return self.poly is None

    @property
    def interval(self):
        return (self.lo, self.hi)

    def refined(self):
        """One bisection step; exact roots are returned unchanged."""
        if self.exact:
            return self
        mid = (self.lo + self.hi) / 2
        # irreducible of degree >= 2: no rational roots, so the sign at
        # mid is never zero
        smid = up.eval_at(self.poly, mid) > 0
        slo = up.eval_at(self.poly, self.lo) > 0
        if smid != slo:
            return RealRoot(self.poly, self.lo, mid)
        return RealRoot(self.poly, mid, self.hi)

    def refined_below(self, width):
        r = self
        while r.hi - r.lo > width:
            r = r.refined()
        return r


def _isolate_irreducible(poly):
    """Isolating intervals with endpoint sign changes for an irreducible
    Fraction polynomial of degree >= 2."""
    chain = up.sturm_chain(poly)
    bound = up.root_bound(poly)
    out = []

    def descend(a, b):
        n = up.sturm_count(chain, a, b)
        if n == 0:
            return
        if n == 1:
            out.append(RealRoot(poly, a, b))
            return
        mid = (a + b) / 2
        descend(a, mid)
        descend(mid, b)

    descend(-bound, bound)
    return out


def isolate_real_roots(p):
    """All distinct real roots of p, as RealRoots sorted increasingly."""
    p = up.normalize(p)
    if up.degree(p) <= 0:
        return []
    _, factors = up.factor_rational(p)
    roots = []
    for f, _mult in factors:
        if up.degree(f) == 1:
            roots.append(RealRoot(None, -f[0], -f[0]))
        else:
            roots.extend(_isolate_irreducible(f))
    # refine until intervals from different factors are pairwise disjoint
    changed = True
    while changed:
        changed = False
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                while not iv_disjoint(roots[i].interval, roots[j].interval):
                    roots[i] = roots[i].refined()
                    roots[j] = roots[j].refined()
                    changed = True
    roots.sort(key=lambda r: r.lo)
    return roots


def _complex_parts(f):
    """Split f(x+iy) into u + i*y*w with u, w in Q[x, y] (dicts keyed by
    (x-exponent, y-exponent))."""
    re = {(0, 0): Fraction(1)}
    im = {}
    u, v = {}, {}

    def accum(target, source, c):
        for k, a in source.items():
            target[k] = target.get(k, Fraction(0)) + c * a

    for k, a in enumerate(f):
        if k > 0:
            nre, nim = {}, {}
            for (i, j), c in re.items():
                nre[(i + 1, j)] = nre.get((i + 1, j), Fraction(0)) + c
                nim[(i, j + 1)] = nim.get((i, j + 1), Fraction(0)) + c
            for (i, j), c in im.items():
                nre[(i, j + 1)] = nre.get((i, j + 1), Fraction(0)) - c
                nim[(i + 1, j)] = nim.get((i + 1, j), Fraction(0)) + c
            re = {k: c for k, c in nre.items() if c}
            im = {k: c for k, c in nim.items() if c}
        if a:
            accum(u, re, a)
            accum(v, im, a)
    u = {k: c for k, c in u.items() if c}
    v = {k: c for k, c in v.items() if c}
    if any(j == 0 for (_, j) in v):
        raise InternalError("Im f(x+iy) must be divisible by y")
    w = {(i, j - 1): c for (i, j), c in v.items()}
    return u, w


def _resultant_projection(u, w, eliminate):
    """Res over the eliminated variable, as a Fraction polynomial in the
    other one (constant first)."""
    import sympy

    x, y = sympy.symbols("x y")
    ue = sympy.Add(*[sympy.Rational(c) * x**i * y**j for (i, j), c in u.items()])
    we = sympy.Add(*[sympy.Rational(c) * x**i * y**j for (i, j), c in w.items()])
    main = y if eliminate == "y" else x
    keep = x if eliminate == "y" else y
    res = sympy.Poly(ue, main).resultant(sympy.Poly(we, main))
    pres = sympy.Poly(res, keep)
    coeffs = [Fraction(sympy.Rational(c)) for c in reversed(pres.all_coeffs())]
    return up.normalize(coeffs)


@dataclass(frozen=True)
class ComplexRootBox:
    """Isolating box of one nonreal root: coordinate-wise real algebraic
    numbers for the real and imaginary parts."""

    xr: RealRoot
    yr: RealRoot

    @property
    def box(self):
        return (self.xr.interval, self.yr.interval)

    def refined(self):
        return ComplexRootBox(self.xr.refined(), self.yr.refined())

    def refined_below(self, width):
        return ComplexRootBox(self.xr.refined_below(width),
                              self.yr.refined_below(width))


def isolate_nonreal_roots(f, n_nonreal):
    """Isolating boxes for the n_nonreal nonreal roots of a squarefree f,
    sorted by (real part, imaginary part).  Returns a list of
    (ComplexRootBox, conjugate_position) pairs."""
    if n_nonreal == 0:
        return []
    u, w = _complex_parts(f)
    rx = _resultant_projection(u, w, "y")
    ry = _resultant_projection(u, w, "x")
    xroots = isolate_real_roots(rx)
    yroots = []
    for r in isolate_real_roots(ry):
        if r.exact and r.lo == 0:
            continue
        while r.lo <= 0 <= r.hi:
            r = r.refined()
        yroots.append(r)

    candidates = [(i, j) for i in range(len(xroots)) for j in range(len(yroots))]
    while True:
        keep = []
        for i, j in candidates:
            val = poly_eval_box(f, (xroots[i].interval, yroots[j].interval))
            if val[0][0] <= 0 <= val[0][1] and val[1][0] <= 0 <= val[1][1]:
                keep.append((i, j))
        candidates = keep
        if len(candidates) == n_nonreal:
            break
        if len(candidates) < n_nonreal:
            raise InternalError("lost a nonreal root during isolation")
        xroots = [r.refined() for r in xroots]
        yroots = [r.refined() for r in yroots]

    candidates.sort()
    # roots with the same real part come in conjugate pairs; negation
    # reverses the imaginary-part order, so the j-th smallest pairs with
    # the j-th largest
    conj = {}
    by_x = {}
    for pos, (i, j) in enumerate(candidates):
        by_x.setdefault(i, []).append(pos)
    for positions in by_x.values():
        for a, b in zip(positions, reversed(positions)):
            conj[a] = b
    return [(ComplexRootBox(xroots[i], yroots[j]), conj[pos])
            for pos, (i, j) in enumerate(candidates)]

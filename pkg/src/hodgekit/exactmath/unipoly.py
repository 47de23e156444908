"""Univariate polynomial helpers.

Polynomials are tuples of coefficients, constant term first, with no
trailing zeros (the zero polynomial is the empty tuple).  The arithmetic
routines are generic over any exact field scalar (Fraction or a
FieldElement); Sturm sequences and root counting are Fraction-only.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def normalize(coeffs):
    coeffs = list(coeffs)
    while coeffs and _is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def _is_zero(c):
    return c == 0


def degree(p):
    """Degree, or -1 for the zero polynomial."""
    return len(p) - 1


def constant(c):
    return normalize((c,))


def add(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else 0
        b = q[i] if i < len(q) else 0
        out.append(a + b)
    return normalize(out)


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    if not p or not q:
        return ()
    out = [p[0] * q[0] * 0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if _is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return normalize(out)


def scale(p, c):
    if _is_zero(c):
        return ()
    return normalize(tuple(a * c for a in p))


def shift(p, k):
    """Multiply by x**k."""
    if not p:
        return ()
    return (ZERO,) * k + tuple(p)


def divmod_poly(a, b):
    """Euclidean division over a field; returns (quotient, remainder)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = []
    r = list(a)
    db = degree(b)
    lead = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1] / lead
        k = len(r) - 1 - db
        q.append((k, c))
        for i in range(db + 1):
            r[k + i] = r[k + i] - c * b[i]
        del r[-1]
        while r and _is_zero(r[-1]):
            r.pop()
    qc = [lead * 0] * (max(k for k, _ in q) + 1) if q else []
    for k, c in q:
        qc[k] = c
    return normalize(qc), normalize(r)


def pseudo_rem(a, b):
    q, r = divmod_poly(a, b)
    return r


def monic(p):
    if not p:
        return ()
    return tuple(c / p[-1] for c in p)


def gcd(a, b):
    """Monic gcd over a field."""
    a, b = normalize(a), normalize(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return ()
    return monic(a)


def derivative(p):
    return normalize(tuple(p[i] * i for i in range(1, len(p))))


def eval_at(p, x):
    acc = None
    for c in reversed(p):
        acc = c if acc is None else acc * x + c
    if acc is None:
        return x * 0
    return acc


def compose(p, q):
    """p(q(x))."""
    acc = ()
    for c in reversed(p):
        acc = add(mul(acc, q), constant(c))
    return acc


def is_squarefree(p):
    return degree(gcd(p, derivative(p))) <= 0


def squarefree_part(p):
    g = gcd(p, derivative(p))
    if degree(g) <= 0:
        return monic(p)
    return monic(divmod_poly(p, g)[0])


# Sturm machinery (Fraction coefficients only).

def sturm_chain(p):
    chain = [normalize(p), derivative(p)]
    while chain[-1]:
        r = divmod_poly(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append(neg(r))
    return [c for c in chain if c]


def _sign_changes(values):
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def sturm_count(chain, a, b):
    """Number of distinct real roots in the half-open interval (a, b]."""
    va = _sign_changes([eval_at(c, a) for c in chain])
    vb = _sign_changes([eval_at(c, b) for c in chain])
    return va - vb


def root_bound(p):
    """Cauchy bound: all complex roots lie in |z| < bound."""
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) if len(p) > 1 else ZERO
    return ONE + m / lead


def resultant(p, q):
    """Resultant of two Fraction polynomials, via sympy."""
    import sympy

    x = sympy.Symbol("x")
    sp = sympy.Poly([sympy.Rational(c) for c in reversed(p)], x, domain="QQ")
    sq = sympy.Poly([sympy.Rational(c) for c in reversed(q)], x, domain="QQ")
    return Fraction(sympy.Rational(sp.resultant(sq)))


def factor_rational(p):
    """Irreducible factorization over Q via sympy.

    Returns (constant, [(factor, multiplicity), ...]) with monic factors
    sorted by (degree, coefficients) for determinism.
    """
    import sympy

    x = sympy.Symbol("x")
    sp = sympy.Poly([sympy.Rational(c) for c in reversed(p)], x, domain="QQ")
    const, factors = sp.factor_list()
    out = []
    c = Fraction(sympy.Rational(const))
    for f, mult in factors:
        coeffs = [Fraction(sympy.Rational(a)) for a in reversed(f.all_coeffs())]
        lead = coeffs[-1]
        c *= lead**mult
        out.append((tuple(a / lead for a in coeffs), mult))
    out.sort(key=lambda fm: (degree(fm[0]), fm[0]))
    return c, out

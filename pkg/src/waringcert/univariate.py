"""Dense univariate polynomials over Q, and binary forms through them.

A polynomial is a list of Fractions, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).  A binary form ``f(s, t)`` of degree
``d`` is handled as ``f(s, 1)`` plus the multiplicity of its root at
infinity ``(1 : 0)``, i.e. the number of missing top coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .polyring import Form


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p) -> int:
    return len(p) - 1


def mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def divmod_poly(p, q):
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(p)]
    if len(r) < len(q):
        return [], r
    out = [Fraction(0)] * (len(r) - len(q) + 1)
    lead = q[-1]
    while len(r) >= len(q) and r:
        k = len(r) - len(q)
        c = r[-1] / lead
        out[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        r = trim(r)
    return trim(out), r


def monic(p):
    p = trim(p)
    if not p:
        return p
    return [c / p[-1] for c in p]


def poly_gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def squarefree_part(p):
    p = trim(p)
    if len(p) <= 1:
        return monic(p)
    g = poly_gcd(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


def is_squarefree(p) -> bool:
    return deg(poly_gcd(p, derivative(p))) <= 0


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    for i in range(1, isqrt(n) + 1):
        if n % i == 0:
            out.add(i)
            out.add(n // i)
    return sorted(out)


def rational_roots(p) -> list[Fraction]:
    """Distinct rational roots by the rational root theorem."""
    p = trim(p)
    if len(p) <= 1:
        return []
    roots = []
    if p[0] == 0:
        roots.append(Fraction(0))
        while p and p[0] == 0:
            p = p[1:]
    if len(p) <= 1:
        return roots
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            for x in (Fraction(a, b), Fraction(-a, b)):
                if x not in roots and evaluate(p, x) == 0:
                    roots.append(x)
    return sorted(roots)


# ----------------------------------------------------------------------------
# binary forms

def dehomogenize(f: Form) -> tuple[list, int]:
    """``(f(s, 1), m)`` with m the multiplicity of the root (1 : 0)."""
    if f.nvars != 2:
        raise ValueError("expected a binary form")
    p = [Fraction(0)] * (f.degree + 1)
    for (a, b), c in f.items():
        p[a] = c
    p = trim(p)
    return p, f.degree - deg(p) if p else f.degree


def binary_squarefree(f: Form) -> bool:
    """True iff f has no repeated linear factor over C."""
    if f.is_zero():
        raise ValueError("zero form")
    p, m = dehomogenize(f)
    return m <= 1 and is_squarefree(p)


def binary_divides(a: Form, b: Form) -> bool:
    """True iff the binary form a divides b."""
    if b.is_zero():
        return True
    pa, ma = dehomogenize(a)
    pb, mb = dehomogenize(b)
    return ma <= mb and not divmod_poly(pb, pa)[1]


def binary_radical(f: Form) -> Form:
    """Product of the distinct linear factors of f, as a binary form."""
    p, m = dehomogenize(f)
    r = squarefree_part(p)
    d = deg(r) + (1 if m else 0)
    return Form(2, d, {(i, d - i): c for i, c in enumerate(r) if c})


def binary_gcd(forms) -> Form:
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        raise ValueError("gcd of zero forms")
    p, m = dehomogenize(forms[0])
    for f in forms[1:]:
        q, mq = dehomogenize(f)
        p = poly_gcd(p, q)
        m = min(m, mq)
    p = monic(p)
    d = deg(p) + m
    return Form(2, d, {(i, d - i): c for i, c in enumerate(p) if c})


def binary_rational_roots(f: Form) -> list[tuple[Fraction, Fraction]]:
    """Rational points (s : t) where f vanishes, as coordinate pairs."""
    p, m = dehomogenize(f)
    pts = [(r, Fraction(1)) for r in rational_roots(p)]
    if m:
        pts.append((Fraction(1), Fraction(0)))
    return pts

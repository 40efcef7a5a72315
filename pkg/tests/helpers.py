"""Shared strategies and independent sympy oracles for the test suite."""
import random
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from waringcert.polyring import Form, dim_forms, monomial_basis

SYMS = sympy.symbols("x0:6")


def to_sympy(f: Form):
    xs = SYMS[:f.nvars]
    expr = sympy.Integer(0)
    for e, c in f.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for x, k in zip(xs, e):
            term *= x ** k
        expr += term
    return sympy.expand(expr)


def from_sympy(expr, nvars: int, degree: int) -> Form:
    xs = SYMS[:nvars]
    poly = sympy.Poly(sympy.expand(expr), *xs)
    coeffs = {}
    for e, c in poly.terms():
        if c == 0:
            continue
        coeffs[tuple(e)] = Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
    return Form(nvars, degree, coeffs)


def sympy_apply(theta: Form, f: Form) -> Form:
    """Differentiate with sympy: each dual monomial acts as a partial derivative."""
    xs = SYMS[:f.nvars]
    target = to_sympy(f)
    total = sympy.Integer(0)
    for e, c in theta.items():
        term = target
        for x, k in zip(xs, e):
            if k:
                term = sympy.diff(term, x, k)
        total += sympy.Rational(c.numerator, c.denominator) * term
    return from_sympy(total, f.nvars, max(f.degree - theta.degree, 0))


def random_form(rng: random.Random, nvars: int, degree: int, lo=-3, hi=3, density=1.0) -> Form:
    while True:
        vec = [rng.randint(lo, hi) if rng.random() < density else 0
               for _ in range(dim_forms(nvars, degree))]
        f = Form.from_vector(nvars, degree, vec)
        if f:
            return f


@st.composite
def forms(draw, nvars=st.integers(1, 3), degree=st.integers(0, 5), coeff=st.integers(-4, 4)):
    n = draw(nvars)
    d = draw(degree)
    basis = monomial_basis(n, d)
    vec = draw(st.lists(coeff, min_size=len(basis), max_size=len(basis)))
    return Form.from_vector(n, d, vec)

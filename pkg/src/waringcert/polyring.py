"""Homogeneous forms over Q and the apolarity (differentiation) action.

One class, :class:`Form`, represents elements of both ``S = Q[x_1..x_n]``
and the dual ring ``T = Q[a_1..a_n]``; a dual monomial ``a^e`` acts on
``x^m`` as the partial derivative ``d^e/dx^e``, so for example
``a^2 b^3`` applied to ``x^4 y^5`` gives ``240 x^2 y^3``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, gcd, lcm, prod
from typing import Iterable, Mapping, Sequence

PRIMAL_NAMES = ("x", "y", "z", "w")
DUAL_NAMES = ("a", "b", "c", "d")


class FormError(ValueError):
    """Malformed or inhomogeneous polynomial input."""


class Form:
    """A homogeneous polynomial with exact rational coefficients.

    ``coeffs`` maps exponent tuples (length ``nvars``, summing to ``degree``)
    to nonzero Fractions.  The zero form is an empty map with an explicit
    degree.
    """

    __slots__ = ("nvars", "degree", "_coeffs", "_hash")

    def __init__(self, nvars: int, degree: int, coeffs: Mapping | None = None) -> None:
        if nvars < 1:
            raise FormError("need at least one variable")
        if degree < 0:
            raise FormError("negative degree")
        clean = {}
        for e, c in (coeffs or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise FormError(f"bad exponent vector {e} for {nvars} variables")
            if sum(e) != degree:
                raise FormError(f"monomial {e} is not of degree {degree}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.nvars = nvars
        self.degree = degree
        self._coeffs = clean
        self._hash = None

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._coeffs.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        if not self._coeffs and not other._coeffs:
            return True
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            key = frozenset(self._coeffs.items())
            self._hash = hash((self.nvars, self.degree if key else -1, key))
        return self._hash

    def _check(self, other: "Form") -> None:
        if self.nvars != other.nvars:
            raise FormError("forms live in different numbers of variables")

    def __add__(self, other: "Form") -> "Form":
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise FormError("cannot add forms of different degrees")
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return Form(self.nvars, self.degree, out)

    def __neg__(self) -> "Form":
        return Form(self.nvars, self.degree, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __mul__(self, other) -> "Form":
        if isinstance(other, Form):
            self._check(other)
            out: dict = {}
            for e1, c1 in self._coeffs.items():
                for e2, c2 in other._coeffs.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, 0) + c1 * c2
            return Form(self.nvars, self.degree + other.degree, out)
        c = Fraction(other)
        return Form(self.nvars, self.degree, {e: c * v for e, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Form":
        out = Form.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    @classmethod
    def one(cls, nvars: int) -> "Form":
        return cls(nvars, 0, {(0,) * nvars: 1})

    @classmethod
    def zero(cls, nvars: int, degree: int = 0) -> "Form":
        return cls(nvars, degree, {})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Form":
        exps = tuple(exps)
        return cls(len(exps), sum(exps), {exps: coeff})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Form":
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    def vector(self, basis: Sequence[tuple] | None = None) -> list[Fraction]:
        """Coefficients listed along ``basis`` (default: the graded-lex basis)."""
        if basis is None:
            basis = monomial_basis(self.nvars, self.degree)
        return [self.coefficient(e) for e in basis]

    @classmethod
    def from_vector(cls, nvars: int, degree: int, vec: Sequence) -> "Form":
        basis = monomial_basis(nvars, degree)
        if len(vec) != len(basis):
            raise FormError("coefficient vector has the wrong length")
        return cls(nvars, degree, dict(zip(basis, vec)))

    def evaluate(self, point: Sequence):
        """Value at ``point``; works for Fractions, ints, floats or complex."""
        total = 0
        for e, c in self._coeffs.items():
            term = c
            for p, k in zip(point, e):
                if k:
                    term = term * p ** k
            total = total + term
        return total

    def variables_used(self) -> set[int]:
        return {i for e in self._coeffs for i, k in enumerate(e) if k}

    def normalized(self) -> "Form":
        """Integer coprime coefficients with a positive leading coefficient."""
        if self.is_zero():
            return self
        basis = [e for e in monomial_basis(self.nvars, self.degree) if e in self._coeffs]
        den = lcm(*(c.denominator for c in self._coeffs.values()))
        nums = [int(c * den) for c in self._coeffs.values()]
        g = 0
        for x in nums:
            g = gcd(g, x)
        scale = Fraction(den, g)
        if self._coeffs[basis[0]] < 0:
            scale = -scale
        return self * scale

    def to_string(self, dual: bool = False) -> str:
        return format_form(self, dual=dual)

    def __str__(self) -> str:
        return format_form(self)

    def __repr__(self) -> str:
        return f"Form({self.nvars}, {self.degree}, {format_form(self)!r})"


class LinearForm:
    """Coefficient vector of a linear form; the point of a power ``l^d``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable) -> None:
        coeffs = tuple(coeffs)
        if coeffs and not isinstance(coeffs[0], (float, complex)):
            coeffs = tuple(Fraction(c) for c in coeffs)
        self.coeffs = coeffs

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_form(self) -> Form:
        n = len(self.coeffs)
        return Form(n, 1, {tuple(int(i == j) for j in range(n)): c
                           for i, c in enumerate(self.coeffs)})

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"LinearForm({[str(c) for c in self.coeffs]})"


def proportional(u: Sequence, v: Sequence) -> bool:
    """True iff the vectors are linearly dependent."""
    return all(u[i] * v[j] == u[j] * v[i] for i, j in combinations(range(len(u)), 2))


@lru_cache(maxsize=None)
def _basis(nvars: int, degree: int) -> tuple:
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in _basis(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


def monomial_basis(nvars: int, degree: int) -> list[tuple]:
    """Exponent vectors of degree ``degree`` in graded-lexicographic order.

    >>> monomial_basis(2, 2)
    [(2, 0), (1, 1), (0, 2)]
    """
    if degree < 0:
        return []
    return list(_basis(nvars, degree))


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict:
    return {e: i for i, e in enumerate(_basis(nvars, degree))}


def dim_forms(nvars: int, degree: int) -> int:
    """dim of the space of degree-``degree`` forms in ``nvars`` variables."""
    if degree < 0:
        return 0
    return comb(nvars + degree - 1, nvars - 1)


def falling(m: int, e: int) -> int:
    """m (m-1) ... (m-e+1): the constant from differentiating x^m e times."""
    return factorial(m) // factorial(m - e)


def apply(theta: Form, f: Form) -> Form:
    """The apolarity action ``theta o f`` by partial differentiation.

    If ``theta`` has larger degree than ``f`` the result is the zero form of
    degree 0.
    """
    if theta.nvars != f.nvars:
        raise FormError("theta and f have different numbers of variables")
    if theta.degree > f.degree:
        return Form.zero(f.nvars, 0)
    out: dict = {}
    for e, c in theta.items():
        for m, v in f.items():
            if all(mi >= ei for mi, ei in zip(m, e)):
                k = tuple(mi - ei for mi, ei in zip(m, e))
                out[k] = out.get(k, 0) + c * v * prod(falling(mi, ei) for mi, ei in zip(m, e))
    return Form(f.nvars, f.degree - theta.degree, out)


def power_sum(terms: Sequence[tuple], d: int, nvars: int | None = None) -> Form:
    """Exact expansion of ``sum(c * l**d)`` for ``(c, l)`` in ``terms``.

    ``l`` may be a :class:`LinearForm`, a degree-1 :class:`Form` or a plain
    coefficient sequence.
    """
    if not terms:
        if nvars is None:
            raise FormError("empty power sum needs nvars")
        return Form.zero(nvars, d)
    total = None
    for c, l in terms:
        if isinstance(l, Form):
            lf = l
        else:
            lf = (l if isinstance(l, LinearForm) else LinearForm(l)).to_form()
        piece = (lf ** d) * Fraction(c)
        total = piece if total is None else total + piece
    if nvars is not None and total.nvars != nvars:
        raise FormError("nvars does not match the linear forms")
    return total if total else Form.zero(total.nvars, d)


def linear_power_coefficients(t: Sequence, d: int) -> list:
    """Coefficients of ``(t . x)^d`` along the graded-lex basis (multinomials)."""
    n = len(t)
    out = []
    for e in monomial_basis(n, d):
        mult = factorial(d)
        term = 1
        for ti, ei in zip(t, e):
            mult //= factorial(ei)
            if ei:
                term = term * ti ** ei
        out.append(mult * term)
    return out


# ----------------------------------------------------------------------------
# parsing and printing

def variable_names(nvars: int, dual: bool = False) -> list[str]:
    short = DUAL_NAMES if dual else PRIMAL_NAMES
    if nvars <= len(short):
        return list(short[:nvars])
    stem = "a" if dual else "x"
    return [f"{stem}{i}" for i in range(nvars)]


_NUMBER = re.compile(r"^\(?([0-9]+)(?:/([0-9]+))?\)?$")
_FACTOR = re.compile(r"^([A-Za-z][0-9]*)(?:\^([0-9]+))?$")


def _lookup(nvars: int) -> dict:
    table = {}
    for dual in (False, True):
        for i, name in enumerate(variable_names(nvars, dual)):
            table[name] = i
        stem = "a" if dual else "x"
        for i in range(nvars):
            table.setdefault(f"{stem}{i}", i)
    return table


def _split_terms(text: str) -> list[tuple[int, str]]:
    terms = []
    sign = 1
    buf = ""
    for ch in text:
        if ch in "+-":
            if buf:
                terms.append((sign, buf))
                buf = ""
                sign = 1
            if ch == "-":
                sign = -sign
            continue
        buf += ch
    if not buf:
        raise FormError("dangling sign at end of input")
    terms.append((sign, buf))
    return terms


def parse_form(text: str, nvars: int, degree: int | None = None,
               names: Sequence[str] | None = None) -> Form:
    """Parse text such as ``"x*y*z^3 + y^4*z"`` or ``"1/5*z^5 - 2*y^2*z^3"``.

    Variables are ``x, y, z, w`` (or ``x0 .. x{n-1}``); dual variables
    ``a, b, c, d`` (or ``a0 ..``) map to the same positions.  ``degree`` is
    required for the zero form and checked otherwise.  ``names`` overrides the
    variable names, e.g. ``("y", "z")`` for a binary form written in y and z.
    """
    if names is not None:
        if len(names) != nvars:
            raise FormError("need one name per variable")
        names = {nm: i for i, nm in enumerate(names)}
    else:
        names = _lookup(nvars)
    src = "".join(text.split())
    if not src:
        raise FormError("empty input")
    coeffs: dict = {}
    deg_seen = None
    for sign, term in _split_terms(src):
        c = Fraction(sign)
        e = [0] * nvars
        for factor in term.split("*"):
            if not factor:
                raise FormError(f"empty factor in term {term!r}")
            num = _NUMBER.match(factor)
            if num:
                p, q = num.group(1), num.group(2)
                if q is not None and int(q) == 0:
                    raise FormError("zero denominator")
                c *= Fraction(int(p), int(q) if q else 1)
                continue
            var = _FACTOR.match(factor)
            if not var:
                raise FormError(f"cannot parse factor {factor!r}")
            name, exp = var.group(1), var.group(2)
            if name not in names:
                raise FormError(f"unknown variable {name!r} for {nvars} variables")
            e[names[name]] += int(exp) if exp is not None else 1
        tdeg = sum(e)
        if c == 0:
            continue
        if deg_seen is None:
            deg_seen = tdeg
        elif tdeg != deg_seen:
            raise FormError(f"inhomogeneous input: degrees {deg_seen} and {tdeg}")
        coeffs[tuple(e)] = coeffs.get(tuple(e), 0) + c
    if deg_seen is None:
        if degree is None:
            raise FormError("the zero form needs an explicit degree")
        return Form.zero(nvars, degree)
    if degree is not None and degree != deg_seen:
        raise FormError(f"declared degree {degree} but input has degree {deg_seen}")
    return Form(nvars, deg_seen, coeffs)


def format_form(f: Form, dual: bool = False) -> str:
    if f.is_zero():
        return "0"
    names = variable_names(f.nvars, dual)
    parts = []
    for e in monomial_basis(f.nvars, f.degree):
        c = f.coefficient(e)
        if not c:
            continue
        factors = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out


def substitute_zero(f: Form, index: int) -> Form:
    """``f`` with variable ``index`` set to zero."""
    return Form(f.nvars, f.degree, {e: c for e, c in f.items() if e[index] == 0})


def embed(f: Form, positions: Sequence[int], nvars: int) -> Form:
    """Re-home ``f`` inside ``nvars`` variables, variable i going to positions[i]."""
    out = {}
    for e, c in f.items():
        big = [0] * nvars
        for i, k in zip(positions, e):
            big[i] = k
        out[tuple(big)] = c
    return Form(nvars, f.degree, out)


def restrict(f: Form, positions: Sequence[int]) -> Form:
    """Inverse of :func:`embed`; ``f`` must only involve ``positions``."""
    used = f.variables_used()
    if not used <= set(positions):
        raise FormError("form involves variables outside the requested subset")
    return Form(len(positions), f.degree,
                {tuple(e[i] for i in positions): c for e, c in f.items()})

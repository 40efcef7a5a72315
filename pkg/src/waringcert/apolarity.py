"""Catalecticants, Hilbert functions and the apolar ideal of a form.

Everything here is read off catalecticant matrices: row ``i`` of the
Hilbert function of ``A^F = T/F^perp`` is the rank of the map
``T_i -> S_{d-i}``, and the graded pieces of ``F^perp`` are its kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from . import qlinalg
from .polyring import Form, apply, dim_forms, falling, monomial_basis, monomial_index
from .qlinalg import QMatrix


class HilbertFunction(tuple):
    """Values h_0..h_d of the Hilbert function of an apolar algebra."""

    @property
    def length(self) -> int:
        return sum(self)

    def is_symmetric(self) -> bool:
        return tuple(self) == tuple(reversed(self))


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[list[Fraction]]:
        mons = monomial_basis(self.basis[0].nvars, self.degree) if self.basis else []
        return [b.vector(mons) for b in self.basis]


def catalecticant(f: Form, i: int) -> QMatrix:
    """Matrix of ``T_i -> S_{d-i}``, ``theta -> theta o f``.

    Rows follow ``monomial_basis(n, i)``, columns ``monomial_basis(n, d - i)``.
    For ``i > d`` the matrix has no columns.
    """
    n, d = f.nvars, f.degree
    rows = monomial_basis(n, i)
    if i > d:
        return QMatrix(len(rows), 0, [])
    cols = monomial_index(n, d - i)
    ncols = len(cols)
    data = [[0] * ncols for _ in rows]
    for r, e in enumerate(rows):
        row = data[r]
        for m, c in f.items():
            if all(mi >= ei for mi, ei in zip(m, e)):
                k = tuple(mi - ei for mi, ei in zip(m, e))
                row[cols[k]] += c * prod(falling(mi, ei) for mi, ei in zip(m, e))
    return QMatrix.from_rows(data, ncols)


def hilbert_function(f: Form) -> HilbertFunction:
    if f.is_zero():
        raise ValueError("the zero form has no apolar algebra")
    return HilbertFunction(qlinalg.rank(catalecticant(f, i)) for i in range(f.degree + 1))


def apolar_length(f: Form) -> int:
    """dim Diff(f); zero for the zero form."""
    if f.is_zero():
        return 0
    return hilbert_function(f).length


def _echelon_forms(vectors, nvars: int, degree: int) -> tuple:
    if not vectors:
        return ()
    reduced = qlinalg.row_space_basis(vectors)
    return tuple(Form.from_vector(nvars, degree, v) for v in reduced)


def apolar_graded_piece(f: Form, i: int) -> GradedPiece:
    """Basis of ``(f^perp)_i`` in reduced echelon form over the monomial basis."""
    n = f.nvars
    if f.is_zero() or i > f.degree:
        return GradedPiece(i, tuple(Form.monomial(e) for e in monomial_basis(n, i)))
    ker = qlinalg.kernel_basis(catalecticant(f, i).transpose())
    return GradedPiece(i, _echelon_forms(ker, n, i))


def multiply_by_variables(vectors, nvars: int, degree: int) -> list[list[Fraction]]:
    """Vectors of ``x_j * v`` in degree+1 for every variable and every ``v``."""
    src = monomial_basis(nvars, degree)
    dst = monomial_index(nvars, degree + 1)
    out = []
    for v in vectors:
        for j in range(nvars):
            w = [Fraction(0)] * len(dst)
            for e, c in zip(src, v):
                if c:
                    up = list(e)
                    up[j] += 1
                    w[dst[tuple(up)]] = c
            out.append(w)
    return out


def minimal_generators(f: Form, up_to: int | None = None) -> list[tuple[int, Form]]:
    """Minimal generators of ``f^perp`` in degrees ``1..up_to``.

    In each degree the generators are the echelon basis elements of
    ``(f^perp)_i`` not in the span of ``T_1 (f^perp)_{i-1}`` together with
    the earlier ones.  ``up_to`` defaults to ``d + 1``, which is enough
    because ``f^perp`` contains all of ``T_{d+1}``.
    """
    n, d = f.nvars, f.degree
    if up_to is None:
        up_to = d + 1
    gens = []
    prev = []
    for i in range(1, up_to + 1):
        piece = apolar_graded_piece(f, i)
        cur = piece.vectors()
        if not cur:
            prev = cur
            continue
        products = multiply_by_variables(prev, n, i - 1)
        cols = products + cur
        # pivot columns of [products | candidates] pick the candidates that are new
        _, _, pivots = qlinalg.rref(QMatrix.from_rows(cols).transpose())
        start = len(products)
        for p in pivots:
            if p >= start:
                gens.append((i, piece.basis[p - start]))
        prev = cur
    return gens


def colon_piece(f: Form, theta: Form, i: int) -> GradedPiece:
    """``((theta o f)^perp)_i``, which equals ``(f^perp : theta)_i``."""
    if theta.is_zero():
        raise ValueError("theta must be nonzero")
    if theta.degree > f.degree:
        raise ValueError("theta has larger degree than f")
    return apolar_graded_piece(apply(theta, f), i)


def quotient_length(f: Form, theta: Form) -> int:
    """length of ``T/(f^perp + theta)`` = al(f) - al(theta o f)."""
    if theta.is_zero():
        raise ValueError("theta must be nonzero")
    g = apply(theta, f) if theta.degree <= f.degree else Form.zero(f.nvars)
    return apolar_length(f) - apolar_length(g)


def apolar_piece_dims(f: Form) -> list[int]:
    """dim (f^perp)_i for i = 0..d, i.e. dim T_i - h_i."""
    return [dim_forms(f.nvars, i) - h for i, h in enumerate(hilbert_function(f))]


def differentiation_matrix(theta: Form, a: int) -> QMatrix:
    """Matrix of ``S_{a+b} -> S_a``, ``f -> theta o f``, for theta of degree b.

    Rows follow the monomials of degree a + b.
    """
    n = theta.nvars
    rows = [apply(theta, Form.monomial(e)).vector(monomial_basis(n, a))
            for e in monomial_basis(n, a + theta.degree)]
    return QMatrix.from_rows(rows, dim_forms(n, a))

"""Exact linear algebra over the rationals.

Matrices are small and dense.  Every routine clears denominators row by row
and hands an integer matrix to the fraction-free elimination kernel in
:mod:`waringcert._kernel`, so no floating point is ever involved.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import _kernel


class DimensionError(ValueError):
    pass


class QMatrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        entries = tuple(Fraction(x) for x in entries)
        if len(entries) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
            flat.extend(r)
        return cls(len(rows), cols, flat)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def matvec(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise DimensionError("vector length does not match column count")
        return [sum((a * b for a, b in zip(self.row(i), v)), Fraction(0))
                for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, QMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in self.row(i)) + "]"
                         for i in range(self.rows))
        return f"QMatrix([{body}])"


def integer_row(row: Iterable) -> list[int]:
    """Scale a rational row to an integer row spanning the same line."""
    row = [Fraction(x) for x in row]
    den = lcm(*(x.denominator for x in row)) if row else 1
    return [int(x * den) for x in row]


def _integer_rows(m) -> tuple[list[list[int]], int]:
    if isinstance(m, QMatrix):
        return [integer_row(m.row(i)) for i in range(m.rows)], m.cols
    rows = [integer_row(r) for r in m]
    return rows, (len(rows[0]) if rows else 0)


def _echelon(m):
    rows, cols = _integer_rows(m)
    rank, pivots, ech, den = _kernel.gauss_jordan(rows, cols)
    return rank, pivots, ech, den, cols


def rref(m: QMatrix) -> tuple[int, QMatrix, list[int]]:
    """Reduced row-echelon form.

    Returns ``(rank, reduced, pivot_cols)``; ``reduced`` has the same shape as
    ``m`` with zero rows at the bottom.
    """
    rank, pivots, ech, den, cols = _echelon(m)
    flat = [Fraction(x, den) for row in ech for x in row]
    flat.extend([0] * ((m.rows - rank) * cols))
    return rank, QMatrix(m.rows, cols, flat), pivots


def rank(m) -> int:
    rows, cols = _integer_rows(m)
    return _kernel.gauss_jordan(rows, cols)[0]


def rank_mod_p(m, p: int = _kernel.PRIME) -> int:
    """Rank modulo a prime; a lower bound for the rational rank."""
    rows, cols = _integer_rows(m)
    return _kernel.rank_mod_p(rows, cols, p)


def kernel_basis(m: QMatrix) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column.

    The vector for free column ``f`` has a 1 in position ``f`` and zeros in
    every other free position.
    """
    rank, pivots, ech, den, cols = _echelon(m)
    pivset = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = Fraction(-ech[r][f], den)
        basis.append(v)
    return basis


def row_space_basis(m) -> list[list[Fraction]]:
    """Nonzero rows of the reduced row-echelon form."""
    rank, pivots, ech, den, cols = _echelon(m)
    return [[Fraction(x, den) for x in row] for row in ech]


def in_row_space(v: Sequence, m: QMatrix) -> bool:
    """True iff ``v`` is a rational combination of the rows of ``m``."""
    if len(v) != m.cols:
        raise DimensionError(f"vector of length {len(v)} against {m.cols} columns")
    if all(x == 0 for x in v):
        return True
    rows, cols = _integer_rows(m)
    r0 = _kernel.gauss_jordan(rows, cols)[0]
    rows.append(integer_row(v))
    return _kernel.gauss_jordan(rows, cols)[0] == r0


def solve_left(m: QMatrix, v: Sequence) -> list[Fraction] | None:
    """Coefficients ``x`` with ``sum(x[i] * row_i(m)) == v``, or None.

    The solution sets every free variable to zero.
    """
    if len(v) != m.cols:
        raise DimensionError(f"vector of length {len(v)} against {m.cols} columns")
    # columns of the transpose are rows of m; append v as the last column
    aug = [[m[i, j] for i in range(m.rows)] + [Fraction(v[j])] for j in range(m.cols)]
    rank, pivots, ech, den, cols = _echelon(aug)
    if pivots and pivots[-1] == m.rows:
        return None
    x = [Fraction(0)] * m.rows
    for r, pc in enumerate(pivots):
        x[pc] = Fraction(ech[r][m.rows], den)
    return x


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """True iff the two families of row vectors span the same subspace."""
    ra = rank(a) if a else 0
    rb = rank(b) if b else 0
    if ra != rb:
        return False
    if not a:
        return True
    return rank(list(a) + list(b)) == ra

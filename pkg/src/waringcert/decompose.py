"""Upper bounds on Waring rank.

Exact tools: checking an explicit power sum, the rank of a binary form from
its two apolar generators, and the complete-intersection rule (a rank-one
quadric among the lowest generators).  The numerical fitter only produces
evidence; its output is marked ``exact=False`` and never enters a
certificate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, prod

import numpy as np

from . import qlinalg, univariate
from .apolarity import apolar_length, minimal_generators
from .certificate import q
from .polyring import Form, LinearForm, monomial_basis, power_sum, proportional
from .qlinalg import QMatrix


class DecompositionError(ValueError):
    pass


@dataclass
class Decomposition:
    degree: int
    terms: list
    exact: bool = True

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def nvars(self) -> int:
        return self.terms[0][1].nvars if self.terms else 0

    def expand(self, nvars: int | None = None) -> Form:
        if not self.exact:
            raise DecompositionError("only exact decompositions expand to forms")
        return power_sum(self.terms, self.degree, nvars=nvars or self.nvars or None)

    def to_json(self) -> list:
        out = []
        for c, p in self.terms:
            if self.exact:
                out.append({"coef": q(c), "point": [q(x) for x in p.coeffs]})
            else:
                out.append({"coef": _num(c), "point": [_num(x) for x in p.coeffs]})
        return out

    @classmethod
    def from_json(cls, data: list, degree: int) -> "Decomposition":
        exact = all(isinstance(t["coef"], (str, int)) for t in data)
        terms = []
        for t in data:
            if exact:
                terms.append((Fraction(t["coef"]), LinearForm(Fraction(x) for x in t["point"])))
            else:
                terms.append((_unnum(t["coef"]), LinearForm(_unnum(x) for x in t["point"])))
        return cls(degree, terms, exact)


def _num(x):
    x = complex(x)
    return [x.real, x.imag] if x.imag else x.real


def _unnum(x):
    if isinstance(x, list):
        return complex(x[0], x[1])
    return complex(float(Fraction(x)) if isinstance(x, str) else x)


def verify_decomposition(f: Form, dec: Decomposition) -> bool:
    """Exact check that ``dec`` is a reduced power-sum expression of ``f``.

    A True answer certifies ``r(f) <= len(dec)``.
    """
    if not dec.exact:
        raise DecompositionError("numerical decompositions cannot be verified exactly")
    if dec.degree != f.degree:
        return False
    for (_, u), (_, v) in combinations(dec.terms, 2):
        if proportional(u.coeffs, v.coeffs):
            raise DecompositionError("proportional points: not a reduced witness")
    if any(p.nvars != f.nvars for _, p in dec.terms):
        return False
    return power_sum(dec.terms, dec.degree, nvars=f.nvars) == f


def four_cube_witness() -> Decomposition:
    """``24 xyz = (x+y+z)^3 - (x+y-z)^3 - (x-y+z)^3 + (x-y-z)^3``."""
    c = Fraction(1, 24)
    return Decomposition(3, [(c, LinearForm([1, 1, 1])), (-c, LinearForm([1, 1, -1])),
                             (-c, LinearForm([1, -1, 1])), (c, LinearForm([1, -1, -1]))])


def spanning_witness(f: Form, rng_seed=0) -> Decomposition:
    """An exact decomposition with at most ``dim S_d`` terms.

    Random integer points are drawn until their d-th powers span all forms
    of degree d; the coefficients then come from one exact solve.  This is
    the trivial upper bound, used as a sanity check on lower bounds.
    """
    n, d = f.nvars, f.degree
    rng = random.Random(rng_seed)
    target = len(monomial_basis(n, d))
    points, rows = [], []
    while len(points) < target:
        p = [rng.randint(-5, 5) for _ in range(n)]
        if not any(p) or any(proportional(p, q) for q in points):
            continue
        row = power_sum([(1, p)], d, nvars=n).vector()
        if qlinalg.rank(rows + [row]) > len(rows):
            points.append(p)
            rows.append(row)
    dec = _fit_points(f, points)
    assert dec is not None
    return dec


# ----------------------------------------------------------------------------
# binary forms

def squarefree_binary(f: Form) -> bool:
    """True iff the binary form has no repeated linear factor."""
    return univariate.binary_squarefree(f)


def _fit_points(f: Form, points: list) -> Decomposition | None:
    """Coefficients c with ``f = sum c_i p_i^d``, if they exist."""
    d = f.degree
    rows = [power_sum([(1, p)], d, nvars=f.nvars).vector() for p in points]
    x = qlinalg.solve_left(QMatrix.from_rows(rows, len(rows[0])), f.vector())
    if x is None:
        return None
    terms = [(c, LinearForm(p)) for c, p in zip(x, points) if c]
    return Decomposition(d, terms)


def _witness_from_dual(f: Form, phi: Form) -> Decomposition | None:
    # a root (s : t) of phi(a, b) is the point s x + t y
    roots = univariate.binary_rational_roots(phi)
    if len(roots) != phi.degree:
        return None
    dec = _fit_points(f, [list(r) for r in roots])
    if dec is None or len(dec) != phi.degree:
        return None
    return dec


def binary_rank(f: Form) -> tuple[int, Decomposition | None]:
    """Exact rank of a binary form, with a witness when one is rational.

    With apolar generators of degrees ``d1 <= d2``: the rank is ``d1`` when
    some degree-d1 element of ``f^perp`` is squarefree and ``d2`` otherwise.
    """
    if f.nvars != 2:
        raise ValueError("binary_rank needs a form in two variables")
    if f.is_zero():
        return 0, Decomposition(f.degree, [])
    d = f.degree
    if d == 0:
        return 1, None
    gens = minimal_generators(f)
    if len(gens) != 2:
        raise AssertionError(f"binary apolar ideal with {len(gens)} generators")
    (d1, p1), (d2, p2) = gens
    if d1 == d2:
        # the pencil has no base point, so its general member is squarefree
        phi = p1 if squarefree_binary(p1) else _squarefree_in_pencil(p1, p2)
        return d1, _witness_from_dual(f, phi) if phi is not None else None
    if squarefree_binary(p1):
        return d1, _witness_from_dual(f, p1)
    return d2, _search_witness(f, p1, p2, d2 - d1)


def _squarefree_in_pencil(p1: Form, p2: Form) -> Form | None:
    for c in range(1, 50):
        for phi in (p2 + p1 * c, p2 - p1 * c, p2):
            if squarefree_binary(phi):
                return phi
    return None


def _search_witness(f: Form, p1: Form, p2: Form, shift: int, tries: int = 200):
    """Look for a squarefree ``h p1 + c p2`` with rational roots; rarely exists."""
    rng = random.Random(0)
    for _ in range(tries):
        h = Form.from_vector(2, shift, [rng.randint(-3, 3) for _ in range(shift + 1)])
        phi = p2 + h * p1 if h else p2
        if squarefree_binary(phi):
            dec = _witness_from_dual(f, phi)
            if dec is not None:
                return dec
    return None


def binary_rank_bruteforce(f: Form, samples: int = 8, seed: int = 0) -> int:
    """Least r such that ``(f^perp)_r`` contains a squarefree form.

    Independent of the generator degrees: it scans r upward and tests
    random integer combinations of a basis of each graded piece.
    """
    from .apolarity import apolar_graded_piece
    if f.is_zero():
        return 0
    rng = random.Random(seed)
    for r in range(1, f.degree + 2):
        basis = apolar_graded_piece(f, r).basis
        if not basis:
            continue
        for _ in range(samples):
            phi = Form.zero(2, r)
            for b in basis:
                phi = phi + b * rng.randint(-1000, 1000)
            if phi and squarefree_binary(phi):
                return r
    raise AssertionError("no squarefree element found")


# ----------------------------------------------------------------------------
# complete intersections

def _quadric_matrix(phi: Form) -> list[list[Fraction]]:
    n = phi.nvars
    m = [[Fraction(0)] * n for _ in range(n)]
    for e, c in phi.items():
        idx = [i for i, x in enumerate(e) for _ in range(x)]
        i, j = idx
        if i == j:
            m[i][i] += c
        else:
            m[i][j] += c / 2
            m[j][i] += c / 2
    return m


def is_square_of_linear(phi: Form) -> bool:
    """A quadric is ``l^2`` iff its symmetric matrix has rank one."""
    if phi.degree != 2 or phi.is_zero():
        return False
    return qlinalg.rank(_quadric_matrix(phi)) == 1


def _pencil_square(p1: Form, p2: Form) -> Form | None:
    """A rank-one member of the pencil spanned by two quadrics, if rational."""
    if is_square_of_linear(p1):
        return p1
    m1, m2 = _quadric_matrix(p1), _quadric_matrix(p2)
    pairs = list(combinations(range(p1.nvars), 2))
    # every 2x2 minor of m2 + lam m1 is a quadratic in lam; collect their gcd
    common = None
    for (i, j), (k, l) in ((u, v) for u in pairs for v in pairs):
        ab = univariate.mul([m2[i][k], m1[i][k]], [m2[j][l], m1[j][l]])
        cd = univariate.mul([m2[i][l], m1[i][l]], [m2[j][k], m1[j][k]])
        size = max(len(ab), len(cd))
        ab = ab + [Fraction(0)] * (size - len(ab))
        cd = cd + [Fraction(0)] * (size - len(cd))
        minor = univariate.trim([x - y for x, y in zip(ab, cd)])
        if minor:
            common = minor if common is None else univariate.poly_gcd(common, minor)
    if common is None:
        return p2 if is_square_of_linear(p2) else None
    for lam in univariate.rational_roots(common):
        cand = p2 + p1 * lam
        if is_square_of_linear(cand):
            return cand
    return None


def ci_rank(f: Form) -> tuple[int, tuple] | None:
    """Rank of a complete-intersection form whose lowest generator is ``l^2``.

    When ``f^perp`` has n generators of degrees ``d1 <= ... <= dn`` with
    ``al(f) = d1 ... dn`` and a degree-2 generator is the square of a linear
    form, the rank is ``d2 ... dn``.  Otherwise returns None.  Squares are
    looked for among the generators and in rational members of pencils of
    two quadric generators only.
    """
    if f.is_zero() or f.degree < 1:
        return None
    gens = minimal_generators(f)
    if len(gens) != f.nvars:
        return None
    degs = tuple(sorted(g[0] for g in gens))
    if apolar_length(f) != prod(degs) or degs[0] != 2:
        return None
    quads = [g for dg, g in gens if dg == 2]
    found = any(is_square_of_linear(g) for g in quads)
    if not found:
        for a, b in combinations(quads, 2):
            if _pencil_square(a, b) is not None:
                found = True
                break
    if not found:
        return None
    return prod(degs[1:]), degs


# ----------------------------------------------------------------------------
# numerical fitting

def _power_matrix(f_basis, mult, L: np.ndarray) -> np.ndarray:
    """Columns: coefficient vectors of ``l_i^d`` for the rows l_i of L."""
    # V[m, i] = mult[m] * prod_j L[i, j] ** e[m, j]
    return mult[:, None] * np.prod(L[None, :, :] ** f_basis[:, None, :], axis=2)


def _jacobian_L(f_basis, mult, L: np.ndarray, c: np.ndarray) -> np.ndarray:
    nmon, r, n = f_basis.shape[0], L.shape[0], L.shape[1]
    J = np.zeros((nmon, r * n), dtype=complex)
    for j in range(n):
        e = f_basis.copy()
        ej = e[:, j].astype(float)
        e[:, j] = np.maximum(e[:, j] - 1, 0)
        col = mult[:, None] * ej[:, None] * np.prod(L[None, :, :] ** e[:, None, :], axis=2)
        J[:, j::n] = col * c[None, :]
    return J


def _residual(V, c, target):
    return float(np.linalg.norm(V @ c - target))


def _absorb(L: np.ndarray, c: np.ndarray, d: int) -> np.ndarray:
    """Move the coefficients into the points: ``c l^d = (c^(1/d) l)^d`` over C."""
    return L * (c.astype(complex) ** (1.0 / d))[:, None]


def _fit(target, basis, mult, L, iters: int, history: list | None = None):
    """Alternate a least-squares solve for the coefficients with damped
    Gauss-Newton steps on the points.

    The coefficients are folded into the points after each solve, so the
    point step works on ``sum l_i^d`` and takes the minimum-norm damped
    update.  Steps are only accepted when they lower the residual, so the
    recorded history is non-increasing.
    """
    r, n = L.shape
    d = int(basis[0].sum())
    ones = np.ones(r, dtype=complex)
    lam = 1e-3
    V = _power_matrix(basis, mult, L)
    c = np.linalg.lstsq(V, target, rcond=None)[0]
    res = _residual(V, c, target)
    if res <= _residual(V, ones, target):
        L = _absorb(L, c, d)
    else:
        res = _residual(V, ones, target)
    if history is not None:
        history.append(res)
    scale = max(float(np.linalg.norm(target)), 1e-300)
    eye = np.eye(len(target))
    for _ in range(iters):
        if res / scale < 1e-14:
            break
        V = _power_matrix(basis, mult, L)
        g = V @ ones - target
        J = _jacobian_L(basis, mult, L, ones)
        JJ = J @ J.conj().T
        accepted = False
        for _ in range(40):
            try:
                step = -J.conj().T @ np.linalg.solve(JJ + lam * eye, g)
            except np.linalg.LinAlgError:
                lam *= 10
                continue
            L_new = L + step.reshape(r, n)
            V_new = _power_matrix(basis, mult, L_new)
            r_new = _residual(V_new, ones, target)
            c_ls = np.linalg.lstsq(V_new, target, rcond=None)[0]
            r_ls = _residual(V_new, c_ls, target)
            if r_ls < r_new:
                absorbed = _absorb(L_new, c_ls, d)
                r_abs = _residual(_power_matrix(basis, mult, absorbed), ones, target)
                if r_abs < r_new:
                    L_new, r_new = absorbed, r_abs
            if r_new < res:
                L, res = L_new, r_new
                lam = max(lam / 5, 1e-15)
                accepted = True
                break
            lam *= 4
        if history is not None:
            history.append(res)
        if not accepted:
            break
    return L, ones, res


def numerical_decompose(f: Form, r: int, tol: float = 1e-8, rng_seed=0, restarts: int = 20,
                        iters: int = 400, history: list | None = None):
    """Best numerical fit of f by r complex d-th powers.

    Returns ``(relative_residual, Decomposition(exact=False))``.  Stops early
    once the residual is below ``tol``.  A small residual is evidence of
    ``r(f) <= r`` (or of border rank), never a proof.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if f.is_zero():
        raise ValueError("the zero form has rank 0")
    n, d = f.nvars, f.degree
    mons = monomial_basis(n, d)
    basis = np.array(mons, dtype=int)
    mult = np.array([factorial(d) / prod(factorial(x) for x in m) for m in mons], dtype=float)
    target = np.array([float(x) for x in f.vector()], dtype=complex)
    norm = float(np.linalg.norm(target))
    best = None
    for k in range(restarts):
        rng = np.random.default_rng([int(rng_seed), k])
        L = rng.standard_normal((r, n)) + 1j * rng.standard_normal((r, n))
        hist = [] if history is not None else None
        L, c, res = _fit(target, basis, mult, L, iters, hist)
        rel = res / norm
        if best is None or rel < best[0]:
            best = (rel, L, c)
            if history is not None:
                history[:] = hist
        if rel <= tol:
            break
    rel, L, c = best
    terms = [(complex(ci), LinearForm(complex(x) for x in row)) for ci, row in zip(c, L)]
    return rel, Decomposition(d, terms, exact=False)


def numerical_residual(f: Form, dec: Decomposition) -> float:
    """Relative coefficient residual of a (possibly numerical) decomposition."""
    n, d = f.nvars, f.degree
    mons = monomial_basis(n, d)
    basis = np.array(mons, dtype=int)
    mult = np.array([factorial(d) / prod(factorial(x) for x in m) for m in mons], dtype=float)
    L = np.array([[complex(x) for x in p.coeffs] for _, p in dec.terms])
    c = np.array([complex(x) for x, _ in dec.terms])
    target = np.array([float(x) for x in f.vector()], dtype=complex)
    return _residual(_power_matrix(basis, mult, L), c, target) / float(np.linalg.norm(target))

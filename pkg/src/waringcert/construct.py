"""Odd-degree forms ``F = x G + K`` with certified rank above algen(n-1, d-1).

The pipeline, for ``d = 2k + 1``:

1. ``G`` is a sum of ``s = C(n+k-2, k) - 1`` random ``(d-1)``-th powers in
   the variables other than ``x``, so its apolar algebra has Hilbert
   function ``H(n-1, d-1, s)`` and one new generator ``Psi`` in degree k.
2. ``K`` is chosen so that ``Psi o K`` is not a (k-1)-th derivative of ``G``.
3. The rule-out: for every linear ``l`` free of ``x``, ``Psi o (K - l^d)``
   must stay outside ``T_{k-1} o G``.  This is a polynomial condition on the
   coefficients ``t`` of ``l``; it is certified exactly by a radical
   membership identity ``g^N = sum a_j m_j`` (see :func:`ruleout_system`).

When every check passes, ``r(F) >= algen(n-1, d-1) + 1``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from . import qlinalg, univariate
from .apolarity import apolar_length, catalecticant, hilbert_function
from .bounds import algen, hseq_capped
from .certificate import BoundCertificate, form_json, q
from .polyring import (Form, LinearForm, apply, dim_forms, embed,
                       monomial_basis, monomial_index, parse_form, power_sum, restrict,
                       substitute_zero)
from .qlinalg import QMatrix


class GenericityError(ValueError):
    """A randomly drawn object is not general enough; resample."""


class PreconditionError(ValueError):
    pass


class ConstructionError(RuntimeError):
    pass


EXACT = "exact_nullstellensatz"
RANDOMIZED = "randomized"


# ----------------------------------------------------------------------------
# helpers on the "other" variables

def alpha_index(alpha: Form) -> int:
    """Index of the coordinate dual variable ``alpha``; rejects anything else."""
    if alpha.degree != 1 or len(alpha) != 1:
        raise PreconditionError("alpha must be a single dual coordinate variable")
    (e, c), = alpha.items()
    return e.index(1)


def other_positions(n: int, j: int) -> list[int]:
    return [i for i in range(n) if i != j]


def random_form(nvars: int, degree: int, rng: random.Random, lo: int = -9, hi: int = 9) -> Form:
    while True:
        f = Form.from_vector(nvars, degree,
                             [rng.randint(lo, hi) for _ in range(dim_forms(nvars, degree))])
        if f:
            return f


def random_linear(nvars: int, rng: random.Random, lo: int = -9, hi: int = 9) -> list[int]:
    while True:
        v = [rng.randint(lo, hi) for _ in range(nvars)]
        if any(v):
            return v


def random_power_sum(n: int, d: int, s: int, rng_seed=0, points: bool = False):
    """Sum of ``s`` d-th powers of random integer linear forms in n variables.

    With ``points=True`` also returns the list of linear forms.
    """
    rng = rng_seed if isinstance(rng_seed, random.Random) else random.Random(rng_seed)
    pts = [random_linear(n, rng) for _ in range(s)]
    g = power_sum([(1, p) for p in pts], d, nvars=n)
    return (g, pts) if points else g


def derivative_rows(g: Form, order: int) -> list[list[Fraction]]:
    """Rows spanning ``T_order o g`` in the monomial basis of degree d - order."""
    if order < 0:
        return []
    return catalecticant(g, order).to_rows()


def annihilator(rows: list, width: int) -> list[list[Fraction]]:
    """Rows of a matrix whose kernel is exactly the span of ``rows``."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(width)] for i in range(width)]
    return qlinalg.kernel_basis(QMatrix.from_rows(rows, width))


def _integerize(rows):
    return [[Fraction(x) for x in qlinalg.integer_row(r)] for r in rows]


def find_psi(G: Form, k: int, skip: int | None = None) -> Form:
    """The degree-k element of ``G^perp`` free of the skipped dual variable.

    ``G`` must not involve variable ``skip``; the kernel of its degree-k
    catalecticant in the remaining variables must be one-dimensional.  The
    result is normalised to coprime integers with positive leading term and
    lives in the same ring as ``G``.
    """
    n = G.nvars
    pos = other_positions(n, skip) if skip is not None else list(range(n))
    g = restrict(G, pos)
    ker = qlinalg.kernel_basis(catalecticant(g, k).transpose())
    if len(ker) != 1:
        raise GenericityError(f"(G^perp)_{k} has dimension {len(ker)}, expected 1")
    psi = Form.from_vector(len(pos), k, ker[0]).normalized()
    return embed(psi, pos, n) if skip is not None else psi


def check_K(G: Form, psi: Form, K: Form, k: int, skip: int | None = None) -> bool:
    """True iff ``psi o K`` lies outside ``T_{k-1} o G``."""
    n = G.nvars
    pos = other_positions(n, skip) if skip is not None else list(range(n))
    g, p, kk = restrict(G, pos), restrict(psi, pos), restrict(K, pos)
    target = apply(p, kk)
    if target.is_zero():
        return False
    rows = derivative_rows(g, k - 1)
    width = dim_forms(len(pos), target.degree)
    if not rows:
        return True
    return not qlinalg.in_row_space(target.vector(), QMatrix.from_rows(rows, width))


# ----------------------------------------------------------------------------
# the parametric system

@dataclass
class RuleoutSystem:
    """Polynomial data for "some l makes ((F - l^d)^perp)_k bigger than (alpha^2)_k".

    ``t`` are the coefficients of ``l`` in the variables other than x.  With
    ``P`` a matrix whose kernel is ``T_{k-1} o G``, ``w = P (Psi o K)`` and
    ``q(t) = P (l_t^{d-k})``, the bad ``l`` are exactly those with
    ``w = c Psi(t) q(t)`` where ``c = d!/(d-k)!``.  For ``w != 0`` such ``t``
    exists iff some ``t`` has ``q(t)`` parallel to ``w`` while
    ``g(t) = Psi(t) <w, q(t)>`` is nonzero; parallelism is cut out by the
    forms ``minors``.  So ``g^N`` in the ideal of ``minors`` rules out every l.
    """

    n: int
    d: int
    k: int
    j: int
    G: Form
    K: Form
    psi: Form
    w: list
    q: list
    minors: list
    g: Form
    kernel_dims: tuple

    @property
    def tvars(self) -> int:
        return self.n - 1


def _q_forms(P, nt: int, e: int) -> list[Form]:
    basis = monomial_basis(nt, e)
    # coefficient of x^m in (t.x)^e is multinomial(e; m) t^m
    mult = [Fraction(factorial(e), _prod_fact(m)) for m in basis]
    out = []
    for row in P:
        out.append(Form(nt, e, {m: r * c for m, r, c in zip(basis, row, mult) if r}))
    return out


def _prod_fact(m) -> int:
    out = 1
    for x in m:
        out *= factorial(x)
    return out


def split_form(F: Form, j: int) -> tuple[Form, Form]:
    """``(G, K)`` with ``F = x_j G + K`` and neither involving x_j."""
    alpha = Form.variable(F.nvars, j)
    G = apply(alpha, F)
    if not apply(alpha, G).is_zero():
        raise PreconditionError("alpha^2 o F must vanish")
    return G, substitute_zero(F, j)


def ruleout_system(F: Form, j: int, k: int, psi: Form | None = None) -> RuleoutSystem:
    """Build the data of :class:`RuleoutSystem` for ``F`` and ``alpha = a_j``.

    Raises :class:`GenericityError` if the degree-k kernel of ``G`` in the
    other variables is not one-dimensional or the (k-1) kernel is nonzero.
    """
    n, d = F.nvars, F.degree
    G, K = split_form(F, j)
    pos = other_positions(n, j)
    g_r = restrict(G, pos)
    nt = n - 1
    e = d - k
    ker_lo = qlinalg.kernel_basis(catalecticant(g_r, k - 1).transpose()) if k >= 1 else []
    ker_k = qlinalg.kernel_basis(catalecticant(g_r, k).transpose())
    if ker_lo:
        raise GenericityError(f"(G^perp)_{k - 1} is nonzero")
    if len(ker_k) != 1:
        raise GenericityError(f"(G^perp)_{k} has dimension {len(ker_k)}, expected 1")
    if psi is None:
        psi = embed(Form.from_vector(nt, k, ker_k[0]).normalized(), pos, n)
    psi_r = restrict(psi, pos)
    if not apply(psi_r, g_r).is_zero():
        raise PreconditionError("psi does not annihilate G")
    rows = derivative_rows(g_r, k - 1)
    width = dim_forms(nt, e)
    P = _integerize(annihilator(rows, width))
    target = apply(psi_r, restrict(K, pos)).vector() if k <= d else [0] * width
    w = [sum((a * b for a, b in zip(row, target)), Fraction(0)) for row in P]
    qs = _q_forms(P, nt, e)
    minors = []
    g = Form.zero(nt, d)
    nz = [i for i, x in enumerate(w) if x]
    if nz:
        p = nz[0]
        for i in range(len(w)):
            if i != p:
                m = qs[i] * w[p] - qs[p] * w[i]
                if m:
                    minors.append(m)
        inner = Form.zero(nt, e)
        for wi, qi in zip(w, qs):
            if wi:
                inner = inner + qi * wi
        g = psi_r * inner if inner else Form.zero(nt, d)
    return RuleoutSystem(n, d, k, j, G, K, psi, w, qs, minors, g,
                         (len(ker_lo), len(ker_k)))


def macaulay_membership(target: Form, gens: list[Form]):
    """Multipliers ``a_j`` with ``target = sum a_j gens_j``, or None.

    All inputs are forms in the same variables; ``a_j`` has degree
    ``target.degree - gens_j.degree``.
    """
    nt, D = target.nvars, target.degree
    if target.is_zero():
        return [Form.zero(nt, max(D - g.degree, 0)) for g in gens]
    rows, owners = [], []
    idx = monomial_index(nt, D)
    for gi, gen in enumerate(gens):
        if gen.degree > D:
            continue
        for mu in monomial_basis(nt, D - gen.degree):
            prodf = gen * Form.monomial(mu)
            v = [Fraction(0)] * len(idx)
            for m, c in prodf.items():
                v[idx[m]] = c
            rows.append(v)
            owners.append((gi, mu))
    if not rows:
        return None
    M = QMatrix.from_rows(rows, len(idx))
    tvec = target.vector()
    x = qlinalg.solve_left(M, tvec)
    if x is None:
        return None
    mult = [dict() for _ in gens]
    for coef, (gi, mu) in zip(x, owners):
        if coef:
            mult[gi][mu] = coef
    return [Form(nt, D - g.degree, m) if g.degree <= D else Form.zero(nt, 0)
            for g, m in zip(gens, mult)]


@dataclass
class RuleoutResult:
    passed: bool | None
    witness: LinearForm | None = None
    rigorous: bool = False
    method: str = ""
    data: dict = field(default_factory=dict)
    reason: str = ""

    @property
    def inconclusive(self) -> bool:
        return self.passed is None

    def __iter__(self):
        # unpacks as (passed, witness)
        yield self.passed
        yield self.witness


def piece_ok(F: Form, k: int) -> bool:
    """True iff dim (F^perp)_k equals dim T_{k-2}, i.e. (F^perp)_k = (alpha^2)_k
    given that alpha^2 annihilates F."""
    r = qlinalg.rank(catalecticant(F, k))
    return dim_forms(F.nvars, k) - r == dim_forms(F.nvars, k - 2)


def _translate(F: Form, j: int, t) -> Form:
    n = F.nvars
    pos = other_positions(n, j)
    coeffs = [Fraction(0)] * n
    for p, c in zip(pos, t):
        coeffs[p] = Fraction(c)
    return F - power_sum([(1, coeffs)], F.degree, nvars=n)


def _lift(t, j: int, n: int) -> LinearForm:
    coeffs = [Fraction(0)] * n
    for p, c in zip(other_positions(n, j), t):
        coeffs[p] = Fraction(c)
    return LinearForm(coeffs)


def _cheap_witness(F: Form, j: int, k: int, extra=()):
    n = F.nvars
    cands = [[0] * (n - 1)]
    for i in range(n - 1):
        e = [0] * (n - 1)
        e[i] = 1
        cands.append(e)
    cands.extend(extra)
    for t in cands:
        if not piece_ok(_translate(F, j, t), k):
            return _lift(t, j, n)
    return None


def parametric_ruleout(F: Form, alpha: Form, k: int, mode: str = EXACT,
                       samples: int = 200, rng_seed=0, max_power: int = 6) -> RuleoutResult:
    """Check ``((F - l^d)^perp)_k == (alpha^2)_k`` for every l free of x_alpha.

    ``mode=EXACT`` returns ``passed=True`` only with a checked polynomial
    identity (stored in ``data``), ``passed=False`` with a witness or an
    exact obstruction, and ``passed=None`` (inconclusive) when no identity
    is found up to ``g^max_power``.  ``mode=RANDOMIZED`` tests ``samples``
    random l plus the coordinate ones; a pass there is not a proof.
    """
    j = alpha_index(alpha)
    if F.nvars != alpha.nvars:
        raise PreconditionError("alpha and F have different numbers of variables")
    if not apply(alpha, apply(alpha, F)).is_zero():
        raise PreconditionError("alpha^2 o F must vanish")
    if not 1 <= k <= F.degree:
        raise PreconditionError("k out of range")
    n = F.nvars
    w = _cheap_witness(F, j, k)
    if w is not None:
        return RuleoutResult(False, w, rigorous=True, method="direct",
                             reason="explicit l enlarges the degree-k piece")
    if mode == RANDOMIZED:
        rng = rng_seed if isinstance(rng_seed, random.Random) else random.Random(rng_seed)
        for _ in range(samples):
            t = random_linear(n - 1, rng)
            if not piece_ok(_translate(F, j, t), k):
                return RuleoutResult(False, _lift(t, j, n), rigorous=True, method="direct",
                                     reason="explicit l enlarges the degree-k piece")
        return RuleoutResult(True, None, rigorous=False, method=RANDOMIZED,
                             data={"samples": samples}, reason="no failure among samples")
    if mode != EXACT:
        raise ValueError(f"unknown mode {mode!r}")
    try:
        sysm = ruleout_system(F, j, k)
    except GenericityError as exc:
        return RuleoutResult(None, None, method=EXACT, reason=str(exc))
    if not any(sysm.w):
        # cannot happen once l = 0 passed, kept for safety
        return RuleoutResult(False, _lift([0] * (n - 1), j, n), rigorous=True, method="direct")
    if not sysm.minors:
        if sysm.g.is_zero():
            return _passed(sysm, 1, [], "no minors and g = 0")
        return RuleoutResult(False, None, rigorous=True, method=EXACT,
                             reason="q(t) is always parallel to w and g is not identically 0")
    if sysm.tvars == 2:
        # binary case: decide exactly through the radical of gcd(minors)
        rad = univariate.binary_radical(univariate.binary_gcd(sysm.minors))
        if not univariate.binary_divides(rad, sysm.g):
            wit, data = None, {}
            for s, t in univariate.binary_rational_roots(rad):
                if sysm.g.evaluate([s, t]) != 0:
                    wit = _lift([s, t], j, n)
                    data = {"direction": [q(s), q(t)],
                            "scale_power": q(_scale_power(sysm, [s, t]))}
                    break
            # l = lam * witness fails for the real lam with lam^d = scale_power
            return RuleoutResult(False, wit, rigorous=True, method=EXACT, data=data,
                                 reason="a common zero of the minors is not a zero of g")
    gp = Form.one(sysm.tvars)
    for N in range(1, max_power + 1):
        gp = gp * sysm.g
        mult = macaulay_membership(gp, sysm.minors)
        if mult is not None:
            return _passed(sysm, N, mult, "radical membership identity")
    return RuleoutResult(None, None, method=EXACT,
                         reason=f"no identity g^N = sum a_j m_j with N <= {max_power}")


def _scale_power(sysm: RuleoutSystem, t) -> Fraction:
    """``lam^d`` such that ``l = lam * t`` is a bad linear form, given that
    ``q(t)`` is parallel to ``w`` and ``g(t) != 0``."""
    c = Fraction(factorial(sysm.d), factorial(sysm.d - sysm.k))
    psi_t = restrict(sysm.psi, other_positions(sysm.n, sysm.j)).evaluate(t)
    i = next(i for i, x in enumerate(sysm.w) if x)
    return sysm.w[i] / (c * psi_t * sysm.q[i].evaluate(t))


def _passed(sysm: RuleoutSystem, N: int, mult: list, reason: str) -> RuleoutResult:
    data = {
        "method": "radical_membership",
        "power": N,
        "w": [q(x) for x in sysm.w],
        "g": form_json(sysm.g),
        "minors": [form_json(m) for m in sysm.minors],
        "multipliers": [form_json(a) for a in mult],
        "psi": form_json(sysm.psi, dual=True),
    }
    return RuleoutResult(True, None, rigorous=True, method=EXACT, data=data, reason=reason)


def verify_membership(g: Form, N: int, minors: list, multipliers: list) -> bool:
    """Exact check of ``g^N == sum a_j m_j``."""
    lhs = g ** N
    rhs = Form.zero(g.nvars, lhs.degree)
    for a, m in zip(multipliers, minors):
        if not a.is_zero():
            rhs = rhs + a * m
    return len(minors) == len(multipliers) and lhs == rhs


# ----------------------------------------------------------------------------
# the construction

def special_K(Gr: Form, pts: list, psi_r: Form, k: int, d: int, rng: random.Random) -> Form:
    """A K for three variables whose ``Psi o K`` points along a missing direction.

    In two variables the map ``t -> Psi(t) q(t)`` reaches every direction of
    ``S'_{k+1} / (T_{k-1} o G)`` except the limits at the roots of Psi, which
    are the points of G.  Near a point ``p`` the direction is that of
    ``p^k * m`` for any other linear ``m``; aiming ``Psi o K`` there leaves
    no bad l at all.
    """
    nt = Gr.nvars
    e = d - k
    rows = derivative_rows(Gr, k - 1)
    width = dim_forms(nt, e)
    P = annihilator(rows, width)
    p0 = Form.from_vector(nt, 1, pts[0])
    while True:
        m = Form.from_vector(nt, 1, random_linear(nt, rng))
        target_form = (p0 ** k) * m
        target = [sum((a * b for a, b in zip(row, target_form.vector())), Fraction(0))
                  for row in P]
        if any(target):
            break
    # A: K (degree d) -> P (psi o K)
    basis = monomial_basis(nt, d)
    cols = []
    for mon in basis:
        v = apply(psi_r, Form.monomial(mon)).vector() if psi_r.degree <= d else [0] * width
        cols.append([sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in P])
    A = QMatrix.from_rows(cols, len(P))  # rows of A^T: one per monomial of K
    scale = Fraction(rng.choice([1, 2, 3, 4, 5]) * rng.choice([-1, 1]))
    x = qlinalg.solve_left(A, [scale * c for c in target])
    if x is None:
        raise GenericityError("Psi o (.) does not reach the target direction")
    free = qlinalg.kernel_basis(A.transpose())
    K = list(x)
    for v in free:
        c = rng.randint(-3, 3)
        if c:
            K = [a + c * b for a, b in zip(K, v)]
    return Form.from_vector(nt, d, K)


@dataclass
class _Attempt:
    failure: str | None
    cert: BoundCertificate | None = None


def _attempt(n: int, d: int, k: int, s: int, rng: random.Random, mode: str,
             max_power: int, samples: int) -> _Attempt:
    nt = n - 1
    pos = list(range(1, n))
    Gr, pts = random_power_sum(nt, d - 1, s, rng, points=True)
    hf_g = tuple(hilbert_function(Gr))
    expect = hseq_capped(nt, d - 1, s)
    if hf_g != expect:
        return _Attempt("hilbert_function_G")
    try:
        psi_r = find_psi(Gr, k)
    except GenericityError:
        return _Attempt("psi")
    if nt == 2:
        try:
            Kr = special_K(Gr, pts, psi_r, k, d, rng)
            k_choice = "missing_direction"
        except GenericityError:
            return _Attempt("check_K")
    else:
        Kr = random_form(nt, d, rng)
        k_choice = "random"
    if not check_K(Gr, psi_r, Kr, k):
        return _Attempt("check_K")
    G, K, psi = embed(Gr, pos, n), embed(Kr, pos, n), embed(psi_r, pos, n)
    x = Form.variable(n, 0)
    F = x * G + K
    alpha = Form.variable(n, 0)
    for i in range(2, k + 1):
        if not piece_ok(F, i):
            return _Attempt("graded_pieces_F")
    res = parametric_ruleout(F, alpha, k, mode=mode, max_power=max_power,
                             samples=samples, rng_seed=rng)
    if res.passed is None and mode == EXACT and n >= 4:
        res = parametric_ruleout(F, alpha, k, mode=RANDOMIZED, samples=samples, rng_seed=rng)
    if not res.passed:
        return _Attempt("parametric_ruleout" if res.passed is False else "inconclusive")
    cert = _construction_certificate(n, d, k, s, G, K, F, psi, hf_g, res)
    cert.extra["K_choice"] = k_choice
    return _Attempt(None, cert)


def _construction_certificate(n, d, k, s, G, K, F, psi, hf_g, res) -> BoundCertificate:
    alpha = Form.variable(n, 0)
    base = algen(n - 1, d - 1)
    l1 = apolar_length(apply(alpha, F))
    l2 = apolar_length(apply(alpha, apply(alpha, F)))
    l0 = apolar_length(F)
    cert = BoundCertificate(F, alpha, "construction", rigorous=res.rigorous)
    cert.add("hilbert_function_G",
             {"values": list(hf_g), "expected": list(hseq_capped(n - 1, d - 1, s)),
              "n": n - 1, "d": d - 1, "s": s},
             "A^G has Hilbert function H(n-1, d-1, s)")
    cert.add("apolar_length_alpha_F", {"value": l1, "expected": base - 1},
             "al(alpha o F) = al(G) = algen(n-1, d-1) - 1")
    cert.add("apolar_length_alpha2_F", {"value": l2}, "al(alpha^2 o F)")
    cert.add("derksen_bound", {"al_alpha_F": l1, "al_alpha2_F": l2},
             "r(F) >= al(alpha o F) - al(alpha^2 o F)", bound=l1 - l2)
    cert.add("apolar_length_F", {"value": l0, "expected": 2 * base},
             "al(F) = 2 algen(n-1, d-1)")
    strict = l0 - l1 > l1 - l2
    cert.add("improved_bound",
             {"al_F": l0, "al_alpha_F": l1, "al_alpha2_F": l2, "strict": strict},
             "al(F) - al(alpha o F) > al(alpha o F) - al(alpha^2 o F) implies r(F) > "
             "al(alpha o F) - al(alpha^2 o F)",
             bound=l1 - l2 + 1 if strict else l1 - l2)
    dims = [dim_forms(n, i) - qlinalg.rank(catalecticant(F, i)) for i in range(2, k + 1)]
    cert.add("graded_pieces_F",
             {"degrees": list(range(2, k + 1)), "dims": dims,
              "expected": [dim_forms(n, i - 2) for i in range(2, k + 1)]},
             "(F^perp)_i = (alpha^2)_i for 2 <= i <= k")
    cert.add("psi", {"psi": psi.to_string(dual=True), "kernel_dim": 1},
             "Psi spans the degree-k part of G^perp free of alpha")
    cert.add("check_K", {"outside": True}, "Psi o K is not in T_{k-1} o G")
    values = {"k": k, "mode": res.method, "rigorous": res.rigorous}
    values.update(res.data)
    cert.add("parametric_ruleout", values,
             "for every l free of x, ((F - l^d)^perp)_k = (alpha^2)_k, so r(F) > al(G) + 1",
             bound=l1 - l2 + 2)
    cert.extra.update({
        "n": n, "d": d, "k": k, "s": s,
        "G": form_json(G), "K": form_json(K), "F": form_json(F),
        "psi": form_json(psi, dual=True),
    })
    return cert


def construct_high_rank_form(n: int, d: int, rng_seed=0, max_tries: int = 50,
                        mode: str = EXACT, max_power: int = 6,
                        samples: int = 200) -> BoundCertificate:
    """Build and certify ``F = x G + K`` with ``r(F) >= algen(n-1, d-1) + 1``.

    Raises :class:`ConstructionError` after ``max_tries`` failed attempts,
    naming the check that failed most often.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if d < 3 or d % 2 == 0:
        raise ValueError("d must be odd and at least 3; even degrees take their "
                         "lower bounds from monomials or the generic rank")
    k = (d - 1) // 2
    s = comb(n + k - 2, k) - 1
    rng = random.Random(rng_seed)
    failures: Counter = Counter()
    for attempt in range(1, max_tries + 1):
        out = _attempt(n, d, k, s, rng, mode, max_power, samples)
        if out.cert is not None:
            out.cert.extra["rng_seed"] = rng_seed
            out.cert.extra["attempts"] = attempt
            return out.cert
        failures[out.failure] += 1
    worst, count = failures.most_common(1)[0]
    raise ConstructionError(f"no certified form after {max_tries} tries; "
                            f"check {worst!r} failed {count} times")


# ----------------------------------------------------------------------------
# the explicit ternary quintic

QUINTIC = "x*y*z^3 + y^4*z"
QUINTIC_SPLIT = ("x*y*z^3 - 2*y^2*z^3 - 1/5*z^5", "y^4*z + 2*y^2*z^3 + 1/5*z^5")


def certify_explicit_quintic(mode: str = EXACT) -> BoundCertificate:
    """Lower-bound chain for ``x y z^3 + y^4 z`` ending at rank >= 10,
    with the two-piece upper bound attached."""
    from .decompose import Decomposition, binary_rank, ci_rank, verify_decomposition

    F = parse_form(QUINTIC, 3)
    alpha = Form.variable(3, 0)
    G, K = split_form(F, 0)
    cert = BoundCertificate(F, alpha, "ruled_out")
    hf = hilbert_function(F)
    cert.add("hilbert_function_F", {"values": list(hf)}, "Hilbert function of A^F")
    cert.add("apolar_length_F", {"value": hf.length}, "al(F)")
    l1 = apolar_length(G)
    l2 = apolar_length(apply(alpha, G))
    cert.add("apolar_length_alpha_F", {"value": l1}, "al(alpha o F)")
    cert.add("apolar_length_alpha2_F", {"value": l2}, "al(alpha^2 o F)")
    cert.add("derksen_bound", {"al_alpha_F": l1, "al_alpha2_F": l2},
             "r(F) >= al(alpha o F) - al(alpha^2 o F)", bound=l1 - l2)
    strict = hf.length - l1 > l1 - l2
    cert.add("improved_bound",
             {"al_F": hf.length, "al_alpha_F": l1, "al_alpha2_F": l2, "strict": strict},
             "al(F) - al(alpha o F) > al(alpha o F) - al(alpha^2 o F) implies r(F) > "
             "al(alpha o F) - al(alpha^2 o F)",
             bound=l1 - l2 + 1 if strict else l1 - l2)
    Gr = restrict(G, [1, 2])
    hf_g = hilbert_function(Gr)
    cert.add("hilbert_function_G",
             {"values": list(hf_g), "expected": list(hseq_capped(2, 4, 2)),
              "n": 2, "d": 4, "s": 2},
             "A^G has Hilbert function H(2, 4, 2)")
    cert.add("graded_pieces_F", {"degrees": [2], "dims": [6 - hf[2]], "expected": [1]},
             "(F^perp)_2 is spanned by alpha^2")
    res = parametric_ruleout(F, alpha, 2, mode=mode)
    cert.rigorous = bool(res.rigorous)
    if res.passed:
        values = {"k": 2, "mode": res.method, "rigorous": res.rigorous}
        values.update(res.data)
        cert.add("parametric_ruleout", values,
                 "for every l = a y + b z, ((F - l^5)^perp)_2 = (alpha^2)_2, so r(F) > 9",
                 bound=l1 - l2 + 2)
    # upper bound: a verified rank-2 binary piece plus a complete-intersection piece
    A = parse_form(QUINTIC_SPLIT[0], 3)
    B = parse_form(QUINTIC_SPLIT[1], 3)
    dec = Decomposition(5, [(Fraction(1, 10), LinearForm([0, 1, 1])),
                            (Fraction(-1, 10), LinearForm([0, 1, -1]))], exact=True)
    ci = ci_rank(A)
    b_rank, _ = binary_rank(restrict(B, [1, 2]))
    cert.extra["upper"] = {
        "split": list(QUINTIC_SPLIT),
        "split_sums_to_form": A + B == F,
        "binary_piece": {"rank": b_rank, "witness": dec.to_json(),
                         "verified": verify_decomposition(B, dec)},
        "ci_piece": {"rank": ci[0] if ci else None,
                     "degrees": list(ci[1]) if ci else None},
        "bound": (b_rank + ci[0]) if ci else None,
    }
    return cert

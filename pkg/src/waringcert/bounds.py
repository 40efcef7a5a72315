"""Closed-form rank quantities and apolar lower bounds for Waring rank.

The lower bounds come from comparing apolar lengths of ``F``, ``alpha o F``
and ``alpha^2 o F`` for a linear dual form ``alpha``:

* ``r(F) >= al(alpha o F) - al(alpha^2 o F)`` for every alpha;
* if ``al(F) - al(alpha o F)`` is strictly larger than that difference, the
  bound goes up by one.
"""

from __future__ import annotations

import random
from math import comb, prod
from typing import Sequence

from .apolarity import apolar_length
from .certificate import BoundCertificate
from .polyring import Form, apply, dim_forms

AH_EXCEPTIONS = {(3, 4), (4, 4), (5, 4), (5, 3)}


def generic_rank(n: int, d: int) -> int:
    """Waring rank of a general form."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if d == 1 or n == 1:
        return 1
    if d == 2:
        return n
    if n == 2:
        return (d + 2) // 2
    r = -(-comb(n + d - 1, n - 1) // n)
    return r + 1 if (n, d) in AH_EXCEPTIONS else r


def hseq(n: int, d: int) -> tuple:
    """min(dim T_i, dim T_{d-i}) for i = 0..d."""
    return tuple(min(dim_forms(n, i), dim_forms(n, d - i)) for i in range(d + 1))


def hseq_capped(n: int, d: int, s: int) -> tuple:
    """min(dim T_i, dim T_{d-i}, s) for i = 0..d."""
    return tuple(min(dim_forms(n, i), dim_forms(n, d - i), s) for i in range(d + 1))


def algen(n: int, d: int) -> int:
    """Apolar length of a general form of degree d in n variables."""
    return comb(n + (d - 1) // 2, n) + comb(n + -(-(d - 1) // 2), n)


def al_capped(n: int, d: int, s: int) -> int:
    """Apolar length for Hilbert function H(n, d, s).

    Uses ``2 C(n+i, i) + s (d - 2i - 1)`` for the ``i < d/2`` with
    ``dim T_i <= s < dim T_{i+1}``; when no such ``i`` exists the cap is
    inactive (or degenerate) and the sum of the sequence is returned.
    """
    for i in range(0, (d + 1) // 2):
        if 2 * i < d and dim_forms(n, i) <= s < dim_forms(n, i + 1):
            return 2 * comb(n + i, i) + s * (d - 2 * i - 1)
    return sum(hseq_capped(n, d, s))


def monomial_rank(exponents: Sequence[int]) -> int:
    """Rank of x_1^a_1 ... x_n^a_n: drop one smallest exponent, multiply (a+1)."""
    exps = sorted(int(a) for a in exponents)
    if not exps:
        raise ValueError("empty exponent list")
    if exps[0] < 1:
        raise ValueError("exponents must be positive")
    return prod(a + 1 for a in exps[1:])


def max_monomial_rank(n: int, d: int) -> int:
    """Largest rank of a monomial of degree d in at most n variables."""
    best = 1
    for parts in range(1, min(n, d) + 1):
        for comp in _partitions(d, parts):
            best = max(best, monomial_rank(comp))
    return best


def _partitions(d: int, parts: int, smallest: int = 1):
    if parts == 1:
        if d >= smallest:
            yield (d,)
        return
    for a in range(smallest, d // parts + 1):
        for rest in _partitions(d - a, parts - 1, a):
            yield (a,) + rest


# ----------------------------------------------------------------------------
# certified bounds

def _check_alpha(f: Form, alpha: Form) -> None:
    if alpha.degree != 1 or alpha.is_zero():
        raise ValueError("alpha must be a nonzero linear dual form")
    if alpha.nvars != f.nvars:
        raise ValueError("alpha and f have different numbers of variables")


def _lengths(f: Form, alpha: Form) -> tuple[int, int]:
    a1 = apply(alpha, f)
    a2 = apply(alpha, a1) if a1.degree >= 1 else Form.zero(f.nvars)
    return apolar_length(a1), apolar_length(a2)


def derksen_bound(f: Form, alpha: Form) -> BoundCertificate:
    """r(f) >= al(alpha o f) - al(alpha^2 o f)."""
    _check_alpha(f, alpha)
    l1, l2 = _lengths(f, alpha)
    cert = BoundCertificate(f, alpha, "derksen")
    cert.add("apolar_length_alpha_F", {"value": l1}, "al(alpha o F)")
    cert.add("apolar_length_alpha2_F", {"value": l2}, "al(alpha^2 o F)")
    cert.add("derksen_bound", {"al_alpha_F": l1, "al_alpha2_F": l2},
             "r(F) >= al(alpha o F) - al(alpha^2 o F)", bound=max(l1 - l2, 0))
    return cert


def improved_bound(f: Form, alpha: Form) -> BoundCertificate:
    """Derksen bound, plus one when al(f) - al(alpha o f) exceeds it."""
    cert = derksen_bound(f, alpha)
    cert.kind = "improved"
    l1 = cert.step("apolar_length_alpha_F").values["value"]
    l2 = cert.step("apolar_length_alpha2_F").values["value"]
    l0 = apolar_length(f)
    base = l1 - l2
    strict = l0 - l1 > base
    cert.add("apolar_length_F", {"value": l0}, "al(F)")
    cert.add("improved_bound",
             {"al_F": l0, "al_alpha_F": l1, "al_alpha2_F": l2, "strict": strict},
             "al(F) - al(alpha o F) > al(alpha o F) - al(alpha^2 o F) implies r(F) > "
             "al(alpha o F) - al(alpha^2 o F)",
             bound=base + 1 if strict else cert.bound)
    return cert


def cactus_bound(f: Form, alpha: Form) -> BoundCertificate:
    """al(f) - al(alpha o f); a rank/cactus bound only when no point of the
    apolar scheme lies on the hyperplane of alpha, which is not checked."""
    _check_alpha(f, alpha)
    l0 = apolar_length(f)
    l1 = apolar_length(apply(alpha, f))
    cert = BoundCertificate(f, alpha, "cactus", rigorous=False)
    cert.add("apolar_length_F", {"value": l0}, "al(F)")
    cert.add("apolar_length_alpha_F", {"value": l1}, "al(alpha o F)")
    cert.add("cactus_bound", {"al_F": l0, "al_alpha_F": l1, "conditional": True},
             "deg I >= al(F) - al(alpha o F) for apolar I with no support on V(alpha)",
             bound=max(l0 - l1, 0))
    return cert


def coordinate_alpha(n: int, i: int) -> Form:
    return Form.variable(n, i)


def random_alpha(n: int, rng: random.Random, lo: int = -9, hi: int = 9) -> Form:
    while True:
        v = [rng.randint(lo, hi) for _ in range(n)]
        if any(v):
            return Form.from_vector(n, 1, v)


def best_bound(f: Form, extra_alphas: int = 5, rng_seed: int = 0) -> BoundCertificate:
    """Best improved bound over coordinate duals and a few random ones."""
    n = f.nvars
    rng = random.Random(rng_seed)
    candidates = [coordinate_alpha(n, i) for i in range(n)]
    candidates += [random_alpha(n, rng) for _ in range(extra_alphas)]
    best = None
    if f.degree == 0:
        cert = BoundCertificate(f, candidates[0], "improved")
        cert.add("constant", {"nonzero": not f.is_zero()}, "nonzero constant has rank 1",
                 bound=0 if f.is_zero() else 1)
        return cert
    for alpha in candidates:
        cert = improved_bound(f, alpha)
        if best is None or cert.bound > best.bound:
            best = cert
    best.extra["candidates"] = len(candidates)
    best.extra["rng_seed"] = rng_seed
    return best

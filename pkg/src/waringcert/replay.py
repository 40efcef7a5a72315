"""Independent re-verification of certificate JSON.

Each step is recomputed from the stored form and dual linear form; stored
numbers are compared with fresh ones and bounds are re-derived from them.
Nothing in a certificate is trusted except the polynomial identity data of
the rule-out step, which is itself checked by exact expansion.
"""

from __future__ import annotations

from fractions import Fraction

from . import qlinalg
from .apolarity import apolar_length, catalecticant, hilbert_function
from .bounds import hseq_capped
from .certificate import form_from_json, load_alpha, load_form
from .construct import (RANDOMIZED, check_K, other_positions, parametric_ruleout,
                        ruleout_system, verify_membership)
from .polyring import Form, apply, dim_forms, parse_form, restrict


class ReplayError(AssertionError):
    pass


def _expect(cond, msg):
    if not cond:
        raise ReplayError(msg)


class _Context:
    def __init__(self, data):
        self.data = data
        self.form = load_form(data)
        self.alpha = load_alpha(data)
        self.cache = {}

    def lengths(self):
        if "lengths" not in self.cache:
            f, a = self.form, self.alpha
            a1 = apply(a, f)
            a2 = apply(a, a1) if a1.degree >= 1 else Form.zero(f.nvars)
            self.cache["lengths"] = (apolar_length(f), apolar_length(a1), apolar_length(a2))
        return self.cache["lengths"]

    def G(self):
        j = _alpha_index(self.alpha)
        return restrict(apply(self.alpha, self.form), other_positions(self.form.nvars, j))


def _alpha_index(alpha):
    (e, _), = alpha.items()
    return e.index(1)


def _step_constant(ctx, v, step):
    f = ctx.form
    _expect(f.degree == 0, "constant step on a non-constant form")
    _expect(v["nonzero"] == (not f.is_zero()), "constant: nonzero flag")
    return 0 if f.is_zero() else 1


def _step_len_f(ctx, v, step):
    _expect(v["value"] == ctx.lengths()[0], "al(F) mismatch")
    if "expected" in v:
        _expect(v["value"] == v["expected"], "al(F) differs from its expected value")


def _step_len_a(ctx, v, step):
    _expect(v["value"] == ctx.lengths()[1], "al(alpha o F) mismatch")
    if "expected" in v:
        _expect(v["value"] == v["expected"], "al(alpha o F) differs from its expected value")


def _step_len_a2(ctx, v, step):
    _expect(v["value"] == ctx.lengths()[2], "al(alpha^2 o F) mismatch")


def _step_derksen(ctx, v, step):
    _, l1, l2 = ctx.lengths()
    _expect((v["al_alpha_F"], v["al_alpha2_F"]) == (l1, l2), "derksen inputs mismatch")
    return max(l1 - l2, 0)


def _step_improved(ctx, v, step):
    l0, l1, l2 = ctx.lengths()
    _expect((v["al_F"], v["al_alpha_F"], v["al_alpha2_F"]) == (l0, l1, l2),
            "improved inputs mismatch")
    strict = l0 - l1 > l1 - l2
    _expect(v["strict"] == strict, "improved strictness flag mismatch")
    return l1 - l2 + 1 if strict else max(l1 - l2, 0)


def _step_cactus(ctx, v, step):
    l0, l1, _ = ctx.lengths()
    _expect((v["al_F"], v["al_alpha_F"]) == (l0, l1), "cactus inputs mismatch")
    return max(l0 - l1, 0)


def _step_hf_f(ctx, v, step):
    _expect(list(hilbert_function(ctx.form)) == v["values"], "Hilbert function mismatch")


def _step_hf_g(ctx, v, step):
    hf = list(hilbert_function(ctx.G()))
    _expect(hf == v["values"], "Hilbert function of G mismatch")
    _expect(hf == list(hseq_capped(v["n"], v["d"], v["s"])), "G does not have H(n, d, s)")


def _step_pieces(ctx, v, step):
    f = ctx.form
    for i, dim in zip(v["degrees"], v["dims"]):
        fresh = dim_forms(f.nvars, i) - qlinalg.rank(catalecticant(f, i))
        _expect(fresh == dim, f"dim (F^perp)_{i} mismatch")
        _expect(fresh == dim_forms(f.nvars, i - 2), f"(F^perp)_{i} is larger than (alpha^2)_{i}")


def _step_psi(ctx, v, step):
    f = ctx.form
    j = _alpha_index(ctx.alpha)
    pos = other_positions(f.nvars, j)
    psi = restrict(parse_form(v["psi"], f.nvars), pos)
    g = ctx.G()
    _expect(psi and apply(psi, g).is_zero(), "psi does not annihilate G")
    ker = qlinalg.kernel_basis(catalecticant(g, psi.degree).transpose())
    _expect(len(ker) == 1, "degree-k kernel of G is not one-dimensional")
    ctx.cache["psi"] = parse_form(v["psi"], f.nvars)


def _step_check_k(ctx, v, step):
    f = ctx.form
    j = _alpha_index(ctx.alpha)
    psi = ctx.cache.get("psi")
    _expect(psi is not None, "check_K needs a psi step first")
    Gfull = apply(ctx.alpha, f)
    K = f - Form.variable(f.nvars, j) * Gfull
    _expect(check_K(Gfull, psi, K, psi.degree, skip=j), "psi o K lies in T_{k-1} o G")


def _step_ruleout(ctx, v, step):
    f, alpha, k = ctx.form, ctx.alpha, v["k"]
    if v.get("mode") == RANDOMIZED:
        res = parametric_ruleout(f, alpha, k, mode=RANDOMIZED, samples=v.get("samples", 200))
        _expect(res.passed, "randomized rule-out found a bad linear form")
        _expect(not ctx.data.get("rigorous", True), "randomized rule-out marked rigorous")
    else:
        sysm = ruleout_system(f, _alpha_index(alpha), k)
        _expect([str(Fraction(x)) for x in sysm.w] == v["w"], "rule-out vector w mismatch")
        g = form_from_json(v["g"])
        minors = [form_from_json(m) for m in v["minors"]]
        mult = [form_from_json(a) for a in v["multipliers"]]
        _expect(g == sysm.g, "rule-out form g mismatch")
        _expect(minors == sysm.minors, "rule-out minors mismatch")
        _expect(any(sysm.w), "w vanishes: l = 0 already fails")
        _expect(verify_membership(g, v["power"], minors, mult), "g^N != sum a_j m_j")
    _, l1, l2 = ctx.lengths()
    return l1 - l2 + 2


STEPS = {
    "constant": _step_constant,
    "apolar_length_F": _step_len_f,
    "apolar_length_alpha_F": _step_len_a,
    "apolar_length_alpha2_F": _step_len_a2,
    "derksen_bound": _step_derksen,
    "improved_bound": _step_improved,
    "cactus_bound": _step_cactus,
    "hilbert_function_F": _step_hf_f,
    "hilbert_function_G": _step_hf_g,
    "graded_pieces_F": _step_pieces,
    "psi": _step_psi,
    "check_K": _step_check_k,
    "parametric_ruleout": _step_ruleout,
}


def verify_certificate(data: dict) -> tuple[bool, list[str]]:
    """Recompute every step of a certificate; returns ``(ok, messages)``."""
    msgs = []
    try:
        ctx = _Context(data)
        best = 0
        for step in data["steps"]:
            fn = STEPS.get(step["name"])
            _expect(fn is not None, f"unknown step {step['name']!r}")
            got = fn(ctx, step["values"], step)
            if "bound" in step:
                _expect(got == step["bound"], f"{step['name']}: bound {step['bound']} "
                                              f"but recomputed {got}")
                best = max(best, got)
            msgs.append(f"ok {step['name']}")
        _expect(best == data["bound"], f"final bound {data['bound']} but steps give {best}")
        if data["kind"] == "construction":
            _check_construction(ctx, data)
    except (ReplayError, KeyError, ValueError) as exc:
        msgs.append(f"FAIL {exc}")
        return False, msgs
    return True, msgs


def _check_construction(ctx, data):
    F = form_from_json(data["F"])
    G = form_from_json(data["G"])
    K = form_from_json(data["K"])
    _expect(F == ctx.form, "stored F differs from the certified form")
    _expect(Form.variable(F.nvars, 0) * G + K == F, "F != x G + K")
    names = {s["name"] for s in data["steps"]}
    _expect({"hilbert_function_G", "psi", "check_K", "parametric_ruleout"} <= names,
            "construction certificate is missing steps")

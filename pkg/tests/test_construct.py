import json
import random
from fractions import Fraction

import numpy as np
import pytest

from waringcert import qlinalg
from waringcert.apolarity import (apolar_length, catalecticant, differentiation_matrix,
                                  hilbert_function)
from waringcert.bounds import algen, hseq_capped
from waringcert.construct import (RANDOMIZED, ConstructionError, GenericityError,
                                  PreconditionError, certify_explicit_quintic, check_K,
                                  construct_high_rank_form, find_psi, parametric_ruleout,
                                  piece_ok, random_form, random_power_sum, ruleout_system,
                                  special_K, verify_membership)
from waringcert.polyring import Form, apply, dim_forms, embed, parse_form, \
    power_sum, restrict
from waringcert.replay import verify_certificate

QUINTIC = "x*y*z^3 + y^4*z"
ALPHA = Form.variable(3, 0)


def numeric_piece_dim(f: Form, k: int) -> int:
    """dim (f^perp)_k from a floating-point SVD of the catalecticant."""
    cat = np.array([[float(x) for x in row] for row in catalecticant(f, k).to_rows()])
    s = np.linalg.svd(cat, compute_uv=False)
    return cat.shape[0] - int((s > 1e-9 * s[0]).sum())


def test_random_power_sum_is_seeded():
    assert random_power_sum(3, 4, 5, 1) == random_power_sum(3, 4, 5, 1)
    g, pts = random_power_sum(2, 4, 2, 7, points=True)
    assert g == power_sum([(1, p) for p in pts], 4)


def test_find_psi_quintic():
    g = apply(ALPHA, parse_form(QUINTIC, 3))
    psi = find_psi(g, 2, skip=0)
    assert psi == parse_form("b^2", 3)
    assert apply(psi, g).is_zero()


def test_find_psi_rejects_large_kernel():
    with pytest.raises(GenericityError):
        find_psi(parse_form("y^4", 2), 2)


def test_find_psi_generic_power_sums():
    rng = random.Random(2)
    for d in (4, 6, 8):
        k = d // 2
        s = dim_forms(2, k) - 1
        g = random_power_sum(2, d, s, rng)
        assert tuple(hilbert_function(g)) == hseq_capped(2, d, s)
        psi = find_psi(g, k)
        assert psi.degree == k and apply(psi, g).is_zero()


def test_check_K():
    g = restrict(apply(ALPHA, parse_form(QUINTIC, 3)), [1, 2])
    psi = find_psi(g, 2)
    assert check_K(g, psi, parse_form("x^4*y", 2), 2)
    # K in the span of G-derivatives fails
    assert not check_K(g, psi, parse_form("x*y^4", 2), 2)


def test_ruleout_quintic_exact():
    res = parametric_ruleout(parse_form(QUINTIC, 3), ALPHA, 2)
    assert res.passed is True and res.rigorous
    data = res.data
    from waringcert.certificate import form_from_json
    assert verify_membership(form_from_json(data["g"]), data["power"],
                             [form_from_json(m) for m in data["minors"]],
                             [form_from_json(a) for a in data["multipliers"]])


def test_ruleout_quintic_sampled_oracle():
    # independent check: subtracting any sampled fifth power keeps (F^perp)_2 = <a^2>
    f = parse_form(QUINTIC, 3)
    rng = random.Random(0)
    for _ in range(60):
        t = [0, rng.randint(-6, 6), rng.randint(-6, 6)]
        assert piece_ok(f - power_sum([(1, t)], 5), 2)


def test_ruleout_finds_direct_witness():
    res = parametric_ruleout(parse_form("x*y^4 + y^5", 3), ALPHA, 2)
    assert res.passed is False and res.witness is not None


def test_ruleout_random_K_fails_in_three_variables():
    # with random K the bad linear forms exist; confirm one numerically
    rng = random.Random(1)
    gr, _ = random_power_sum(2, 4, 2, rng, points=True)
    kr = random_form(2, 5, rng)
    f = Form.variable(3, 0) * embed(gr, [1, 2], 3) + embed(kr, [1, 2], 3)
    res = parametric_ruleout(f, ALPHA, 2)
    assert res.passed is False and res.rigorous
    lam5 = Fraction(res.data["scale_power"])
    lam = float(abs(lam5)) ** 0.2 * (1 if lam5 > 0 else -1)
    t = [0.0] + [lam * float(Fraction(x)) for x in res.data["direction"]]
    bad = f - power_sum([(1, [Fraction(x) for x in t])], 5)
    assert numeric_piece_dim(bad, 2) == 2
    assert numeric_piece_dim(f, 2) == 1


def test_special_K_passes():
    rng = random.Random(3)
    gr, pts = random_power_sum(2, 4, 2, rng, points=True)
    psi = find_psi(gr, 2)
    kr = special_K(gr, pts, psi, 2, 5, rng)
    assert check_K(gr, psi, kr, 2)
    f = Form.variable(3, 0) * embed(gr, [1, 2], 3) + embed(kr, [1, 2], 3)
    assert parametric_ruleout(f, ALPHA, 2).passed is True


def test_ruleout_preconditions():
    with pytest.raises(PreconditionError):
        parametric_ruleout(parse_form("x^2*y^3", 3), ALPHA, 2)
    with pytest.raises(PreconditionError):
        parametric_ruleout(parse_form(QUINTIC, 3), parse_form("a + b", 3), 2)


def test_randomized_mode_is_not_rigorous():
    res = parametric_ruleout(parse_form(QUINTIC, 3), ALPHA, 2, mode=RANDOMIZED, samples=30)
    assert res.passed is True and not res.rigorous


def test_ruleout_system_quintic():
    sysm = ruleout_system(parse_form(QUINTIC, 3), 0, 2)
    assert sysm.kernel_dims == (0, 1)
    assert any(sysm.w)
    assert len(sysm.minors) == 1


@pytest.mark.parametrize("n,d,bound", [(3, 5, 10), (3, 7, 17), (4, 5, 15)])
def test_construction_bounds(n, d, bound):
    cert = construct_high_rank_form(n, d, rng_seed=0)
    assert cert.bound == bound == algen(n - 1, d - 1) + 1
    data = json.loads(cert.dumps())
    ok, msgs = verify_certificate(data)
    assert ok, msgs
    f = cert.form
    assert apolar_length(f) == 2 * algen(n - 1, d - 1)
    assert apolar_length(apply(ALPHA if n == 3 else Form.variable(n, 0), f)) == \
        algen(n - 1, d - 1) - 1


def test_construction_is_deterministic():
    a = construct_high_rank_form(3, 5, rng_seed=4).dumps()
    b = construct_high_rank_form(3, 5, rng_seed=4).dumps()
    assert a == b


def test_construction_rejects_even_degree():
    with pytest.raises(ValueError):
        construct_high_rank_form(3, 6)
    with pytest.raises(ValueError):
        construct_high_rank_form(2, 5)


def test_construction_reports_failing_check(monkeypatch):
    import waringcert.construct as c
    monkeypatch.setattr(c, "check_K", lambda *a, **k: False)
    with pytest.raises(ConstructionError, match="check_K"):
        construct_high_rank_form(4, 5, max_tries=3)


def test_explicit_quintic_certificate():
    cert = certify_explicit_quintic()
    assert cert.bound == 10 and cert.rigorous
    assert cert.step("hilbert_function_F").values["values"] == [1, 3, 5, 5, 3, 1]
    assert cert.step("derksen_bound").bound == 8
    assert cert.step("improved_bound").bound == 9
    upper = cert.extra["upper"]
    assert upper["bound"] == 10 and upper["split_sums_to_form"]
    assert upper["binary_piece"]["verified"]
    assert verify_certificate(json.loads(cert.dumps()))[0]


def test_tampered_certificate_is_rejected():
    data = json.loads(certify_explicit_quintic().dumps())
    data["steps"][-1]["values"]["multipliers"][0]["coefficients"][0][1] = "7"
    assert not verify_certificate(data)[0]
    data = json.loads(certify_explicit_quintic().dumps())
    data["bound"] = 11
    assert not verify_certificate(data)[0]


def surjectivity_failures(count, seed):
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        n = rng.randint(1, 4)
        total = rng.randint(1, 6)
        b = rng.randint(1, total)
        a = total - b
        psi = random_form(n, b, rng, lo=-3, hi=3)
        if qlinalg.rank(differentiation_matrix(psi, a)) != dim_forms(n, a):
            bad += 1
    return bad


def test_differentiation_surjective():
    assert surjectivity_failures(40, seed=5) == 0

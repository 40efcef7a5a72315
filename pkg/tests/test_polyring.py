from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from waringcert.polyring import (Form, FormError, LinearForm, apply, dim_forms, embed,
                                 format_form, monomial_basis, parse_form, power_sum,
                                 proportional, restrict, substitute_zero)

from helpers import forms, from_sympy, sympy_apply, to_sympy


def test_parse_quintic():
    f = parse_form("x*y*z^3 + y^4*z", 3)
    assert f.degree == 5
    assert f.coefficient((1, 1, 3)) == 1
    assert f.coefficient((0, 4, 1)) == 1
    assert len(f) == 2


def test_parse_rationals_and_signs():
    f = parse_form("1/5*z^5 - 2*y^2*z^3 + (3/4)*x^5", 3)
    assert f.coefficient((0, 0, 5)) == Fraction(1, 5)
    assert f.coefficient((0, 2, 3)) == -2
    assert f.coefficient((5, 0, 0)) == Fraction(3, 4)


def test_parse_indexed_and_custom_names():
    assert parse_form("x0*x4", 5) == Form(5, 2, {(1, 0, 0, 0, 1): 1})
    assert parse_form("y^2*z", 2, names=("y", "z")) == Form(2, 3, {(2, 1): 1})


@pytest.mark.parametrize("text", ["x^2 + y", "x*q", "", "x +", "x/0", "2/0*x"])
def test_parse_errors(text):
    with pytest.raises(FormError):
        parse_form(text, 3)


def test_zero_form_needs_degree():
    with pytest.raises(FormError):
        parse_form("0", 2)
    assert parse_form("0", 2, degree=3) == Form.zero(2, 3)
    assert parse_form("x - x", 2).degree == 1


@given(forms())
def test_format_parse_round_trip(f):
    if f.is_zero():
        return
    assert parse_form(format_form(f), f.nvars) == f


def test_dual_action_examples():
    # alpha^2 beta^3 applied to x^4 y^5
    theta = parse_form("a^2*b^3", 2)
    f = parse_form("x^4*y^5", 2)
    assert apply(theta, f) == parse_form("720*x^2*y^2", 2)
    assert apply(parse_form("a^2*b^2", 2), f) == parse_form("240*x^2*y^3", 2)


def test_dual_action_too_high_degree():
    out = apply(parse_form("a^3", 1), parse_form("x^2", 1))
    assert out.is_zero()


@given(forms(degree=st.integers(0, 5)), forms(degree=st.integers(0, 3)))
def test_apply_matches_sympy(f, theta):
    if theta.nvars != f.nvars:
        theta = Form.from_vector(f.nvars, theta.degree,
                                 [1] * dim_forms(f.nvars, theta.degree))
    assert apply(theta, f) == sympy_apply(theta, f) or (
        theta.degree > f.degree and apply(theta, f).is_zero())


@given(forms(), forms())
def test_product_matches_sympy(f, g):
    if f.nvars != g.nvars:
        return
    assert f * g == from_sympy(to_sympy(f) * to_sympy(g), f.nvars, f.degree + g.degree)


def test_power_sum_examples():
    # (1/10)((y+z)^5 - (y-z)^5)
    g = power_sum([(Fraction(1, 10), [1, 1]), (Fraction(-1, 10), [1, -1])], 5)
    assert g == parse_form("y^4*z + 2*y^2*z^3 + 1/5*z^5", 2, names=("y", "z"))
    cubes = power_sum([(1, [1, 1, 1]), (-1, [1, 1, -1]), (-1, [1, -1, 1]), (1, [1, -1, -1])], 3)
    assert cubes == parse_form("24*x*y*z", 3)


def test_power_sum_empty_needs_nvars():
    with pytest.raises(FormError):
        power_sum([], 3)
    assert power_sum([], 3, nvars=2).is_zero()


def test_monomial_basis_sizes():
    for n in range(1, 5):
        for d in range(0, 7):
            basis = monomial_basis(n, d)
            assert len(basis) == len(set(basis)) == dim_forms(n, d)
            assert all(sum(e) == d for e in basis)


def test_embed_restrict_substitute():
    f = parse_form("y^4*z + x*y*z^3", 3)
    assert substitute_zero(f, 0) == parse_form("y^4*z", 3)
    g = restrict(substitute_zero(f, 0), [1, 2])
    assert embed(g, [1, 2], 3) == substitute_zero(f, 0)
    with pytest.raises(FormError):
        restrict(f, [1, 2])


def test_evaluate_and_normalized():
    f = parse_form("1/2*x^2 - 3/4*x*y", 2)
    assert f.evaluate([2, 1]) == Fraction(1, 2)
    assert f.normalized() == parse_form("2*x^2 - 3*x*y", 2)
    assert (-f).normalized() == f.normalized()


def test_linear_forms_and_proportional():
    assert proportional([1, 2, 3], [-2, -4, -6])
    assert not proportional([1, 2, 3], [1, 2, 4])
    assert LinearForm([0, 1, 1]).to_form() == parse_form("y + z", 3)


def test_form_validation():
    with pytest.raises(FormError):
        Form(2, 2, {(1, 0): 1})
    with pytest.raises(FormError):
        parse_form("x", 2) + parse_form("x^2", 2)

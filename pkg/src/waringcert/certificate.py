"""Certificate records and their JSON form.

A certificate is a list of named steps.  Each step stores the integers it
asserts, so a checker can rerun the named computation from the form and the
dual linear form alone (see :mod:`waringcert.replay`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .polyring import Form, parse_form

KINDS = ("derksen", "improved", "ruled_out", "cactus", "construction")


@dataclass
class Step:
    name: str
    values: dict
    claim: str
    bound: int | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "values": self.values, "claim": self.claim}
        if self.bound is not None:
            out["bound"] = self.bound
        return out


@dataclass
class BoundCertificate:
    form: Form
    alpha: Form | None
    kind: str
    steps: list = field(default_factory=list)
    bound: int = 0
    rigorous: bool = True
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    def add(self, name: str, values: dict, claim: str, bound: int | None = None) -> Step:
        if bound is not None:
            if bound < self.bound:
                raise ValueError("certificate steps may only raise the bound")
            self.bound = bound
        step = Step(name, values, claim, bound)
        self.steps.append(step)
        return step

    def step(self, name: str) -> Step:
        for s in self.steps:
            if s.name == name:
                return s
        raise KeyError(name)

    def to_json(self) -> dict:
        out = {
            "form": self.form.to_string(),
            "nvars": self.form.nvars,
            "degree": self.form.degree,
            "alpha": self.alpha.to_string(dual=True) if self.alpha is not None else None,
            "kind": self.kind,
            "steps": [s.to_json() for s in self.steps],
            "bound": self.bound,
            "rigorous": self.rigorous,
        }
        out.update(self.extra)
        return out

    def dumps(self, pretty: bool = False) -> str:
        return dumps(self.to_json(), pretty)


def dumps(data: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(data, indent=2, sort_keys=False)
    return json.dumps(data, separators=(",", ":"), sort_keys=False)


def q(x) -> str:
    """Rational as a ``p/q`` (or integer) string."""
    return str(Fraction(x))


def form_json(f: Form, dual: bool = False) -> dict:
    from .polyring import monomial_basis
    return {
        "text": f.to_string(dual=dual),
        "nvars": f.nvars,
        "degree": f.degree,
        "coefficients": [[list(e), q(f.coefficient(e))]
                         for e in monomial_basis(f.nvars, f.degree) if f.coefficient(e)],
    }


def form_from_json(data: dict) -> Form:
    return Form(data["nvars"], data["degree"],
                {tuple(e): Fraction(c) for e, c in data["coefficients"]})


def load_form(data: dict) -> Form:
    return parse_form(data["form"], data["nvars"], data["degree"])


def load_alpha(data: dict) -> Form | None:
    if data.get("alpha") is None:
        return None
    return parse_form(data["alpha"], data["nvars"])

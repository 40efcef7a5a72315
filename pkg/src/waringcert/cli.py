"""Command-line interface.

Exit codes: 0 success, 2 a check failed, 3 inconclusive, 4 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .apolarity import hilbert_function, minimal_generators
from .bounds import best_bound, improved_bound
from .certificate import dumps
from .construct import EXACT, RANDOMIZED, ConstructionError, certify_explicit_quintic, \
    construct_high_rank_form
from .decompose import Decomposition, DecompositionError, binary_rank, numerical_decompose, \
    verify_decomposition
from .polyring import FormError, parse_form, variable_names
from .replay import verify_certificate
from .tables import table

OK, CHECK_FAILED, INCONCLUSIVE, INPUT_ERROR = 0, 2, 3, 4


class InputError(ValueError):
    pass


def default_seed() -> int:
    value = os.environ.get("WARING_SEED")
    if value is None:
        return 0
    try:
        return int(value)
    except ValueError:
        raise InputError(f"WARING_SEED must be an integer, got {value!r}") from None


def infer_nvars(text: str) -> int:
    """Number of variables implied by the names used: x,y,z,w or x0, x1, ..."""
    indexed = [int(m) for m in re.findall(r"x(\d+)", text)]
    if indexed:
        return max(indexed) + 1
    letters = set(re.findall(r"[a-zA-Z]", text))
    n = 1
    for i, name in enumerate(variable_names(4)):
        if name in letters:
            n = i + 1
    return n


def read_form(text: str, nvars: int | None):
    n = nvars if nvars is not None else infer_nvars(text)
    try:
        return parse_form(text, n)
    except FormError as exc:
        raise InputError(str(exc)) from None


def emit(data, pretty: bool) -> None:
    if pretty:
        print(_human(data))
    else:
        print(dumps(data))


def _human(data) -> str:
    if isinstance(data, dict) and "steps" in data:
        lines = [f"form: {data['form']}",
                 f"alpha: {data.get('alpha')}",
                 f"kind: {data['kind']}"]
        for s in data["steps"]:
            tail = f"  -> bound {s['bound']}" if "bound" in s else ""
            lines.append(f"  {s['name']}: {s['claim']}{tail}")
        lines.append(f"bound: {data['bound']} ({'rigorous' if data['rigorous'] else 'not rigorous'})")
        for key in ("upper", "numerical_witness", "check"):
            if key in data:
                lines.append(f"{key}: {json.dumps(data[key])}")
        return "\n".join(lines)
    if isinstance(data, dict) and "rows" in data:
        rows = data["rows"]
        fields = ("d", "generic", "monomial_max", "lower", "lower_source", "upper_literature")
        out = ["  ".join(f"{f:>16}" for f in fields)]
        for r in rows:
            out.append("  ".join(f"{str(r[f]) if r[f] is not None else '':>16}" for f in fields))
        return "\n".join(out)
    return json.dumps(data, indent=2)


def _with_check(cert_json: dict, check: bool) -> int:
    if not check:
        return OK
    ok, msgs = verify_certificate(cert_json)
    cert_json["check"] = {"ok": ok, "steps": msgs}
    return OK if ok else CHECK_FAILED


# ----------------------------------------------------------------------------
# commands

def cmd_table(args) -> int:
    if args.n not in (3, 4):
        raise InputError("table is available for n = 3 or 4")
    rows = table(args.n, args.dmax)
    emit({"n": args.n, "rows": [r.to_json() for r in rows]}, args.pretty)
    return OK


def cmd_bound(args) -> int:
    f = read_form(args.form, args.nvars)
    seed = args.seed if args.seed is not None else default_seed()
    if args.alpha:
        try:
            alpha = parse_form(args.alpha, f.nvars)
        except FormError as exc:
            raise InputError(str(exc)) from None
        if alpha.degree != 1:
            raise InputError("alpha must be linear")
        if f.degree == 0:
            raise InputError("alpha bounds need a form of positive degree")
        cert = improved_bound(f, alpha)
    else:
        cert = best_bound(f, extra_alphas=args.extra_alphas, rng_seed=seed)
    data = cert.to_json()
    code = _with_check(data, args.check)
    emit(data, args.pretty)
    return code


def cmd_construct(args) -> int:
    seed = args.seed if args.seed is not None else default_seed()
    mode = EXACT if args.exact_ruleout else RANDOMIZED
    try:
        cert = construct_high_rank_form(args.n, args.d, rng_seed=seed, max_tries=args.max_tries,
                                       mode=mode)
    except ConstructionError as exc:
        emit({"error": str(exc), "n": args.n, "d": args.d, "rng_seed": seed}, args.pretty)
        return INCONCLUSIVE
    except ValueError as exc:
        raise InputError(str(exc)) from None
    data = cert.to_json()
    code = _with_check(data, args.check)
    emit(data, args.pretty)
    return code


def _load_decomposition(path: str, degree: int) -> Decomposition:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read decomposition: {exc}") from None
    try:
        return Decomposition.from_json(data, degree)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed decomposition: {exc}") from None


def cmd_verify(args) -> int:
    f = read_form(args.form, args.nvars)
    dec = _load_decomposition(args.decomposition, f.degree)
    try:
        ok = verify_decomposition(f, dec)
        reason = None
    except DecompositionError as exc:
        ok, reason = False, str(exc)
    out = {"form": f.to_string(), "terms": len(dec), "verified": ok}
    if ok:
        out["rank_at_most"] = len(dec)
    if reason:
        out["reason"] = reason
    emit(out, args.pretty)
    return OK if ok else CHECK_FAILED


def cmd_quintic(args) -> int:
    cert = certify_explicit_quintic()
    data = cert.to_json()
    code = _with_check(data, args.check)
    if not args.no_numeric:
        seed = args.seed if args.seed is not None else default_seed()
        res, dec = numerical_decompose(cert.form, 10, tol=args.tol, rng_seed=seed,
                                       restarts=args.restarts)
        data["numerical_witness"] = {"rank": 10, "residual": res, "tol": args.tol,
                                     "evidence_only": True, "decomposition": dec.to_json()}
        if res > args.tol:
            code = code or CHECK_FAILED
    if data["bound"] < 10 or not data["upper"].get("bound") == 10:
        code = code or CHECK_FAILED
    emit(data, args.pretty)
    return code


def cmd_hilbert(args) -> int:
    f = read_form(args.form, args.nvars)
    if f.is_zero():
        raise InputError("the zero form has no apolar algebra")
    hf = hilbert_function(f)
    gens = minimal_generators(f)
    emit({"form": f.to_string(), "hilbert_function": list(hf), "apolar_length": hf.length,
          "generator_degrees": [d for d, _ in gens],
          "generators": [g.to_string(dual=True) for _, g in gens]}, args.pretty)
    return OK


def cmd_binary_rank(args) -> int:
    f = read_form(args.form, 2)
    rank, dec = binary_rank(f)
    out = {"form": f.to_string(), "rank": rank,
           "witness": dec.to_json() if dec is not None else None}
    if dec is not None:
        out["witness_verified"] = verify_decomposition(f, dec)
    emit(out, args.pretty)
    return OK


def cmd_decompose(args) -> int:
    f = read_form(args.form, args.nvars)
    if args.rank < 1:
        raise InputError("--rank must be at least 1")
    if f.is_zero():
        raise InputError("the zero form has rank 0")
    seed = args.seed if args.seed is not None else default_seed()
    res, dec = numerical_decompose(f, args.rank, tol=args.tol, rng_seed=seed,
                                   restarts=args.restarts)
    emit({"form": f.to_string(), "rank": args.rank, "residual": res, "tol": args.tol,
          "converged": res <= args.tol, "evidence_only": True,
          "decomposition": dec.to_json()}, args.pretty)
    return OK if res <= args.tol else INCONCLUSIVE


def cmd_check(args) -> int:
    try:
        with open(args.certificate) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read certificate: {exc}") from None
    ok, msgs = verify_certificate(data)
    emit({"ok": ok, "bound": data.get("bound"), "steps": msgs}, args.pretty)
    return OK if ok else CHECK_FAILED


# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    out.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable output")
    common.set_defaults(pretty=False)

    p = argparse.ArgumentParser(prog="waringcert",
                                description="Certified lower bounds on Waring rank.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("table", parents=[common], help="generic/monomial/maximum rank rows")
    s.add_argument("n", type=int)
    s.add_argument("dmax", type=int)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("bound", parents=[common], help="apolar lower bound certificate")
    s.add_argument("form")
    s.add_argument("--nvars", type=int)
    s.add_argument("--alpha", help="linear dual form, e.g. 'a' or 'a + 2*b'")
    s.add_argument("--extra-alphas", type=int, default=5)
    s.add_argument("--seed", type=int)
    s.add_argument("--check", action="store_true", help="replay the certificate")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("construct", parents=[common], help="certified odd-degree construction")
    s.add_argument("n", type=int)
    s.add_argument("d", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--max-tries", type=int, default=50)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact-ruleout", dest="exact_ruleout", action="store_true",
                      help="certify the rule-out by a polynomial identity (default)")
    mode.add_argument("--randomized-ruleout", dest="exact_ruleout", action="store_false",
                      help="sample linear forms instead (not rigorous)")
    s.set_defaults(exact_ruleout=True)
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", parents=[common], help="exactly verify a decomposition file")
    s.add_argument("form")
    s.add_argument("decomposition")
    s.add_argument("--nvars", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("quintic", parents=[common], help="rank 10 for x*y*z^3 + y^4*z")
    s.add_argument("--check", action="store_true")
    s.add_argument("--no-numeric", action="store_true", help="skip the numerical witness")
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--restarts", type=int, default=20)
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_quintic)

    s = sub.add_parser("hilbert", parents=[common], help="Hilbert function and generators")
    s.add_argument("form")
    s.add_argument("--nvars", type=int)
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("binary-rank", parents=[common], help="exact rank of a binary form")
    s.add_argument("form")
    s.set_defaults(func=cmd_binary_rank)

    s = sub.add_parser("decompose", parents=[common], help="numerical power-sum fit")
    s.add_argument("form")
    s.add_argument("--nvars", type=int)
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--seed", type=int)
    s.add_argument("--restarts", type=int, default=20)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("check", parents=[common], help="replay a certificate file")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

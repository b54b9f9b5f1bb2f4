"""Command-line front end: lift, factor, teichmuller, bell, invert, classify.

Exit codes: 0 on success, 1 on a domain error (bad seed, no root, ...),
2 on usage errors.  ``--json`` switches every subcommand to a
machine-readable payload with sorted keys, so identical invocations give
byte-identical output.  The hidden ``verify`` subcommand re-checks a
previously emitted JSON payload (root residual / factor product) and is
what CI uses for round-trip testing.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import factorize, hensel, polys
from .bell import bell
from .bigmath import INFINITY, is_prime
from .errors import DomainError
from .padic import PadicInt
from .series import lagrange_invert

MAX_SCAN_PRIME = 10 ** 6


class UsageError(Exception):
    pass


def _parse_int_list(s: str) -> list[int]:
    try:
        return [int(tok.strip()) for tok in s.split(",")]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {s!r}") from exc


def _parse_rat_list(s: str) -> list[Fraction]:
    try:
        return [Fraction(tok.strip()) for tok in s.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"expected comma-separated rationals, got {s!r}") from exc


def _require_prime(p: int) -> int:
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    return p


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _report_json(rep: hensel.LiftReport) -> dict:
    rv = rep.residual_valuation
    return {
        "root": rep.root.to_json(),
        "residue": str(rep.root.residue),
        "terms_used": rep.terms_used,
        "residual_valuation": "INFINITY" if rv is INFINITY else rv,
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_lift(args) -> int:
    f = _parse_int_list(args.poly)
    p = _require_prime(args.prime)
    N = args.precision
    if N < 1:
        raise UsageError("precision must be >= 1")
    if args.seed is not None:
        seeds = [args.seed]
    else:
        if p > MAX_SCAN_PRIME:
            raise UsageError(f"seed scan limited to p <= {MAX_SCAN_PRIME}; pass --seed")
        seeds = [r for r in range(p) if polys.evaluate(f, r) % p == 0]
        if not seeds:
            raise hensel.NotARootModP(f"f has no roots mod {p}")
    reports = []
    for r0 in seeds:
        if args.nu is not None or args.kappa is not None:
            reports.append(hensel.lift_general(f, r0, p, N, nu=args.nu, kappa=args.kappa))
        else:
            reports.extend(hensel.lift_all(f, r0, p, N))
    payload = {
        "input": {"poly": f, "prime": p, "precision": N},
        "kind": "lift",
        "roots": [_report_json(rep) for rep in reports],
    }
    lines = []
    for rep in reports:
        lines.append(f"root = {rep.root}")
        lines.append(f"  residue {rep.root.residue} mod {p}^{N}, "
                     f"{rep.terms_used} series terms, residual valuation "
                     f"{rep.residual_valuation}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _parse_tail(spec: str):
    if spec == "zero":
        return None
    if spec.startswith("geometric:"):
        try:
            return int(spec.split(":", 1)[1])
        except ValueError as exc:
            raise UsageError(f"bad tail ratio in {spec!r}") from exc
    raise UsageError(f"--tail must be 'zero' or 'geometric:R', got {spec!r}")


def _cmd_factor(args) -> int:
    coeffs = _parse_int_list(args.coeffs)
    ratio = _parse_tail(args.tail)
    if ratio is None:
        si = factorize.SeriesInput.polynomial(coeffs)
    else:
        si = factorize.SeriesInput.geometric(coeffs, ratio)
    if args.prime is not None:
        _require_prime(args.prime)
    pair = factorize.factor(si, args.order, p=args.prime)
    payload = {
        "input": {"coeffs": coeffs, "tail_ratio": ratio, "order": args.order},
        "kind": "factor",
        "p": pair.p,
        "w": pair.w,
        "m": pair.m,
        "ell": pair.ell,
        "scale": pair.scale,
        "effective_coeffs": [pair.series.coeff(j) for j in range(args.order + 1)],
        "A": list(pair.A),
        "B": list(pair.B),
        "root": pair.root.to_json(),
        "root_digits": list(pair.digits.digits),
        "checks": {k: v for k, v in vars(pair.checks).items()},
    }
    human = "\n".join([
        f"f = p^w + p^m*g1*x + ...  with p={pair.p} w={pair.w} m={pair.m}, root valuation ell={pair.ell}"
        + (f", rescaled by {pair.scale}" if pair.scale != 1 else ""),
        f"A = {list(pair.A)}",
        f"B = {list(pair.B)}",
        f"checks: all passed = {pair.checks.all_passed()}",
    ])
    _emit(args, payload, human)
    return 0


def _cmd_teichmuller(args) -> int:
    p = _require_prime(args.prime)
    xi = hensel.teichmuller(args.q, p, args.precision)
    payload = {
        "input": {"prime": p, "q": args.q, "precision": args.precision},
        "kind": "teichmuller",
        "root": xi.to_json(),
        "residue": str(xi.residue),
    }
    _emit(args, payload, f"xi_{args.q} = {xi}\n  residue {xi.residue} mod {p}^{args.precision}")
    return 0


def _cmd_bell(args) -> int:
    xs = _parse_rat_list(args.xs)
    val = bell(args.n, args.k, xs)
    payload = {
        "input": {"n": args.n, "k": args.k, "xs": [str(x) for x in xs]},
        "kind": "bell",
        "value": str(val),
    }
    _emit(args, payload, str(val))
    return 0


def _cmd_invert(args) -> int:
    alphas = _parse_rat_list(args.alphas)
    betas = lagrange_invert(alphas)
    payload = {
        "input": {"alphas": [str(a) for a in alphas]},
        "kind": "invert",
        "betas": [f"{b.numerator}/{b.denominator}" for b in betas],
    }
    _emit(args, payload, json.dumps(payload["betas"]))
    return 0


def _cmd_classify(args) -> int:
    cls = factorize.classify(args.f0, args.f1)
    payload = {
        "input": {"f0": args.f0, "f1": args.f1},
        "kind": "classify",
        "classification": cls.kind,
    }
    if cls.kind == factorize.NEEDS_ROOT_ANALYSIS:
        payload.update({"p": cls.p, "w": cls.w,
                        "m": "INFINITY" if cls.m is INFINITY else cls.m})
    elif cls.p is not None:
        payload.update({"p": cls.p, "w": cls.w})
    _emit(args, payload, str(cls))
    return 0


def _verify_lift(payload) -> list[str]:
    problems = []
    inp = payload["input"]
    f, p, N = inp["poly"], inp["prime"], inp["precision"]
    modulus = p ** N
    for entry in payload["roots"]:
        root = PadicInt.from_json(entry["root"])
        if root.residue != int(entry["residue"]):
            problems.append(f"digit vector does not reconstruct residue {entry['residue']}")
        if polys.evaluate(f, root.residue) % modulus != 0:
            problems.append(f"f({root.residue}) != 0 mod {p}^{N}")
    return problems


def _verify_factor(payload) -> list[str]:
    problems = []
    order = payload["input"]["order"]
    eff = payload["effective_coeffs"]
    prod = polys.mul(payload["A"], payload["B"])
    for j in range(order + 1):
        lhs = prod[j] if j < len(prod) else 0
        if lhs != eff[j]:
            problems.append(f"(A*B)[{j}] = {lhs} != f[{j}] = {eff[j]}")
    if payload["A"][0] * payload["B"][0] != payload["p"] ** payload["w"]:
        problems.append("A(0)*B(0) != p^w")
    return problems


def _cmd_verify(args) -> int:
    raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
    payload = json.loads(raw)
    kind = payload.get("kind")
    if kind == "lift":
        problems = _verify_lift(payload)
    elif kind == "factor":
        problems = _verify_factor(payload)
    else:
        raise UsageError(f"cannot verify payload of kind {kind!r}")
    if problems:
        for msg in problems:
            print(f"FAIL: {msg}", file=sys.stderr)
        return 1
    print("verified ok")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="padiclift",
        description="Hensel lifts, Teichmuller lifts, Bell polynomials, series "
                    "inversion, and Z[[x]] factorization in exact arithmetic.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("lift", help="lift a root mod p to a root mod p^N")
    sp.add_argument("--poly", required=True, help="coefficients, constant first, e.g. 1,11,-5")
    sp.add_argument("--prime", required=True, type=int)
    sp.add_argument("--seed", type=int, help="seed root r0 (default: scan residues mod p)")
    sp.add_argument("--precision", required=True, type=int)
    sp.add_argument("--nu", type=int, help="explicit congruence depth (with --kappa)")
    sp.add_argument("--kappa", type=int, help="explicit derivative valuation (with --nu)")
    common(sp)
    sp.set_defaults(func=_cmd_lift)

    sp = sub.add_parser("factor", help="factor p^w + p^m*g1*x + ... over Z[[x]]")
    sp.add_argument("--coeffs", required=True, help="coefficients, constant first")
    sp.add_argument("--prime", type=int, help="optional; inferred from the constant term")
    sp.add_argument("--order", required=True, type=int, help="truncation order M")
    sp.add_argument("--tail", default="zero", help="'zero' or 'geometric:R'")
    common(sp)
    sp.set_defaults(func=_cmd_factor)

    sp = sub.add_parser("teichmuller", help="the (p-1)-st root of unity over a residue")
    sp.add_argument("--prime", required=True, type=int)
    sp.add_argument("--q", required=True, type=int)
    sp.add_argument("--precision", required=True, type=int)
    common(sp)
    sp.set_defaults(func=_cmd_teichmuller)

    sp = sub.add_parser("bell", help="partial Bell polynomial B(n,k) on a sequence")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("xs", help="x1,x2,... (rationals allowed: 1/2,3,...)")
    common(sp)
    sp.set_defaults(func=_cmd_bell)

    sp = sub.add_parser("invert", help="Lagrange inversion of t(1 + sum alpha_r t^r/r!)")
    sp.add_argument("--alphas", required=True, help="alpha_1,alpha_2,...")
    common(sp)
    sp.set_defaults(func=_cmd_invert)

    sp = sub.add_parser("classify", help="Z[[x]] reducibility case of (f0, f1)")
    sp.add_argument("--f0", required=True, type=int)
    sp.add_argument("--f1", required=True, type=int)
    common(sp)
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("verify")  # hidden round-trip checker for CI
    sp.add_argument("--input", default="-", help="JSON payload file, or - for stdin")
    common(sp)
    sp.set_defaults(func=_cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 domain error (unsupported configuration, exact root
failure, not moderate, invalid scenario), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import CatalogEntry, catalog_build
from .exponents import (
    ExactRootFailure,
    NotModerate,
    Numeric,
    UnsupportedConfiguration,
    char_exponents,
    configuration,
    indicial_polynomial,
    monodromy_at_infinity,
    reciprocity_check,
)
from .newton import INFINITY, as_point, is_moderate_at_infinity, is_regular, slopes
from .parser import ParseError, parse_operator, print_operator
from .scalars import ClassMultiset, eval_class
from .scenarios import ScenarioError, fixture_names, load_fixture, read_scenario, run_scenario
from .weyl import fourier
from .zeta import (
    acampo_monomial,
    chi_hypersurface,
    mt3_closed_form,
    multiplicities_mt2,
)


class UsageError(Exception):
    pass


def _parse_assign(items) -> dict:
    out = {}
    for item in items or []:
        for part in item.split(","):
            if not part.strip():
                continue
            if "=" not in part:
                raise UsageError(f"--assign expects name=value, got {part!r}")
            name, value = part.split("=", 1)
            try:
                out[name.strip()] = Fraction(value.strip())
            except ValueError:
                raise UsageError(f"bad rational value {value!r}") from None
    return out


def _complex_json(z: complex) -> list:
    return [round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0]


def _mu_json(mu: ClassMultiset, assignment=None) -> list:
    rows = []
    for c, n in mu.items():
        row = {"class": str(c), "mult": n}
        if assignment is not None:
            row["approx"] = _complex_json(eval_class(c, assignment))
        rows.append(row)
    return rows


def _mu_text(mu: ClassMultiset) -> str:
    if not len(mu):
        return "(none)"
    return "\n".join(f"  {c}: {n}" for c, n in mu.items())


def _emit(args, data: dict, text: str):
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _operator(args):
    return parse_operator(args.expr)


# ---------------------------------------------------------------- commands


def cmd_fourier(args):
    P = _operator(args)
    Q = fourier(P)
    text = print_operator(Q)
    _emit(args, {"operator": text, "side": Q.side}, text)


def cmd_slopes(args):
    P = _operator(args)
    at = as_point(args.at)
    s = slopes(P, at)
    data = {
        "at": str(at),
        "slopes": [str(x) for x in s],
        "regular": is_regular(P, at),
    }
    if at is INFINITY:
        data["moderate_at_infinity"] = is_moderate_at_infinity(P)
    _emit(args, data, "{" + ", ".join(str(x) for x in s) + "}")


def cmd_exponents(args):
    P = _operator(args)
    at = as_point(args.at)
    b = indicial_polynomial(P, at)
    assignment = _parse_assign(args.assign)
    data = {"at": str(at), "indicial": str(b)}
    lines = [f"indicial: {b}"]
    if assignment:
        roots = char_exponents(P, at, Numeric(assignment))
        data["approx"] = [_complex_json(r) for r in roots]
        lines.append("approx: " + ", ".join(f"{r.real:.12g}{r.imag:+.12g}j" for r in roots))
    else:
        exps = char_exponents(P, at)
        data["exponents"] = [str(x) for x in exps]
        lines.append("exponents: {" + ", ".join(str(x) for x in exps) + "}")
    _emit(args, data, "\n".join(lines))


def cmd_monodromy(args):
    P = _operator(args)
    assignment = _parse_assign(args.assign) or None
    cfg = configuration(P)
    mu = monodromy_at_infinity(P)
    data = {"configuration": cfg, "mu": _mu_json(mu, assignment)}
    _emit(args, data, f"configuration: {cfg}\nmu:\n{_mu_text(mu)}")


def _family_operator(args):
    params = tuple(p for p in (args.params or "").split(",") if p)
    entry = CatalogEntry(args.family, params, n=args.n, m=args.m)
    return catalog_build(entry)


def cmd_reciprocity(args):
    if args.op is not None:
        P = parse_operator(args.op)
    elif args.family is not None:
        P = _family_operator(args)
    else:
        raise UsageError("reciprocity needs --family or --op")
    assignment = _parse_assign(args.assign)
    report = reciprocity_check(P)
    data = {
        "holds": report.holds,
        "configuration": {"operator": report.config_left, "fourier": report.config_right},
        "left": _mu_json(report.left),
        "right_inverted": _mu_json(report.right),
    }
    lines = [
        f"holds: {str(report.holds).lower()}",
        f"left ({report.config_left}):",
        _mu_text(report.left),
        f"right inverted ({report.config_right}):",
        _mu_text(report.right),
    ]
    if assignment:
        num = reciprocity_check(P, Numeric(assignment))
        data["numeric_holds"] = num.holds
        lines.append(f"numeric holds: {str(num.holds).lower()}")
    _emit(args, data, "\n".join(lines))
    return 0 if report.holds else 1


def _zeta_output(args, zeta, mu):
    data = {"zeta": zeta.to_json(), "text": str(zeta), "mu": _mu_json(mu)}
    _emit(args, data, f"zeta: {zeta}\nmu:\n{_mu_text(mu)}")


def cmd_zeta_mt3(args):
    z = mt3_closed_form(args.N, args.d, args.alpha)
    _zeta_output(args, z, multiplicities_mt2(z, args.N))


def _resolve_scenario(ref: str):
    """A path on disk, else a shipped fixture by name (``fixtures/<name>.json`` also works)."""
    path = Path(ref)
    if path.is_file():
        try:
            return read_scenario(path)
        except OSError as exc:
            raise UsageError(str(exc)) from None
    stem = path.name[:-5] if path.name.endswith(".json") else path.name
    if stem in fixture_names():
        return load_fixture(stem)
    raise UsageError(f"no scenario file or fixture named {ref!r}")


def cmd_zeta_scenario(args):
    scenario = load_fixture(args.file) if args.fixture else _resolve_scenario(args.file)
    result = run_scenario(scenario)
    _zeta_output(args, result.zeta, result.mu)


def cmd_zeta_acampo(args):
    try:
        ms = [int(x) for x in args.m.split(",") if x.strip()]
    except ValueError:
        ms = []
    if not ms:
        raise UsageError(f"--m expects a comma-separated list of positive integers, got {args.m!r}")
    z = acampo_monomial(ms)
    _emit(args, {"zeta": z.to_json(), "text": str(z)}, str(z))


def cmd_zeta_chi(args):
    chi = chi_hypersurface(args.N, args.d)
    _emit(args, {"chi": chi, "N": args.N, "d": args.d}, str(chi))


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="fourier-monodromy", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("fourier", parents=[common], help="Fourier transform of an operator")
    s.add_argument("expr")
    s.set_defaults(func=cmd_fourier)

    s = sub.add_parser("slopes", parents=[common], help="Newton-polygon slopes at a point")
    s.add_argument("expr")
    s.add_argument("--at", default="inf", help="0, inf or a rational p/q")
    s.set_defaults(func=cmd_slopes)

    s = sub.add_parser("exponents", parents=[common], help="indicial polynomial and exponents")
    s.add_argument("expr")
    s.add_argument("--at", default="0")
    s.add_argument("--assign", action="append", help="name=p/q, numeric mode")
    s.set_defaults(func=cmd_exponents)

    s = sub.add_parser("monodromy-inf", parents=[common], help="eigenvalues of the monodromy at infinity")
    s.add_argument("expr")
    s.add_argument("--assign", action="append", help="name=p/q, adds approximate values")
    s.set_defaults(func=cmd_monodromy)

    s = sub.add_parser("reciprocity", parents=[common], help="compare monodromies of P and its Fourier transform")
    s.add_argument("--family", choices=("bessel", "gauss", "katz"))
    s.add_argument("--params", help="comma-separated parameter names for the family")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--op")
    s.add_argument("--assign", action="append", help="name=p/q, also run the numeric check")
    s.set_defaults(func=cmd_reciprocity)

    z = sub.add_parser("zeta", help="monodromy zeta calculus")
    zsub = z.add_subparsers(dest="zeta_command", required=True)

    s = zsub.add_parser("mt3", parents=[common], help="closed form for f^alpha, smooth at infinity")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--alpha", default="alpha")
    s.set_defaults(func=cmd_zeta_mt3)

    s = zsub.add_parser("scenario", parents=[common], help="Euler-integrate a scenario file")
    s.add_argument("file", help="scenario JSON path or shipped fixture name")
    s.add_argument("--fixture", action="store_true", help="treat FILE as a shipped fixture name")
    s.set_defaults(func=cmd_zeta_scenario)

    s = zsub.add_parser("acampo", parents=[common], help="zeta function of a monomial")
    s.add_argument("--m", required=True, help="comma-separated exponents, e.g. 2,5")
    s.set_defaults(func=cmd_zeta_acampo)

    s = zsub.add_parser("chi", parents=[common], help="Euler characteristic of a smooth hypersurface")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_zeta_chi)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args)
    except (ParseError, UsageError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotModerate as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UnsupportedConfiguration, ExactRootFailure, ScenarioError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return code or 0


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

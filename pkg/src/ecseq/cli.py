"""Command-line interface.

Subcommands: ``curve info``, ``seq``, ``profile``, ``verify``, ``sweep``.

Exit codes: 0 success, 1 oracle disagreement, 2 invalid parameters or
config, 3 pole of ``f`` hit during generation, 4 inconsistent modulus in
``profile`` input, 5 bound violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction

from . import __version__
from .bounds import verify
from .complexity import BRUTE_FORCE_MAX_LEN, BRUTE_FORCE_MAX_P, bm_profile, brute_force_profile
from .curves import (
    INFINITY,
    EdwardsCurve,
    EPoint,
    WeierstrassCurve,
    WPoint,
    find_point_of_order,
    group_exponent,
    hasse_interval,
    point_orders,
)
from .errors import EcseqError, ModulusMismatch, PoleAtPoint
from .field import is_prime
from .functions import HSShape, lookup, make_user_map
from .generators import (
    LCG,
    ClassicPower,
    ECLinear,
    ECPower,
    generate,
)
from .sweep import ConfigError, parse_config, run_sweep, to_csv

EXIT_OK = 0
EXIT_ORACLE = 1
EXIT_INVALID = 2
EXIT_POLE = 3
EXIT_MODULUS = 4
EXIT_VIOLATED = 5


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    # whole output is built first so a failure never leaves a partial file
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# curve and instance construction from flags


def add_curve_flags(p: argparse.ArgumentParser) -> None:
    model = p.add_mutually_exclusive_group()
    model.add_argument("--edwards", dest="model", action="store_const", const="edwards")
    model.add_argument("--weierstrass", dest="model", action="store_const", const="weierstrass")
    p.add_argument("--p", type=int, help="odd prime modulus")
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--d", type=int, help="Edwards d (non-square); with --weierstrass and no "
                   "--a* flags selects y^2 = x^3 + 2(1+d)x^2 + (1-d)^2 x")
    for name in ("a1", "a2", "a3", "a4", "a6"):
        p.add_argument(f"--{name}", type=int)


def build_curve(args):
    model = args.model or "edwards"
    if args.p is None:
        raise UsageError("--p is required")
    if not is_prime(args.p) or args.p < 5:
        raise UsageError(f"--p {args.p} is not an odd prime >= 5")
    coeffs = {k: getattr(args, k) for k in ("a1", "a2", "a3", "a4", "a6")}
    if model == "edwards":
        if args.d is None:
            raise UsageError("--edwards needs --d")
        return EdwardsCurve(args.p, args.c, args.d)
    if all(v is None for v in coeffs.values()):
        if args.d is None:
            raise UsageError("--weierstrass needs --a1..--a6 or --d")
        return WeierstrassCurve.edwards_model(args.p, args.d)
    return WeierstrassCurve(args.p, **{k: v or 0 for k, v in coeffs.items()})


def add_instance_flags(p: argparse.ArgumentParser) -> None:
    add_curve_flags(p)
    p.add_argument("--kind", choices=["ec", "lcg", "power"], default="ec",
                   help="ec: f(nG), or f(e^n G) when --e is given; lcg/power: baselines")
    p.add_argument("--gx", type=int)
    p.add_argument("--gy", type=int)
    p.add_argument("--gu", type=int)
    p.add_argument("--gv", type=int)
    p.add_argument("--f", default=None, help="catalog name or expression in u,v / x,y")
    p.add_argument("--deg", type=int, help="declared pole-divisor degree of a user --f")
    p.add_argument("--omega", help="declared ideal-point pole flags, e.g. 1,1")
    p.add_argument("--deg-h", type=int, dest="deg_h")
    p.add_argument("--delta", type=int)
    p.add_argument("--at-infinity", type=int, dest="at_infinity",
                   help="declared value of a Weierstrass --f at the point at infinity")
    p.add_argument("--pole-value", type=int, dest="pole_value",
                   help="substitute this residue where f has a pole instead of failing")
    p.add_argument("--e", type=int)
    p.add_argument("--m", type=int, help="baseline modulus")
    p.add_argument("--mult", type=int, help="LCG multiplier a")
    p.add_argument("--inc", type=int, default=0, help="LCG increment b")
    p.add_argument("--x0", type=int, help="baseline seed")


def build_function(args, curve):
    model = "edwards" if isinstance(curve, EdwardsCurve) else "weierstrass"
    name = args.f or ("u+v" if model == "edwards" else "x")
    d = getattr(curve, "d", args.d)
    if args.deg is None:
        f = lookup(model, name, d)
        if f is None:
            raise UsageError(f"--f {name!r} is not in the {model} catalog; declare --deg")
        return f
    omega = None
    if args.omega:
        flags = [int(x) for x in args.omega.split(",")]
        if len(flags) != 2:
            raise UsageError("--omega takes two comma-separated flags")
        omega = (bool(flags[0]), bool(flags[1]))
    hs = HSShape(args.deg_h, args.delta) if args.deg_h is not None else None
    constants = {"c": getattr(curve, "c", args.c)}
    if d is not None:
        constants["d"] = d
    return make_user_map(
        name, declared_degree=args.deg, model=model,
        omega_pole=omega if model == "edwards" else None, hs_shape=hs,
        value_at_infinity=args.at_infinity, constants=constants,
    )


def build_spec(args):
    if args.kind == "lcg":
        if None in (args.m, args.mult, args.x0):
            raise UsageError("--kind lcg needs --m, --mult and --x0")
        return LCG(args.mult, args.inc, args.m, args.x0)
    if args.kind == "power":
        if None in (args.m, args.e, args.x0):
            raise UsageError("--kind power needs --m, --e and --x0")
        return ClassicPower(args.e, args.m, args.x0)
    curve = build_curve(args)
    f = build_function(args, curve)
    if isinstance(curve, EdwardsCurve):
        G = EPoint(args.gu, args.gv) if args.gu is not None else None
    else:
        G = WPoint(args.gx, args.gy) if args.gx is not None else None
    if G is None:
        G = find_point_of_order(curve)
    if args.e is not None:
        return ECPower(curve, G, args.e, f)
    return ECLinear(curve, G, f)


def _spec_header(spec, seq) -> list[str]:
    lines = []
    if isinstance(spec, (ECLinear, ECPower)):
        lines += [
            f"kind = {'ec-power' if isinstance(spec, ECPower) else 'ec-linear'}",
            f"curve = {spec.curve}",
            f"p = {spec.curve.p}",
            f"G = {tuple(spec.G) if spec.G is not INFINITY else 'INFINITY'}",
            f"f = {spec.f.name or spec.f.describe()}",
            f"deg_f = {spec.f.declared_degree}",
            f"provenance = {'catalog' if spec.f.provenance == 'catalog' else 'declared'}",
        ]
        if isinstance(spec, ECPower):
            lines.append(f"e = {spec.e}")
        lines.append("indexing = terms are n = 1, 2, ...")
    elif isinstance(spec, LCG):
        lines += ["kind = lcg", f"a = {spec.a}", f"b = {spec.b}", f"m = {spec.m}",
                  f"x0 = {spec.x0}", "indexing = terms are x_0, x_1, ..."]
        if is_prime(spec.m):
            lines.append(f"p = {spec.m}")
    else:
        lines += ["kind = power", f"e = {spec.e}", f"m = {spec.m}", f"u0 = {spec.u0}",
                  "indexing = terms are u_0, u_1, ..."]
        if is_prime(spec.m):
            lines.append(f"p = {spec.m}")
    lines.append(f"period = {seq.period}")
    if seq.preperiod:
        lines.append(f"preperiod = {seq.preperiod}")
    lines.append(f"n = {len(seq)}")
    return ["# " + line for line in lines]


# subcommands


def cmd_curve_info(args) -> int:
    curve = build_curve(args)
    pts = curve.points()
    n = len(pts)
    lo, hi = hasse_interval(curve.p)
    orders = point_orders(curve)
    out = [f"curve: {curve}", f"cardinality: {n}", f"hasse_interval: [{lo}, {hi}]",
           f"hasse_ok: {lo <= n <= hi}", f"group_exponent: {group_exponent(curve)}"]
    if isinstance(curve, EdwardsCurve) and curve.c == 1:
        E = WeierstrassCurve.edwards_model(curve.p, curve.d)
        out.append(f"weierstrass_model: {E}")
        out.append(f"weierstrass_cardinality: {E.cardinality}")
    G = find_point_of_order(curve)
    out.append(f"max_order_point: {tuple(G) if G is not INFINITY else 'INFINITY'} "
               f"(order {orders[G]})")
    out.append("sample_points:")
    for P in pts[: args.samples]:
        label = "INFINITY" if P is INFINITY else str(tuple(P))
        out.append(f"  {label} order {orders[P]}")
    _emit("\n".join(out) + "\n", args.out)
    return EXIT_OK


def cmd_seq(args) -> int:
    spec = build_spec(args)
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive term count")
    seq = generate(spec, args.n, **_pole_kw(args, spec))
    lines = _spec_header(spec, seq) + [str(t) for t in seq.terms]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _pole_kw(args, spec) -> dict:
    if isinstance(spec, (ECLinear, ECPower)) and args.pole_value is not None:
        return {"pole_value": args.pole_value}
    return {}


def read_terms(text: str) -> tuple[list[int], int | None]:
    terms, header_p = [], None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].partition("=")
            if sep and key.strip() == "p":
                header_p = int(value)
            continue
        terms.append(int(line))
    return terms, header_p


def cmd_profile(args) -> int:
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        terms, header_p = read_terms(text)
    except ValueError as exc:
        raise UsageError(f"unreadable sequence input: {exc}") from None
    p = args.p if args.p is not None else header_p
    if p is None:
        raise UsageError("no modulus: pass --p or include a '# p = ...' header")
    if args.p is not None and header_p is not None and args.p != header_p:
        raise ModulusMismatch(f"--p {args.p} disagrees with input header p = {header_p}")
    prof = bm_profile(terms, p)
    if args.oracle:
        if len(terms) <= BRUTE_FORCE_MAX_LEN and p <= BRUTE_FORCE_MAX_P:
            if brute_force_profile(terms, p).profile != prof.profile:
                print("oracle disagreement: brute-force profile differs", file=sys.stderr)
                return EXIT_ORACLE
            print("oracle: brute-force profile agrees", file=sys.stderr)
        else:
            print(f"oracle skipped: needs length <= {BRUTE_FORCE_MAX_LEN} and "
                  f"p <= {BRUTE_FORCE_MAX_P}", file=sys.stderr)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "L"])
    for N, L in enumerate(prof.profile, start=1):
        w.writerow([N, L])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = build_spec(args)
    kind = args.bound
    if kind is None:
        raise UsageError("--bound is required")
    probe = generate(spec, 1, **_pole_kw(args, spec))
    window = 2 * (probe.preperiod + probe.period)
    seq = generate(spec, window, **_pole_kw(args, spec))
    try:
        kw = {"kappa": Fraction(args.kappa)}
        if kind == "linear":
            kw["slope"] = Fraction(args.slope) if args.slope else None
        if kind == "hs" and args.deg_h is not None:
            kw.update(deg_H=args.deg_h, delta=args.delta)
        rep = verify(seq, kind, **kw)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, EcseqError):
            raise
        raise UsageError(str(exc)) from None
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "L", "bound_num", "bound_den", "holds"])
    for r in rep.rows:
        w.writerow([r.N, r.L, r.bound.numerator, r.bound.denominator,
                    "true" if r.holds else "false"])
    _emit(buf.getvalue(), args.out)
    summary = (f"{kind}: {rep.verdict}; rows={len(rep.rows)} margin={rep.margin} "
               f"provenance={rep.provenance}")
    if rep.max_kappa is not None:
        summary += f" kappa={rep.kappa} max_kappa={rep.max_kappa}"
    if rep.provenance == "user_declared":
        summary += " (conditional on declared metadata)"
    print(summary, file=sys.stderr)
    return EXIT_OK if rep.holds else EXIT_VIOLATED


def cmd_sweep(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            config = parse_config(fh.read())
    except (OSError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    rows = run_sweep(config)
    _emit(to_csv(rows), args.out or config.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecseq", allow_abbrev=False,
        description="Elliptic curve sequences and their linear complexity profiles.",
    )
    parser.add_argument("--version", action="version", version=f"ecseq {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    curve = sub.add_parser("curve", help="curve utilities", allow_abbrev=False)
    curve_sub = curve.add_subparsers(dest="curve_command", required=True)
    info = curve_sub.add_parser("info", help="cardinality, Hasse interval, orders",
                                allow_abbrev=False)
    add_curve_flags(info)
    info.add_argument("--samples", type=int, default=8)
    info.add_argument("--out")
    info.set_defaults(func=cmd_curve_info)

    seq = sub.add_parser("seq", help="generate a sequence", allow_abbrev=False)
    add_instance_flags(seq)
    seq.add_argument("--n", type=int, required=True)
    seq.add_argument("--out")
    seq.set_defaults(func=cmd_seq)

    prof = sub.add_parser("profile", help="linear complexity profile as CSV",
                          allow_abbrev=False)
    prof.add_argument("input", nargs="?", help="term file (default stdin)")
    prof.add_argument("--p", type=int)
    prof.add_argument("--oracle", action="store_true",
                      help="cross-check against the brute-force oracle when small enough")
    prof.add_argument("--out")
    prof.set_defaults(func=cmd_profile)

    ver = sub.add_parser("verify", help="check a lower bound over N <= 2t",
                         allow_abbrev=False)
    add_instance_flags(ver)
    ver.add_argument("--bound", choices=["thm1", "hs", "thm2", "linear"], required=True)
    ver.add_argument("--kappa", default="1")
    ver.add_argument("--slope", help="slope for --bound linear, e.g. 1/10")
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)

    sw = sub.add_parser("sweep", help="run a sweep config", allow_abbrev=False)
    sw.add_argument("config")
    sw.add_argument("--out")
    sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PoleAtPoint as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_POLE
    except ModulusMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODULUS
    except (UsageError, EcseqError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

"""Parameter sweeps over small curves.

Config grammar (one ``key = value`` per line, ``#`` starts a comment)::

    primes       = 5..500          # inclusive range or comma list; repeatable
    prime_filter = all             # all | 1mod4 | 3mod4
    d            = smallest_nonsquare   # or a fixed integer
    c            = 1
    function     = u+v             # catalog name or expression; repeatable
    function     = u*v; degree=4; omega=1,1     # user-declared metadata
    generator    = linear          # linear | power; repeatable
    e_count      = 3               # smallest e >= 2 coprime to |G|
    e            = 3, 5            # explicit exponents (overrides e_count)
    kappa        = 1
    pole_value   = 0               # substituted where f has a pole (e.g. x at O)
    seed         = 0
    threads      = 1
    out          = results.csv

Functions in ``u, v`` run on the Edwards curve ``u^2 + v^2 = c^2(1 + d u^2 v^2)``
with a point ``G`` of maximal order; functions in ``x, y`` run on the
birationally equivalent Weierstrass model with base point ``psi^-1(G)``.
Linear generators are checked against the ideal-point bound (Edwards) or the
Hess-Shparlinski bound (Weierstrass), power generators against the
``t / (|G|^(2/3) deg f^(1/3))`` expression.
"""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bounds import verify
from .complexity import linear_complexity_periodic
from .curves import EdwardsCurve, WeierstrassCurve, find_point_of_order, point_orders, psi_inv
from .errors import EcseqError
from .field import is_prime, legendre_symbol, smallest_nonsquare
from .functions import HSShape, RationalMap, lookup, make_user_map
from .generators import ECLinear, ECPower, ec_linear_seq, ec_power_seq

COLUMNS = [
    "p", "d", "c", "model", "function", "provenance", "generator", "e", "G",
    "t", "order_G", "deg_f", "bound", "L_final", "bound_num", "bound_den",
    "verdict", "margin", "max_kappa", "error",
]


class ConfigError(ValueError):
    pass


def model_for_expression(expr: str) -> str:
    """Curve model implied by the variables in ``expr`` (``g`` names the catalog map)."""
    if "".join(expr.split()) == "g" or {"x", "y"} & set(expr):
        return "weierstrass"
    return "edwards"


@dataclass(frozen=True)
class FunctionEntry:
    expr: str
    degree: int | None = None
    omega: tuple[bool, bool] | None = None
    deg_H: int | None = None
    delta: int | None = None
    at_infinity: int | None = None

    @property
    def model(self) -> str:
        return model_for_expression(self.expr)


@dataclass(frozen=True)
class SweepConfig:
    primes: tuple[int, ...]
    d_rule: str = "smallest_nonsquare"
    c: int = 1
    functions: tuple[FunctionEntry, ...] = (FunctionEntry("u+v"),)
    generators: tuple[str, ...] = ("linear",)
    e_count: int = 3
    e_values: tuple[int, ...] = ()
    kappa: Fraction = Fraction(1)
    pole_value: int | None = None
    seed: int = 0
    threads: int | None = None
    out: str | None = None


def _parse_primes(value: str) -> list[int]:
    out = []
    for part in value.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = (int(x) for x in part.split(".."))
            out.extend(q for q in range(lo, hi + 1) if is_prime(q))
        else:
            out.append(int(part))
    return out


def _parse_function(value: str) -> FunctionEntry:
    expr, *opts = [s.strip() for s in value.split(";")]
    kw: dict = {}
    for opt in opts:
        if not opt:
            continue
        k, _, v = opt.partition("=")
        k, v = k.strip(), v.strip()
        if k == "degree":
            kw["degree"] = int(v)
        elif k == "omega":
            flags = [int(x) for x in v.split(",")]
            if len(flags) != 2:
                raise ConfigError(f"omega needs two flags, got {v!r}")
            kw["omega"] = (bool(flags[0]), bool(flags[1]))
        elif k == "deg_H":
            kw["deg_H"] = int(v)
        elif k == "delta":
            kw["delta"] = int(v)
        elif k == "at_infinity":
            kw["at_infinity"] = int(v)
        else:
            raise ConfigError(f"unknown function option {k!r}")
    return FunctionEntry(expr, **kw)


def parse_config(text: str) -> SweepConfig:
    primes: list[int] = []
    functions: list[FunctionEntry] = []
    generators: list[str] = []
    prime_filter = "all"
    kw: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = key.strip(), value.strip()
        try:
            if key == "primes":
                primes.extend(_parse_primes(value))
            elif key == "prime_filter":
                if value not in ("all", "1mod4", "3mod4"):
                    raise ConfigError(f"unknown prime_filter {value!r}")
                prime_filter = value
            elif key == "d":
                if value != "smallest_nonsquare":
                    int(value)
                kw["d_rule"] = value
            elif key == "c":
                kw["c"] = int(value)
            elif key == "function":
                functions.append(_parse_function(value))
            elif key == "generator":
                if value not in ("linear", "power"):
                    raise ConfigError(f"unknown generator {value!r}")
                generators.append(value)
            elif key == "e_count":
                kw["e_count"] = int(value)
            elif key == "e":
                kw["e_values"] = tuple(int(x) for x in value.split(",") if x.strip())
            elif key == "kappa":
                kw["kappa"] = Fraction(value)
            elif key == "pole_value":
                kw["pole_value"] = int(value)
            elif key == "seed":
                kw["seed"] = int(value)
            elif key == "threads":
                kw["threads"] = int(value)
            elif key == "out":
                kw["out"] = value
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"line {lineno}: bad value for {key!r}: {value!r}") from None
    if not primes:
        raise ConfigError("config lists no primes")
    if prime_filter != "all":
        want = 1 if prime_filter == "1mod4" else 3
        primes = [q for q in primes if q % 4 == want]
    for q in primes:
        if not is_prime(q) or q < 5:
            raise ConfigError(f"{q} is not an odd prime >= 5")
    if functions:
        kw["functions"] = tuple(functions)
    if generators:
        kw["generators"] = tuple(generators)
    return SweepConfig(primes=tuple(dict.fromkeys(primes)), **kw)


def resolve_function(entry: FunctionEntry, d: int, c: int) -> RationalMap:
    model = entry.model
    declared = entry.degree is not None
    if not declared:
        f = lookup(model, entry.expr, d)
        if f is None:
            raise ConfigError(f"{entry.expr!r} is not a catalog function; declare degree=")
        return f
    hs = HSShape(entry.deg_H, entry.delta) if entry.deg_H is not None else None
    return make_user_map(
        entry.expr,
        declared_degree=entry.degree,
        model=model,
        omega_pole=entry.omega if model == "edwards" else None,
        hs_shape=hs,
        value_at_infinity=entry.at_infinity,
        constants={"c": c, "d": d},
    )


@dataclass(frozen=True)
class Instance:
    p: int
    d: int
    c: int
    entry: FunctionEntry
    generator: str
    e: int | None
    kappa: Fraction
    pole_value: int | None


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, tuple):
        return "(" + " ".join(str(v) for v in x) + ")"
    return str(x)


@lru_cache(maxsize=64)
def edwards_setup(p: int, c: int, d: int):
    """Edwards curve and its lexicographically first point of maximal order."""
    C = EdwardsCurve(p, c, d)
    G = find_point_of_order(C)
    return C, G, point_orders(C)[G]


def exponents_for(order: int, count: int) -> list[int]:
    out = []
    e = 2
    while len(out) < count and e < 2 + 64 * order:
        if math.gcd(e, order) == 1:
            out.append(e)
        e += 1
    return out


def choose_d(p: int, rule: str) -> int:
    return smallest_nonsquare(p) if rule == "smallest_nonsquare" else int(rule) % p


def plan(config: SweepConfig) -> list[dict | Instance]:
    """Expand a config into instances, in output order.

    Entries that are already known to fail (square ``d``) come back as
    partially filled row dicts.
    """
    work: list[dict | Instance] = []
    for p in config.primes:
        d = choose_d(p, config.d_rule)
        base = {"p": p, "d": d, "c": config.c}
        if legendre_symbol(d, p) != -1:
            work.append({**base, "error": f"legendre(d) = {legendre_symbol(d, p)} (need -1)"})
            continue
        order = None
        for entry in config.functions:
            for gen in config.generators:
                if gen == "linear":
                    work.append(Instance(p, d, config.c, entry, gen, None, config.kappa,
                                         config.pole_value))
                    continue
                if config.e_values:
                    es = list(config.e_values)
                else:
                    if order is None:
                        order = edwards_setup(p, config.c, d)[2]
                    es = exponents_for(order, config.e_count)
                work.extend(
                    Instance(p, d, config.c, entry, gen, e, config.kappa, config.pole_value)
                    for e in es
                )
    return work


def run_instance(inst: Instance) -> dict:
    row: dict = {
        "p": inst.p, "d": inst.d, "c": inst.c, "model": inst.entry.model,
        "function": inst.entry.expr, "generator": inst.generator, "e": inst.e,
    }
    try:
        f = resolve_function(inst.entry, inst.d, inst.c)
        row["provenance"] = "catalog" if f.provenance == "catalog" else "declared"
        C, G, order = edwards_setup(inst.p, inst.c, inst.d)
        curve, base = C, G
        if f.model == "weierstrass":
            curve, base = WeierstrassCurve.edwards_model(inst.p, inst.d), psi_inv(C, G)
        row.update(G=tuple(base), order_G=order, deg_f=f.declared_degree)
        if inst.generator == "linear":
            spec = ECLinear(curve, base, f)
            seq = ec_linear_seq(spec, 2 * order, pole_value=inst.pole_value)
            if f.model == "edwards" and f.has_omega_pole:
                kind = "thm1"
            elif f.model == "weierstrass" and f.hs_shape is not None:
                kind = "hs"
            else:
                kind = None
        else:
            spec = ECPower(curve, base, inst.e, f)
            t = ec_power_seq(spec, 1).period
            seq = ec_power_seq(spec, 2 * t, pole_value=inst.pole_value)
            kind = "thm2"
        row["t"] = seq.period
        if kind is None:
            row.update(bound="none", L_final=linear_complexity_periodic(seq), verdict="n/a")
            return row
        rep = verify(seq, kind, kappa=inst.kappa)
        last = rep.rows[-1]
        row.update(
            bound=kind,
            L_final=last.L,
            bound_num=last.bound.numerator,
            bound_den=last.bound.denominator,
            verdict=rep.verdict,
            margin=rep.margin,
            max_kappa=rep.max_kappa,
        )
    except (EcseqError, ConfigError, ValueError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def worker_count(config: SweepConfig) -> int:
    env = os.environ.get("ECSEQ_THREADS")
    n = config.threads if config.threads is not None else 1
    if env:
        n = min(n, int(env)) if config.threads is not None else int(env)
    return max(1, n)


def run_sweep(config: SweepConfig) -> list[dict]:
    work = plan(config)
    todo = [w for w in work if isinstance(w, Instance)]
    threads = worker_count(config)
    if threads > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            done = list(pool.map(run_instance, todo, chunksize=4))
    else:
        done = [run_instance(w) for w in todo]
    results = iter(done)
    return [next(results) if isinstance(w, Instance) else w for w in work]


def to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow([_fmt(row.get(col)) for col in COLUMNS])
    return buf.getvalue()

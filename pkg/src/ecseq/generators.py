"""Sequence generators.

Index convention: every generator is indexed from ``n = 1`` in reports, while
``terms[k]`` holds the term with index ``n = k + 1``.  The baselines (linear
congruential and power generator) store ``terms[0] = x_0`` instead, because
their recurrence starts from a seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .curves import Curve, point_order
from .errors import InvalidExponent, NotCoprime, PoleAtPoint, ScaleExceeded
from .field import factorize
from .functions import RationalMap, evaluate_int


@dataclass(frozen=True)
class ECLinear:
    """``w_n = f(nG)``."""

    curve: Curve
    G: object
    f: RationalMap


@dataclass(frozen=True)
class ECPower:
    """``r_n = f(e^n G)``; requires ``gcd(e, |G|) = 1``."""

    curve: Curve
    G: object
    e: int
    f: RationalMap


@dataclass(frozen=True)
class LCG:
    """``x_n = a x_{n-1} + b mod m`` from ``x_0``."""

    a: int
    b: int
    m: int
    x0: int

    def __post_init__(self) -> None:
        if math.gcd(self.a, self.m) != 1 or math.gcd(self.x0, self.m) != 1:
            raise NotCoprime("linear generator needs gcd(a, m) = gcd(x0, m) = 1")


@dataclass(frozen=True)
class ClassicPower:
    """``u_n = u_{n-1}^e mod m`` from ``u_0``."""

    e: int
    m: int
    u0: int

    def __post_init__(self) -> None:
        if self.e < 2:
            raise InvalidExponent("power generator exponent must be >= 2")
        if math.gcd(self.u0, self.m) != 1:
            raise NotCoprime("power generator needs gcd(u0, m) = 1")


SequenceSpec = Union[ECLinear, ECPower, LCG, ClassicPower]


@dataclass(frozen=True)
class GeneratedSequence:
    """Residues modulo ``modulus``; eventually periodic with the given period.

    ``preperiod`` is the number of leading terms outside the cycle (zero for
    every generator except possibly :class:`ClassicPower`).
    """

    terms: tuple[int, ...]
    modulus: int
    spec: SequenceSpec
    period: int
    preperiod: int = 0

    def __len__(self) -> int:
        return len(self.terms)

    def extended(self, count: int) -> tuple[int, ...]:
        """First ``count`` terms, continued by periodicity past the stored window."""
        if count <= len(self.terms):
            return self.terms[:count]
        out = list(self.terms)
        k, t = self.preperiod, self.period
        if len(out) < k + t:
            raise ValueError("stored window does not cover one full period")
        while len(out) < count:
            out.append(out[k + (len(out) - k) % t])
        return tuple(out)


def mult_order(e: int, n: int) -> int:
    """Multiplicative order of ``e`` modulo ``n``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(e, n) != 1:
        raise NotCoprime(f"gcd({e}, {n}) != 1")
    if n == 1:
        return 1
    phi = 1
    for q, k in factorize(n).items():
        phi *= (q - 1) * q ** (k - 1)
    t = phi
    for q in factorize(phi):
        while t % q == 0 and pow(e, t // q, n) == 1:
            t //= q
    return t


def _group_order(curve: Curve, G) -> int:
    try:
        n = curve.cardinality
    except ScaleExceeded:
        return point_order(curve, G)
    return point_order(curve, G, n)


def _evaluate_all(f: RationalMap, curve: Curve, points, pole_value: int | None) -> tuple:
    out = []
    for k, P in enumerate(points):
        try:
            out.append(evaluate_int(f, curve, P))
        except PoleAtPoint as exc:
            if pole_value is None:
                raise PoleAtPoint(P, index=k + 1) from exc
            out.append(pole_value % curve.p)
    return tuple(out)


def ec_linear_seq(spec: ECLinear, n: int, *, pole_value: int | None = None) -> GeneratedSequence:
    """First ``n`` terms ``f(G), f(2G), ..., f(nG)``.

    A pole of ``f`` at some ``kG`` raises :class:`PoleAtPoint` with ``index=k``
    unless ``pole_value`` is given, in which case that residue is substituted.
    """
    if n < 1:
        raise ValueError("need at least one term")
    curve, G = spec.curve, spec.G
    if G == curve.neutral:
        raise ValueError("base point must not be the neutral element")
    t = _group_order(curve, G)
    points = curve.multiples(G, n)
    terms = _evaluate_all(spec.f, curve, points, pole_value)
    return GeneratedSequence(terms, curve.p, spec, t)


def ec_power_points(spec: ECPower, n: int) -> list:
    """``G_1, ..., G_n`` with ``G_k = e G_{k-1}``, ``G_0 = G``."""
    curve = spec.curve
    out = []
    P = spec.G
    for _ in range(n):
        P = curve.mul(spec.e, P)
        out.append(P)
    return out


def ec_power_seq(spec: ECPower, n: int, *, pole_value: int | None = None) -> GeneratedSequence:
    """First ``n`` terms ``f(G_1), ..., f(G_n)``; period is the order of ``e`` mod ``|G|``."""
    if n < 1:
        raise ValueError("need at least one term")
    if spec.e < 2:
        raise InvalidExponent("power generator exponent must be >= 2")
    order = _group_order(spec.curve, spec.G)
    if math.gcd(spec.e, order) != 1:
        raise InvalidExponent(f"gcd(e={spec.e}, |G|={order}) != 1")
    t = mult_order(spec.e, order)
    terms = _evaluate_all(spec.f, spec.curve, ec_power_points(spec, n), pole_value)
    return GeneratedSequence(terms, spec.curve.p, spec, t)


def lcg_seq(spec: LCG, n: int) -> GeneratedSequence:
    """``x_0, ..., x_{n-1}``."""
    m = spec.m
    x = spec.x0 % m
    terms = []
    for _ in range(n):
        terms.append(x)
        x = (spec.a * x + spec.b) % m
    # affine bijection mod m: purely periodic, period = cycle length through x0
    t, y = 1, (spec.a * spec.x0 + spec.b) % m
    while y != spec.x0 % m:
        y = (spec.a * y + spec.b) % m
        t += 1
    return GeneratedSequence(tuple(terms), m, spec, t)


def classic_power_seq(spec: ClassicPower, n: int) -> GeneratedSequence:
    """``u_0, ..., u_{n-1}``."""
    m = spec.m
    u = spec.u0 % m
    terms = []
    for _ in range(n):
        terms.append(u)
        u = pow(u, spec.e, m)
    seen: dict[int, int] = {}
    u, k = spec.u0 % m, 0
    while u not in seen:
        seen[u] = k
        u = pow(u, spec.e, m)
        k += 1
    return GeneratedSequence(tuple(terms), m, spec, k - seen[u], preperiod=seen[u])


def generate(spec: SequenceSpec, n: int, **kwargs) -> GeneratedSequence:
    if isinstance(spec, ECLinear):
        return ec_linear_seq(spec, n, **kwargs)
    if isinstance(spec, ECPower):
        return ec_power_seq(spec, n, **kwargs)
    if isinstance(spec, LCG):
        return lcg_seq(spec, n)
    if isinstance(spec, ClassicPower):
        return classic_power_seq(spec, n)
    raise TypeError(f"unknown sequence spec {spec!r}")

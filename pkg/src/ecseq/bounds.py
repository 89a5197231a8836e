"""Lower bounds on linear complexity, evaluated exactly and checked against profiles.

All bound values are :class:`fractions.Fraction`; verdicts compare them with
integer complexities, so no tolerance is involved anywhere.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .complexity import bm_profile
from .errors import InconsistentDelta, RangeError
from .generators import ECLinear, ECPower, GeneratedSequence, _group_order

BoundKind = Literal["thm1", "hs", "thm2", "linear"]


def thm1_bound(t: int, deg_f: int, N: int) -> Fraction:
    """``min{(t - deg f) / (4 deg f), (N - deg f) / (4 deg f + 1)}`` for ``N >= deg f``."""
    if deg_f < 1 or t < 1:
        raise ValueError("need t >= 1 and deg f >= 1")
    if N < deg_f:
        raise RangeError(f"bound only stated for N >= deg f ({N} < {deg_f})")
    return min(Fraction(t - deg_f, 4 * deg_f), Fraction(N - deg_f, 4 * deg_f + 1))


def hs_bound(t: int, deg_H: int, delta: int, N: int) -> Fraction:
    """``min{N / ((1+delta) deg H + 2), t / ((1+delta) deg H + 1)}``; delta = 1 iff deg H = 1."""
    if deg_H < 1:
        raise ValueError("deg H must be positive")
    if delta != (1 if deg_H == 1 else 0):
        raise InconsistentDelta(f"delta={delta} does not match deg H={deg_H}")
    w = (1 + delta) * deg_H
    return min(Fraction(N, w + 2), Fraction(t, w + 1))


def _icbrt_ceil(n: int) -> int:
    r = round(n ** (1 / 3)) if n > 0 else 0
    while r**3 < n:
        r += 1
    while r > 0 and (r - 1) ** 3 >= n:
        r -= 1
    return r


def thm2_expr(t: int, order_G: int, deg_f: int) -> Fraction:
    """``t / (|G|^(2/3) (deg f)^(1/3))`` rounded down to a rational.

    The denominator is replaced by ``ceil((|G|^2 deg f)^(1/3))`` so the result
    never exceeds the real value.
    """
    if order_G < 2 or deg_f < 1:
        raise ValueError("need |G| >= 2 and deg f >= 1")
    if deg_f >= order_G:
        warnings.warn(
            f"deg f = {deg_f} >= |G| = {order_G}: degree hypothesis cannot hold",
            stacklevel=2,
        )
    return Fraction(t, _icbrt_ceil(order_G * order_G * deg_f))


@dataclass(frozen=True)
class BoundRow:
    N: int
    L: int
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.L >= self.bound


@dataclass(frozen=True)
class BoundReport:
    kind: BoundKind
    instance: dict
    rows: tuple[BoundRow, ...]
    provenance: str = "catalog"
    kappa: Fraction | None = None
    max_kappa: Fraction | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.rows)

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "violated"

    @property
    def margin(self) -> Fraction | None:
        return min((r.L - r.bound for r in self.rows), default=None)

    @property
    def final_L(self) -> int:
        return self.rows[-1].L if self.rows else 0

    def violations(self) -> list[BoundRow]:
        return [r for r in self.rows if not r.holds]


def describe_instance(seq: GeneratedSequence) -> dict:
    spec = seq.spec
    info: dict = {"p": seq.modulus, "t": seq.period}
    if isinstance(spec, (ECLinear, ECPower)):
        info.update(
            curve=str(spec.curve),
            G=tuple(spec.G) if isinstance(spec.G, tuple) else str(spec.G),
            order_G=_group_order(spec.curve, spec.G),
            f=spec.f.name or spec.f.describe(),
            deg_f=spec.f.declared_degree,
        )
        if isinstance(spec, ECPower):
            info["e"] = spec.e
    return info


INDEX_NOTE = "sequence indexed from n = 1 (term k is f at (k)G or G_k)"


def verify(
    seq: GeneratedSequence,
    kind: BoundKind,
    *,
    kappa: Fraction | int = 1,
    slope: Fraction | None = None,
    deg_H: int | None = None,
    delta: int | None = None,
) -> BoundReport:
    """Check ``seq`` against a bound over the window ``N <= 2t``.

    ``thm1`` needs an Edwards function with an ideal-point pole, ``hs`` a
    Weierstrass function whose pole divisor shape is known (or ``deg_H`` and
    ``delta``), ``thm2`` an elliptic curve power sequence.  ``linear`` checks
    ``L(s, N) >= slope * N`` and is meant for the classic baselines.
    """
    t = seq.period
    window = 2 * (seq.preperiod + t)
    prof = bm_profile(seq.extended(window), seq.modulus)
    info = describe_instance(seq)
    spec = seq.spec
    f = getattr(spec, "f", None)
    provenance = f.provenance if f is not None else "n/a"
    notes = (INDEX_NOTE,) if f is not None else ()

    if kind == "thm1":
        if not isinstance(spec, ECLinear) or f.model != "edwards":
            raise ValueError("thm1 applies to w_n = f(nG) on an Edwards curve")
        if not f.has_omega_pole:
            raise ValueError(f"{f.name}: no pole at an ideal point declared")
        deg = f.declared_degree
        rows = tuple(
            BoundRow(N, prof.profile[N - 1], thm1_bound(t, deg, N))
            for N in range(deg, window + 1)
        )
        return BoundReport(kind, info, rows, provenance, notes=notes)

    if kind == "hs":
        if not isinstance(spec, ECLinear) or f.model != "weierstrass":
            raise ValueError("hs applies to w_n = f(nG) on a Weierstrass curve")
        if deg_H is None:
            if f.hs_shape is None:
                raise ValueError(f"{f.name}: pole divisor is not of the form (1+delta)H")
            deg_H, delta = f.hs_shape.deg_H, f.hs_shape.delta
        rows = tuple(
            BoundRow(N, prof.profile[N - 1], hs_bound(t, deg_H, delta, N))
            for N in range(1, window + 1)
        )
        return BoundReport(kind, info, rows, provenance, notes=notes)

    if kind == "thm2":
        if not isinstance(spec, ECPower):
            raise ValueError("thm2 applies to r_n = f(e^n G)")
        kappa = Fraction(kappa)
        if f.declared_degree >= info["order_G"]:
            notes += (f"deg f = {f.declared_degree} >= |G| = {info['order_G']}",)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            expr = thm2_expr(t, info["order_G"], f.declared_degree)
        L = prof.final
        row = BoundRow(window, L, kappa * expr)
        max_kappa = Fraction(L) / expr if expr else None
        return BoundReport(kind, info, (row,), provenance, kappa=kappa,
                           max_kappa=max_kappa, notes=notes)

    if kind == "linear":
        if slope is None or slope <= 0:
            raise ValueError("linear bound needs a positive slope")
        slope = Fraction(slope)
        rows = tuple(BoundRow(N, prof.profile[N - 1], slope * N) for N in range(1, window + 1))
        return BoundReport(kind, info, rows, provenance)

    raise ValueError(f"unknown bound kind {kind!r}")


def max_kappa_floor(reports) -> Fraction | None:
    """Smallest recorded ``max_kappa`` over a collection of thm2 reports."""
    values = [r.max_kappa for r in reports if r.max_kappa is not None]
    return min(values) if values else None


__all__ = [
    "BoundReport",
    "BoundRow",
    "hs_bound",
    "max_kappa_floor",
    "thm1_bound",
    "thm2_expr",
    "verify",
]

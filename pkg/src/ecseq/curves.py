"""Weierstrass and Edwards curve models over prime fields.

Coordinates are stored as canonical ``int`` residues modulo the curve prime;
the curve object owns the modulus.  Weierstrass points are :class:`WPoint`
tuples or the :data:`INFINITY` singleton, Edwards points are :class:`EPoint`
tuples (every F_p-point of an Edwards curve with non-square ``d`` is affine).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Union

from .errors import (
    CurveShapeMismatch,
    DenominatorZero,
    ExceptionalPoint,
    InvalidCurve,
    NoSuchPoint,
    PointNotOnCurve,
    ResultAtInfinity,
    ScaleExceeded,
)
from .field import PrimeModulus, factorize, inv_mod, legendre_symbol, sqrt_mod

ENUMERATION_LIMIT = 10**6


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class WPoint(NamedTuple):
    x: int
    y: int


class EPoint(NamedTuple):
    u: int
    v: int


class ProjEPoint(NamedTuple):
    U: int
    V: int
    Z: int


AnyWPoint = Union[WPoint, _Infinity]


def _sort_key(point) -> tuple:
    if point is INFINITY:
        return (-1, -1)
    return tuple(point)


@dataclass(frozen=True)
class WeierstrassCurve:
    """``y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6`` over F_p."""

    p: int
    a1: int = 0
    a2: int = 0
    a3: int = 0
    a4: int = 0
    a6: int = 0
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        PrimeModulus(self.p)
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, getattr(self, name) % self.p)
        if self.discriminant() == 0:
            raise InvalidCurve(f"singular Weierstrass curve over F_{self.p} (discriminant 0)")

    @classmethod
    def edwards_model(cls, p: int, d: int) -> WeierstrassCurve:
        """``y^2 = x^3 + 2(1+d) x^2 + (1-d)^2 x``, the model matched by :func:`psi`."""
        return cls(p, a2=2 * (1 + d), a4=(1 - d) ** 2)

    def discriminant(self) -> int:
        p = self.p
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return (-b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6) % p

    @property
    def neutral(self) -> _Infinity:
        return INFINITY

    def contains(self, P) -> bool:
        if P is INFINITY:
            return True
        x, y = P
        p = self.p
        if not (0 <= x < p and 0 <= y < p):
            return False
        lhs = y * y + (self.a1 * x + self.a3) * y
        rhs = x**3 + self.a2 * x * x + self.a4 * x + self.a6
        return (lhs - rhs) % p == 0

    def _check(self, *points) -> None:
        for P in points:
            if not self.contains(P):
                raise PointNotOnCurve(f"{P} is not on {self}")

    def neg(self, P):
        self._check(P)
        if P is INFINITY:
            return P
        x, y = P
        return WPoint(x, (-y - self.a1 * x - self.a3) % self.p)

    def add(self, P, Q):
        self._check(P, Q)
        return self._add(P, Q)

    def _add(self, P, Q):
        if P is INFINITY:
            return Q
        if Q is INFINITY:
            return P
        p = self.p
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            s = (2 * y1 + self.a1 * x1 + self.a3) % p
            if y1 != y2 or s == 0:
                return INFINITY
            lam = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4 - self.a1 * y1) * inv_mod(s, p) % p
        else:
            lam = (y2 - y1) * inv_mod(x2 - x1, p) % p
        x3 = (lam * lam + self.a1 * lam - self.a2 - x1 - x2) % p
        y3 = (-(lam + self.a1) * x3 - (y1 - lam * x1) - self.a3) % p
        return WPoint(x3, y3)

    def mul(self, n: int, P):
        self._check(P)
        if n < 0:
            return self.mul(-n, self.neg(P))
        result = INFINITY
        addend = P
        while n:
            if n & 1:
                result = self._add(result, addend)
            addend = self._add(addend, addend)
            n >>= 1
        return result

    def multiples(self, P, count: int) -> list:
        """``[1P, 2P, ..., count P]`` by one addition per step."""
        from ._backend import weierstrass_multiples

        self._check(P)
        if P is INFINITY:
            return [INFINITY] * count
        xs, ys = weierstrass_multiples(
            self.p, self.a1, self.a2, self.a3, self.a4, self.a6, P.x, P.y, count
        )
        return [INFINITY if x < 0 else WPoint(x, y) for x, y in zip(xs, ys)]

    def points(self) -> list:
        """All F_p-points, ``INFINITY`` first, then affine points sorted by (x, y)."""
        return list(self._points)

    @cached_property
    def _points(self) -> tuple:
        p = self.p
        if p > ENUMERATION_LIMIT:
            raise ScaleExceeded(f"point enumeration capped at p <= {ENUMERATION_LIMIT}")
        half = inv_mod(2, p)
        out: list = [INFINITY]
        for x in range(p):
            b = (self.a1 * x + self.a3) % p
            rhs = (x**3 + self.a2 * x * x + self.a4 * x + self.a6) % p
            # (2y + b)^2 = 4 rhs + b^2
            disc = (4 * rhs + b * b) % p
            ls = legendre_symbol(disc, p)
            if ls == -1:
                continue
            r = sqrt_mod(disc, p)
            ys = {(r - b) * half % p, (-r - b) * half % p}
            out.extend(WPoint(x, y) for y in sorted(ys))
        return tuple(out)

    @cached_property
    def cardinality(self) -> int:
        return len(self._points)

    def __str__(self) -> str:
        def side(terms):
            parts = [f"{c}{m}" if c != 1 or not m else m for c, m in terms if c]
            return " + ".join(parts) if parts else "0"

        lhs = side([(1, "y^2"), (self.a1, "xy"), (self.a3, "y")])
        rhs = side([(1, "x^3"), (self.a2, "x^2"), (self.a4, "x"), (self.a6, "")])
        return f"{lhs} = {rhs} over F_{self.p}"


@dataclass(frozen=True)
class EdwardsCurve:
    """``u^2 + v^2 = c^2 (1 + d u^2 v^2)`` over F_p with non-square ``d``."""

    p: int
    c: int
    d: int
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        PrimeModulus(self.p)
        p = self.p
        object.__setattr__(self, "c", self.c % p)
        object.__setattr__(self, "d", self.d % p)
        if self.c == 0:
            raise InvalidCurve("Edwards parameter c must be nonzero")
        if self.d in (0, 1):
            raise InvalidCurve("Edwards parameter d must differ from 0 and 1")
        if legendre_symbol(self.d, p) != -1:
            raise InvalidCurve(
                f"Edwards parameter d={self.d} is a square mod {p} (legendre(d) = "
                f"{legendre_symbol(self.d, p)}); the affine addition law needs legendre(d) = -1"
            )

    @property
    def neutral(self) -> EPoint:
        return EPoint(0, self.c)

    def contains(self, P) -> bool:
        if not isinstance(P, tuple) or len(P) != 2:
            return False
        u, v = P
        p = self.p
        if not (0 <= u < p and 0 <= v < p):
            return False
        uu, vv = u * u, v * v
        return (uu + vv - self.c * self.c * (1 + self.d * uu * vv)) % p == 0

    def _check(self, *points) -> None:
        for P in points:
            if not self.contains(P):
                raise PointNotOnCurve(f"{P} is not on {self}")

    def neg(self, P: EPoint) -> EPoint:
        self._check(P)
        return EPoint(-P.u % self.p, P.v)

    def add(self, P: EPoint, Q: EPoint) -> EPoint:
        self._check(P, Q)
        return self._add(P, Q)

    def _add(self, P, Q) -> EPoint:
        p, c, d = self.p, self.c, self.d
        u1, v1 = P
        u2, v2 = Q
        t = d * u1 * u2 * v1 * v2
        den_u = c * (1 + t) % p
        den_v = c * (1 - t) % p
        if den_u == 0 or den_v == 0:
            raise DenominatorZero(f"Edwards addition denominator vanished for {P}, {Q}")
        return EPoint(
            (u1 * v2 + u2 * v1) * inv_mod(den_u, p) % p,
            (v1 * v2 - u1 * u2) * inv_mod(den_v, p) % p,
        )

    def mul(self, n: int, P: EPoint) -> EPoint:
        self._check(P)
        if n < 0:
            return self.mul(-n, self.neg(P))
        result = self.neutral
        addend = P
        while n:
            if n & 1:
                result = self._add(result, addend)
            addend = self._add(addend, addend)
            n >>= 1
        return result

    def multiples(self, P: EPoint, count: int) -> list[EPoint]:
        """``[1P, 2P, ..., count P]`` by one addition per step."""
        from ._backend import edwards_multiples

        self._check(P)
        us, vs = edwards_multiples(self.p, self.c, self.d, P.u, P.v, count)
        return [EPoint(u, v) for u, v in zip(us, vs)]

    # projective form, used only to cross-check the affine law

    def lift(self, P: EPoint) -> ProjEPoint:
        return ProjEPoint(P.u, P.v, 1)

    def normalize(self, P: ProjEPoint) -> EPoint:
        if P.Z % self.p == 0:
            raise ResultAtInfinity(f"{P} is an ideal point")
        zi = inv_mod(P.Z, self.p)
        return EPoint(P.U * zi % self.p, P.V * zi % self.p)

    def proj_contains(self, P: ProjEPoint) -> bool:
        # affine equation with denominators cleared: c^2, not the printed c
        U, V, Z = P
        if (U % self.p, V % self.p, Z % self.p) == (0, 0, 0):
            return False
        c2 = self.c * self.c
        lhs = U * U * Z * Z + V * V * Z * Z
        rhs = c2 * (Z**4 + self.d * U * U * V * V)
        return (lhs - rhs) % self.p == 0

    def proj_add(self, P: ProjEPoint, Q: ProjEPoint) -> ProjEPoint:
        """Projective addition through the A..G intermediate chain."""
        for R in (P, Q):
            if R.Z % self.p == 0 or not self.proj_contains(R):
                raise PointNotOnCurve(f"{R} is not an affine projective point of {self}")
        p = self.p
        U1, V1, Z1 = P
        U2, V2, Z2 = Q
        A = Z1 * Z2 % p
        B = A * A % p
        C = U1 * U2 % p
        D = V1 * V2 % p
        E = self.d * C * D % p
        F = (B - E) % p
        G = (B + E) % p
        U3 = A * F * ((U1 + V1) * (U2 + V2) - C - D) % p
        V3 = A * G * (D - C) % p
        Z3 = self.c * F * G % p
        if Z3 == 0:
            raise ResultAtInfinity(f"projective sum of {P} and {Q} is ideal")
        return ProjEPoint(U3, V3, Z3)

    def points(self) -> list[EPoint]:
        """All F_p-points sorted by (u, v)."""
        return list(self._points)

    @cached_property
    def _points(self) -> tuple:
        p = self.p
        if p > ENUMERATION_LIMIT:
            raise ScaleExceeded(f"point enumeration capped at p <= {ENUMERATION_LIMIT}")
        c2 = self.c * self.c % p
        out = []
        for u in range(p):
            uu = u * u % p
            # v^2 (1 - c^2 d u^2) = c^2 - u^2; the factor never vanishes for non-square d
            rhs = (c2 - uu) * inv_mod(1 - c2 * self.d * uu, p) % p
            if legendre_symbol(rhs, p) == -1:
                continue
            r = sqrt_mod(rhs, p)
            out.extend(EPoint(u, v) for v in sorted({r, -r % p}))
        return tuple(out)

    @cached_property
    def cardinality(self) -> int:
        return len(self._points)

    def __str__(self) -> str:
        return f"u^2 + v^2 = {self.c}^2(1 + {self.d}u^2v^2) over F_{self.p}"


Curve = Union[WeierstrassCurve, EdwardsCurve]


# module-level spellings of the group law


def w_add(E: WeierstrassCurve, P, Q):
    return E.add(P, Q)


def w_neg(E: WeierstrassCurve, P):
    return E.neg(P)


def w_scalar_mul(E: WeierstrassCurve, n: int, P):
    if n < 0:
        raise ValueError("scalar must be non-negative")
    return E.mul(n, P)


def e_add(C: EdwardsCurve, P: EPoint, Q: EPoint) -> EPoint:
    return C.add(P, Q)


def e_proj_add(C: EdwardsCurve, P: ProjEPoint, Q: ProjEPoint) -> ProjEPoint:
    return C.proj_add(P, Q)


def enumerate_points(curve: Curve) -> tuple[list, int]:
    pts = curve.points()
    return pts, len(pts)


def hasse_interval(p: int) -> tuple[int, int]:
    """Integer range ``[lo, hi]`` allowed for ``#E(F_p)``: ``|#E - p - 1| <= 2 sqrt(p)``."""
    # largest k with k^2 <= 4p
    k = math.isqrt(4 * p)
    return p + 1 - k, p + 1 + k


# birational map between C: u^2+v^2 = 1+d u^2 v^2 and E: y^2 = x^3+2(1+d)x^2+(1-d)^2 x


def _check_psi_shape(E: WeierstrassCurve, d: int) -> None:
    expected = WeierstrassCurve.edwards_model(E.p, d)
    if E != expected:
        raise CurveShapeMismatch(f"{E} is not y^2 = x^3 + 2(1+d)x^2 + (1-d)^2 x for d={d}")


def psi(E: WeierstrassCurve, P, d: int) -> EPoint:
    """Map ``P`` on the Weierstrass model to the Edwards curve with ``c = 1``."""
    d %= E.p
    _check_psi_shape(E, d)
    E._check(P)
    p = E.p
    if P is INFINITY:
        return EPoint(0, 1)
    x, y = P
    if (x, y) == (0, 0):
        return EPoint(0, p - 1)
    if y == 0 or (x + 1 - d) % p == 0:
        raise ExceptionalPoint(f"{P} lies outside the domain of psi")
    return EPoint(2 * x * inv_mod(y, p) % p, (x - 1 + d) * inv_mod(x + 1 - d, p) % p)


def psi_inv(C: EdwardsCurve, Q: EPoint):
    """Inverse of :func:`psi`; lands on ``WeierstrassCurve.edwards_model(p, C.d)``."""
    if C.c != 1:
        raise CurveShapeMismatch("psi_inv requires an Edwards curve with c = 1")
    C._check(Q)
    p, d = C.p, C.d
    u, v = Q
    if (u, v) == (0, 1):
        return INFINITY
    if (u, v) == (0, p - 1):
        return WPoint(0, 0)
    x = (d - 1) * (1 + v) * inv_mod(v - 1, p) % p
    return WPoint(x, 2 * x * inv_mod(u, p) % p)


# orders


def point_order(curve: Curve, P, group_order: int | None = None) -> int:
    """Least ``t >= 1`` with ``tP`` neutral.

    With ``group_order`` known the order is found by stripping prime factors
    from it; otherwise by iterated addition up to the Hasse bound.
    """
    curve._check(P)
    neutral = curve.neutral
    if group_order is not None:
        if curve.mul(group_order, P) != neutral:
            raise ValueError(f"{group_order} does not annihilate {P}")
        t = group_order
        for q in factorize(group_order):
            while t % q == 0 and curve.mul(t // q, P) == neutral:
                t //= q
        return t
    limit = hasse_interval(curve.p)[1]
    if curve.p > ENUMERATION_LIMIT:
        raise ScaleExceeded(f"iterated point order capped at p <= {ENUMERATION_LIMIT}")
    Q = P
    t = 1
    while Q != neutral:
        Q = curve._add(Q, P)
        t += 1
        if t > limit:
            raise RuntimeError(f"order of {P} exceeds the Hasse bound")
    return t


def point_orders(curve: Curve) -> dict:
    """Order of every F_p-point, keyed by point."""
    if "orders" not in curve._cache:
        n = curve.cardinality
        curve._cache["orders"] = {P: point_order(curve, P, n) for P in curve.points()}
    return curve._cache["orders"]


def group_exponent(curve: Curve) -> int:
    return max(point_orders(curve).values())


def find_point_of_order(curve: Curve, t_min: int = 1):
    """Point of maximal order (lexicographically smallest on ties), if that order >= t_min."""
    orders = point_orders(curve)
    best = max(orders.values())
    if best < t_min:
        raise NoSuchPoint(f"largest point order {best} on {curve} is below {t_min}")
    return min((P for P, t in orders.items() if t == best), key=_sort_key)


def torsion_count(curve: Curve, m: int) -> int:
    """Number of F_p-points killed by ``m``."""
    neutral = curve.neutral
    return sum(1 for P in curve.points() if curve.mul(m, P) == neutral)

"""Rational functions on a curve, with the metadata the bounds consume.

A :class:`RationalMap` is a quotient of two sparse bivariate integer
polynomials in the curve coordinates (``u, v`` on Edwards curves, ``x, y`` on
Weierstrass curves).  Evaluation is plain substitution modulo ``p``; nothing
is reduced modulo the curve equation, so a pole is reported wherever the
stored denominator vanishes.

Pole data (degree of the pole divisor, poles at the two ideal points of the
Edwards model, the Hess-Shparlinski shape of the pole divisor) is not derived
from the polynomials.  It comes either from the verified :func:`catalog` or
from the caller via :func:`make_user_map`.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from typing import Literal, Mapping

from .curves import INFINITY, EdwardsCurve, WeierstrassCurve
from .errors import FunctionSyntaxError, ModelMismatch, PoleAtPoint, ZeroDenominator
from .field import PrimeModulus, FieldElement, inv_mod

Model = Literal["edwards", "weierstrass"]

VARIABLES: dict[str, tuple[str, str]] = {"edwards": ("u", "v"), "weierstrass": ("x", "y")}


@dataclass(frozen=True)
class Poly:
    """Sparse polynomial ``sum coeff * X^i * Y^j`` stored as ``((i, j), coeff)`` pairs."""

    terms: tuple[tuple[tuple[int, int], int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, int], int]) -> Poly:
        return cls(tuple(sorted((k, c) for k, c in d.items() if c != 0)))

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls.from_dict({(0, 0): c})

    @classmethod
    def var(cls, index: int) -> Poly:
        return cls.from_dict({(1, 0) if index == 0 else (0, 1): 1})

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def is_zero(self, p: int | None = None) -> bool:
        if p is None:
            return not self.terms
        return all(c % p == 0 for _, c in self.terms)

    def __add__(self, other: Poly) -> Poly:
        d = self.as_dict()
        for k, c in other.terms:
            d[k] = d.get(k, 0) + c
        return Poly.from_dict(d)

    def __neg__(self) -> Poly:
        return Poly(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        d: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.terms:
            for (i2, j2), c2 in other.terms:
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, 0) + c1 * c2
        return Poly.from_dict(d)

    def __pow__(self, n: int) -> Poly:
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, a: int, b: int, p: int) -> int:
        return sum(c * pow(a, i, p) * pow(b, j, p) for (i, j), c in self.terms) % p

    def render(self, names: tuple[str, str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.terms:
            mono = "*".join(
                f"{n}^{e}" if e > 1 else n for n, e in zip(names, (i, j)) if e > 0
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class HSShape:
    """Pole divisor of the form ``(1 + delta) H`` for a place ``H`` of degree ``deg_H``."""

    deg_H: int
    delta: int


@dataclass(frozen=True)
class RationalMap:
    model: Model
    numerator: Poly
    denominator: Poly
    declared_degree: int
    name: str = ""
    omega_pole: tuple[bool, bool] | None = None
    hs_shape: HSShape | None = None
    provenance: Literal["catalog", "user_declared"] = "user_declared"
    # value at the Weierstrass point at infinity; None means O is a pole
    value_at_infinity: int | None = None
    notes: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.model not in VARIABLES:
            raise ValueError(f"unknown curve model {self.model!r}")
        if self.denominator.is_zero():
            raise ZeroDenominator("rational map denominator is the zero polynomial")
        if self.declared_degree < 1:
            raise ValueError("declared degree of the pole divisor must be >= 1")
        if self.model == "weierstrass" and self.omega_pole is not None:
            raise ValueError("ideal-point pole flags only apply to Edwards functions")
        if self.model == "edwards" and self.hs_shape is not None:
            raise ValueError("Hess-Shparlinski pole shape only applies to Weierstrass functions")

    @property
    def has_omega_pole(self) -> bool:
        return self.omega_pole is not None and any(self.omega_pole)

    def describe(self) -> str:
        names = VARIABLES[self.model]
        num = self.numerator.render(names)
        if self.denominator.terms == ((((0, 0), 1)),):
            return num
        return f"({num})/({self.denominator.render(names)})"


def model_of(curve) -> Model:
    if isinstance(curve, EdwardsCurve):
        return "edwards"
    if isinstance(curve, WeierstrassCurve):
        return "weierstrass"
    raise ModelMismatch(f"not a supported curve: {curve!r}")


def evaluate_int(f: RationalMap, curve, P) -> int:
    """``f(P)`` as a residue in ``[0, p)``."""
    if model_of(curve) != f.model:
        raise ModelMismatch(f"{f.model} function evaluated on a {model_of(curve)} curve")
    p = curve.p
    if P is INFINITY:
        if f.value_at_infinity is None:
            raise PoleAtPoint(P)
        return f.value_at_infinity % p
    a, b = P
    den = f.denominator(a, b, p)
    if den == 0:
        raise PoleAtPoint(P)
    return f.numerator(a, b, p) * inv_mod(den, p) % p


def evaluate(f: RationalMap, curve, P) -> FieldElement:
    return PrimeModulus(curve.p)(evaluate_int(f, curve, P))


# expression syntax: + - * / ^ over the two coordinates, integer literals,
# and named constants (c, d) substituted by the caller


def _parse(expr: str, model: Model, constants: Mapping[str, int]) -> tuple[Poly, Poly]:
    names = VARIABLES[model]
    try:
        tree = ast.parse(expr.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise FunctionSyntaxError(f"cannot parse {expr!r}: {exc.msg}") from None

    def walk(node) -> tuple[Poly, Poly]:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return Poly.const(node.value), Poly.const(1)
        if isinstance(node, ast.Name):
            if node.id in names:
                return Poly.var(names.index(node.id)), Poly.const(1)
            if node.id in constants:
                return Poly.const(constants[node.id]), Poly.const(1)
            raise FunctionSyntaxError(
                f"unknown symbol {node.id!r}; {model} functions use {names[0]}, {names[1]}"
            )
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            n, d = walk(node.operand)
            return (-n if isinstance(node.op, ast.USub) else n), d
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                sign = 1
                if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                    sign, exp = -1, exp.operand
                if not (isinstance(exp, ast.Constant) and type(exp.value) is int):
                    raise FunctionSyntaxError("exponents must be integer literals")
                n, d = walk(node.left)
                k = exp.value
                return (n**k, d**k) if sign > 0 else (d**k, n**k)
            ln, ld = walk(node.left)
            rn, rd = walk(node.right)
            if isinstance(node.op, ast.Add):
                return ln * rd + rn * ld, ld * rd
            if isinstance(node.op, ast.Sub):
                return ln * rd - rn * ld, ld * rd
            if isinstance(node.op, ast.Mult):
                return ln * rn, ld * rd
            if isinstance(node.op, ast.Div):
                if rn.is_zero():
                    raise ZeroDenominator(f"division by zero in {expr!r}")
                return ln * rd, ld * rn
        raise FunctionSyntaxError(f"unsupported syntax in {expr!r}: {ast.dump(node)}")

    num, den = walk(tree)
    if den.is_zero():
        raise ZeroDenominator(f"{expr!r} has a zero denominator")
    return num, den


def parse_expression(expr: str, model: Model, constants: Mapping[str, int] | None = None):
    """Parse ``expr`` into ``(numerator, denominator)`` polynomials."""
    return _parse(expr, model, constants or {})


def make_user_map(
    num: Poly | str,
    den: Poly | None = None,
    declared_degree: int = 0,
    *,
    model: Model = "edwards",
    omega_pole: tuple[bool, bool] | None = None,
    hs_shape: HSShape | None = None,
    value_at_infinity: int | None = None,
    constants: Mapping[str, int] | None = None,
    name: str = "",
) -> RationalMap:
    """Build a user-declared map; ``num`` may be an expression string."""
    if isinstance(num, str):
        name = name or num
        pn, pd = parse_expression(num, model, constants)
        if den is not None:
            pd = pd * den
        num, den = pn, pd
    if den is None:
        den = Poly.const(1)
    if den.is_zero():
        raise ZeroDenominator("rational map denominator is the zero polynomial")
    return RationalMap(
        model=model,
        numerator=num,
        denominator=den,
        declared_degree=declared_degree,
        name=name,
        omega_pole=omega_pole,
        hs_shape=hs_shape,
        provenance="user_declared",
        value_at_infinity=value_at_infinity,
    )


def _catalog_entry(model: Model, expr: str, degree: int, name: str | None = None,
                   constants: Mapping[str, int] | None = None, **meta) -> RationalMap:
    num, den = parse_expression(expr, model, constants)
    return RationalMap(
        model=model,
        numerator=num,
        denominator=den,
        declared_degree=degree,
        name=name or expr,
        provenance="catalog",
        **meta,
    )


def catalog(model: Model, d: int | None = None) -> list[RationalMap]:
    """Built-in functions with verified pole metadata.

    Edwards ``u`` and ``v`` have pole divisors of degree 2 supported over the
    ideal points; which ideal point carries which pole is not pinned down, so
    both flags are set.  ``u + v`` has degree 4 with a pole at each ideal
    point.  On the Weierstrass side ``x`` has pole divisor ``2 O`` (so
    ``deg H = 1, delta = 1``), ``y`` has ``3 O`` which is not of that shape,
    and the transported sum ``g = 2x/y + (x-1+d)/(x+1-d)`` (needs ``d``) has
    poles away from ``O``.
    """
    if model == "edwards":
        both = (True, True)
        return [
            _catalog_entry(model, "u", 2, omega_pole=both),
            _catalog_entry(model, "v", 2, omega_pole=both),
            _catalog_entry(model, "u+v", 4, omega_pole=both),
        ]
    if model == "weierstrass":
        entries = [
            _catalog_entry(model, "x", 2, hs_shape=HSShape(1, 1)),
            _catalog_entry(model, "y", 3),
        ]
        if d is not None:
            # g(O) = (u + v)(psi(O)) = 0 + 1
            entries.append(
                _catalog_entry(model, "2*x/y + (x-1+d)/(x+1-d)", 4, name="g",
                               constants={"d": d}, value_at_infinity=1)
            )
        return entries
    raise ValueError(f"unknown curve model {model!r}")


def lookup(model: Model, name: str, d: int | None = None) -> RationalMap | None:
    """Catalog entry whose name matches ``name`` (whitespace ignored), if any."""
    key = "".join(name.split())
    for f in catalog(model, d):
        if "".join(f.name.split()) == key:
            return f
    return None

"""Prime field arithmetic.

Two layers live here.  The integer helpers (:func:`inv_mod`,
:func:`legendre_symbol`, :func:`sqrt_mod`, ...) work on plain ``int`` residues
and are what the curve code uses in its inner loops.  :class:`FieldElement`
wraps a residue together with its :class:`PrimeModulus` and is the public
scalar type: it refuses to mix moduli and always stays canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, ModulusMismatch, NonResidue

MAX_MODULUS = 2**31

# Deterministic Miller-Rabin witnesses; sufficient for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization ``{prime: exponent}`` of ``n >= 1``."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise DivisionByZero(f"0 has no inverse modulo {p}")
    return pow(a, -1, p)


def legendre_symbol(a: int, p: int) -> int:
    """Euler's criterion, mapped to -1, 0, +1."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_mod(a: int, p: int) -> int:
    """Smaller square root of ``a`` modulo the odd prime ``p`` (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if legendre_symbol(a, p) != 1:
        raise NonResidue(f"{a} is not a square modulo {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while legendre_symbol(z, p) != -1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime ``5 <= p <= 2**31``."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not 5 <= self.p <= MAX_MODULUS:
            raise ValueError(f"modulus must be an integer in [5, 2**31], got {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def elements(self):
        return (FieldElement(v, self) for v in range(self.p))


@dataclass(frozen=True, eq=True)
class FieldElement:
    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.p:
            raise ValueError(f"non-canonical residue {self.value} mod {self.modulus.p}")

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"cannot combine F_{self.p} with F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _make(self, v: int) -> FieldElement:
        return FieldElement(v % self.modulus.p, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * inv_mod(o, self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._make(o) * self.inverse()

    def __neg__(self) -> FieldElement:
        return self._make(-self.value)

    def __pow__(self, n: int) -> FieldElement:
        if n < 0:
            return self.inverse() ** -n
        return self._make(pow(self.value, n, self.p))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement({self.value} mod {self.p})"

    def __str__(self) -> str:
        return str(self.value)

    def inverse(self) -> FieldElement:
        return self._make(inv_mod(self.value, self.p))

    def legendre(self) -> int:
        return legendre_symbol(self.value, self.p)

    def is_square(self) -> bool:
        return self.legendre() != -1

    def sqrt(self) -> FieldElement:
        return self._make(sqrt_mod(self.value, self.p))


# Function-style aliases for callers that prefer them over operators.
def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_neg(a: FieldElement) -> FieldElement:
    return -a


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def fe_pow(a: FieldElement, n: int) -> FieldElement:
    return a**n


def legendre(a: FieldElement) -> int:
    return a.legendre()


def fe_sqrt(a: FieldElement) -> FieldElement:
    return a.sqrt()


def smallest_nonsquare(p: int) -> int:
    """Smallest quadratic non-residue modulo ``p`` (always >= 2)."""
    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1
    return z

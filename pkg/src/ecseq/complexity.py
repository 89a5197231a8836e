"""Linear complexity profiles over prime fields.

``L(s, N)`` is the length of a shortest recurrence
``s_{n+L} = c_{L-1} s_{n+L-1} + ... + c_0 s_n`` valid for ``0 <= n <= N-L-1``
(``c_0 = 0`` allowed), with ``L(s, N) = 0`` for an all-zero prefix.  LFSR
synthesis computes every prefix value in one pass; :func:`brute_force_profile`
decides the same question by linear algebra and serves as its oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _backend
from .errors import ModulusMismatch, ScaleExceeded
from .field import FieldElement, is_prime


@dataclass(frozen=True)
class LCProfile:
    """``profile[N-1] = L(s, N)`` for ``N = 1..len(profile)``.

    ``connection`` is the connection polynomial of the final synthesized
    register, coefficients of ``1 + C_1 x + ... + C_L x^L`` (empty when the
    profile was computed by the oracle).
    """

    profile: tuple[int, ...]
    p: int
    connection: tuple[int, ...] = ()

    @property
    def final(self) -> int:
        return self.profile[-1] if self.profile else 0

    @property
    def attained_at(self) -> int:
        """Smallest ``N`` with ``L(s, N)`` equal to the final value."""
        final = self.final
        for n, value in enumerate(self.profile, start=1):
            if value == final:
                return n
        return 0

    def recurrence(self) -> tuple[int, ...]:
        """Coefficients ``(c_0, ..., c_{L-1})`` of ``s_{n+L} = sum c_j s_{n+j}``."""
        L = len(self.connection) - 1
        return tuple((-self.connection[L - j]) % self.p for j in range(L))

    def __len__(self) -> int:
        return len(self.profile)


def _residues(s: Iterable, p: int | None) -> tuple[list[int], int]:
    terms = list(s)
    if terms and isinstance(terms[0], FieldElement):
        moduli = {t.p for t in terms}
        if len(moduli) != 1 or (p is not None and p not in moduli):
            raise ModulusMismatch(f"terms come from several fields: {sorted(moduli)}")
        return [t.value for t in terms], moduli.pop()
    if p is None:
        raise ValueError("plain integer terms need an explicit prime p")
    if not is_prime(p) or p < 2:
        raise ModulusMismatch(f"{p} is not a prime modulus")
    for k, t in enumerate(terms):
        if not 0 <= t < p:
            raise ModulusMismatch(f"term {k} = {t} is not a residue in [0, {p})")
    return terms, p


def bm_profile(s: Iterable, p: int | None = None) -> LCProfile:
    """Full linear complexity profile by LFSR synthesis.

    ``s`` holds either :class:`FieldElement` values or residues in ``[0, p)``.
    """
    terms, p = _residues(s, p)
    profile, connection = _backend.bm_synthesis(terms, p)
    return LCProfile(tuple(profile), p, tuple(connection))


def _rank_mod(rows: list[list[int]], p: int) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _feasible(s: Sequence[int], N: int, L: int, p: int) -> bool:
    # equations s_{n+L} = sum_j c_j s_{n+j} for 0 <= n <= N-L-1
    if N - L <= 0:
        return True
    A = [list(s[n:n + L]) for n in range(N - L)]
    b = [s[n + L] for n in range(N - L)]
    if L == 0:
        return all(x == 0 for x in b)
    augmented = [row + [rhs] for row, rhs in zip(A, b)]
    return _rank_mod(A, p) == _rank_mod(augmented, p)


BRUTE_FORCE_MAX_LEN = 24
BRUTE_FORCE_MAX_P = 13


def brute_force_profile(s: Iterable, p: int | None = None) -> LCProfile:
    """Profile from the definition: least ``L`` whose Hankel system is solvable."""
    terms, p = _residues(s, p)
    if len(terms) > BRUTE_FORCE_MAX_LEN or p > BRUTE_FORCE_MAX_P:
        raise ScaleExceeded(
            f"oracle limited to length <= {BRUTE_FORCE_MAX_LEN} and p <= {BRUTE_FORCE_MAX_P}"
        )
    profile = []
    for N in range(1, len(terms) + 1):
        profile.append(next(L for L in range(N + 1) if _feasible(terms, N, L, p)))
    return LCProfile(tuple(profile), p)


def linear_complexity_periodic(seq) -> int:
    """``L(s)`` of an eventually periodic sequence.

    For a purely ``t``-periodic sequence ``L(s) <= t``, and once ``N >= 2t`` a
    register of length ``<= t`` reproducing the prefix is unique, so the
    profile is constant from ``N = 2t`` on and ``L(s) = L(s, 2t)``.  A
    preperiod ``k`` enlarges the window to ``2(k + t)``.
    """
    window = 2 * (seq.preperiod + seq.period)
    return bm_profile(seq.extended(window), seq.modulus).final

"""Gaussian binomials and subspace incidence matrices.

The incidence matrices are only built for small ambient dimensions; they back
the identity self-checks, not the production criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardError
from .gf import FieldSpec
from .linalg import Subspace, pg_indexed, subspace_leq

MAX_SIDE = 10_000


def gaussian_binomial(r: int, k: int, q: int) -> int:
    """Number of ``r``-dimensional subspaces of ``F_q^k``."""
    if r < 0 or r > k:
        return 0
    num = den = 1
    for i in range(r):
        num *= q**k - q**i
        den *= q**r - q**i
    return num // den


@dataclass(frozen=True)
class IncidenceMatrix:
    r: int
    s: int
    k: int
    rows: tuple[Subspace, ...]
    cols: tuple[Subspace, ...]
    entries: tuple[tuple[int, ...], ...]


def build_T(r: int, s: int, k: int, spec: FieldSpec) -> IncidenceMatrix:
    """0/1 containment matrix between ``PG^r`` (rows) and ``PG^s`` (columns)."""
    if not 0 <= r <= s <= k:
        raise ValueError(f"need 0 <= r <= s <= k, got ({r}, {s}, {k})")
    for d in (r, s):
        if gaussian_binomial(d, k, spec.q) > MAX_SIDE:
            raise GuardError(f"PG^{d}(F_{spec.q}^{k}) exceeds {MAX_SIDE} elements")
    rows = tuple(pg_indexed(r, k, spec))
    cols = rows if r == s else tuple(pg_indexed(s, k, spec))
    entries = tuple(tuple(int(subspace_leq(V, W)) for W in cols) for V in rows)
    return IncidenceMatrix(r, s, k, rows, cols, entries)


# exact matrix helpers; entries are ints or Fractions


def _matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def _transpose(A):
    return [list(col) for col in zip(*A)]


def _lincomb(alpha, A, beta, B):
    return [[alpha * a + beta * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _ones(m, n):
    return [[1] * n for _ in range(m)]


def _identity(m):
    return [[int(i == j) for j in range(m)] for i in range(m)]


def _eq(A, B):
    return [list(r) for r in A] == [list(r) for r in B]


@dataclass
class IdentityReport:
    k: int
    q: int
    entries: list[tuple[str, bool]]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.entries)

    def failures(self) -> list[str]:
        return [name for name, ok in self.entries if not ok]


def check_T_identities(k: int, spec: FieldSpec) -> IdentityReport:
    """Verify the four incidence identities exactly for ``F_q^k``.

    (a) column sums of ``T[r,s]`` equal ``n_{r,s}``;
    (b) ``T[1,k-1]`` is symmetric with the closed-form inverse;
    (c) ``T[r,k-1] T[1,k-1]`` and ``T[r,k-1] T[1,k-1]^-1`` closed forms;
    (d) ``T[r,s] T[s,z] = n_{s-r,z-r} T[r,z]``.
    """
    if k < 2:
        raise ValueError("identities need k >= 2")
    q = spec.q
    T = {}

    def t(r, s):
        if (r, s) not in T:
            T[r, s] = [list(row) for row in build_T(r, s, k, spec).entries]
        return T[r, s]

    n = lambda r, m: gaussian_binomial(r, m, q)  # noqa: E731
    entries = []

    for r in range(k + 1):
        for s in range(r, k + 1):
            sums = [sum(col) for col in zip(*t(r, s))]
            entries.append((f"(a) r={r} s={s}", all(x == n(r, s) for x in sums)))

    T1 = t(1, k - 1)
    N1 = len(T1)
    J = _ones(N1, N1)
    Tinv = _lincomb(Fraction(1, q ** (k - 2)), T1, Fraction(-(q ** (k - 2) - 1), q ** (k - 2) * (q ** (k - 1) - 1)), J)
    entries.append(("(b) symmetric", _eq(T1, _transpose(T1))))
    entries.append(("(b) inverse", _eq(_matmul(T1, Tinv), _identity(N1))))

    for r in range(1, k):
        lhs = _matmul(t(r, k - 1), T1)
        T1rT = _transpose(t(1, r))
        Jr = _ones(len(lhs), N1)
        rhs = _lincomb(q ** (k - r - 1), T1rT, Fraction(q ** (k - r - 1) - 1, q - 1), Jr)
        entries.append((f"(c) product r={r}", _eq(lhs, rhs)))
        lhs_inv = _matmul(t(r, k - 1), Tinv)
        rhs_inv = _lincomb(Fraction(1, q ** (r - 1)), T1rT, Fraction(-(q ** (r - 1) - 1), q ** (r - 1) * (q ** (k - 1) - 1)), Jr)
        entries.append((f"(c) inverse r={r}", _eq(lhs_inv, rhs_inv)))

    for r in range(1, k + 1):
        for s in range(r, k + 1):
            for z in range(s, k + 1):
                lhs = _matmul(t(r, s), t(s, z))
                rhs = [[n(s - r, z - r) * x for x in row] for row in t(r, z)]
                entries.append((f"(d) r={r} s={s} z={z}", _eq(lhs, rhs)))

    return IdentityReport(k, q, entries)

"""Linear codes and definition-level weight computations.

Pair weights here are cyclic: position ``i`` pairs ``x[i]`` with
``x[(i + 1) % n]``, so the last coordinate wraps around to the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .gf import FieldSpec
from .linalg import Subspace, nullspace, rank


@dataclass(frozen=True)
class LinearCode:
    """An ``[n, k]`` code given by a rank-``k`` generator matrix."""

    spec: FieldSpec
    G: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        G = tuple(tuple(int(x) for x in row) for row in self.G)
        object.__setattr__(self, "G", G)
        if not G:
            raise ValueError("generator matrix has no rows")
        n = len(G[0])
        if any(len(row) != n for row in G):
            raise ValueError("generator rows have different lengths")
        if n < 2:
            raise ValueError("code length must be at least 2")
        if any(not 0 <= x < self.spec.q for row in G for x in row):
            raise ValueError(f"generator entries must lie in [0, {self.spec.q})")
        if rank(G, self.spec) != len(G):
            raise ValueError("generator matrix is not of full row rank")

    @property
    def n(self) -> int:
        return len(self.G[0])

    @property
    def k(self) -> int:
        return len(self.G)

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.G))

    def __str__(self):
        return f"[{self.n},{self.k}] code over {self.spec}"


def encode(C: LinearCode, y) -> tuple[int, ...]:
    if len(y) != C.k:
        raise ValueError(f"message has length {len(y)}, expected {C.k}")
    add, mul = C.spec.add_table, C.spec.mul_table
    out = [0] * C.n
    for c, row in zip(y, C.G):
        if c:
            mc = mul[c]
            out = [add[x][mc[g]] for x, g in zip(out, row)]
    return tuple(out)


def hamming_weight(x) -> int:
    return sum(1 for v in x if v)


def pair_weight(x) -> int:
    n = len(x)
    return sum(1 for i in range(n) if x[i] or x[(i + 1) % n])


def hamming_support(D, n: int | None = None) -> frozenset[int]:
    return frozenset(i for v in D for i, x in enumerate(v) if x)


def pair_support(D, n: int | None = None) -> frozenset[int]:
    """Pair support of the span of ``D``.

    Position ``i`` is in the support iff some basis vector is nonzero at ``i``
    or at ``i + 1``; no enumeration of the span is needed.
    """
    D = list(D)
    if n is None:
        n = len(D[0]) if D else 0
    h = hamming_support(D)
    return frozenset(i for i in range(n) if i in h or (i + 1) % n in h)


def pair_weight_via_runs(D, n: int | None = None) -> int:
    """``w_H(D) + L`` where ``L`` counts the maximal cyclic runs of the Hamming support."""
    D = list(D)
    if n is None:
        n = len(D[0])
    h = hamming_support(D)
    if len(h) == n:
        return n
    runs = sum(1 for i in h if (i - 1) % n not in h)
    return len(h) + runs


def zeroed_positions(J, n: int) -> frozenset[int]:
    """Coordinates that must vanish for every pair outside ``J`` to be zero."""
    J = set(J)
    return frozenset(z for i in range(n) if i not in J for z in (i, (i + 1) % n))


def subcode(C: LinearCode, J) -> list[tuple[int, ...]]:
    """Basis of ``C_J``, the codewords whose pairs vanish outside ``J``."""
    Z = sorted(zeroed_positions(J, C.n))
    cols = [C.columns[z] for z in Z]
    messages = nullspace(cols, C.spec, C.k) if cols else [row for row in Subspace.full(C.k, C.spec).basis]
    return [encode(C, y) for y in messages]


def hat_code(C: LinearCode) -> LinearCode:
    """Interleave a zero column after every column of the generator."""
    G = tuple(tuple(x for g in row for x in (g, 0)) for row in C.G)
    return LinearCode(C.spec, G)


def dual_code(C: LinearCode) -> LinearCode:
    if C.k == C.n:
        raise ValueError("the dual of the full space is the zero code")
    return LinearCode(C.spec, tuple(nullspace(C.G, C.spec, C.n)))

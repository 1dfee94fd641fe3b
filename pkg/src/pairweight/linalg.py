"""Vectors, matrices and subspaces over a finite field.

Vectors are tuples of field ints, matrices are tuples of row tuples. A
subspace is stored by its reduced row-echelon basis, which is unique, so
``Subspace`` values compare and hash by content.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .gf import FieldSpec


def rref(rows, spec: FieldSpec):
    """Row-reduce ``rows``.

    Returns ``(R, rank, pivots)`` where ``R`` has the same shape as the input
    with the zero rows at the bottom.
    """
    add, mul, neg, inv = spec.add_table, spec.mul_table, spec.neg_table, spec.inv_table
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        row = m[r]
        s = inv[row[c]]
        if s != 1:
            mrow = mul[s]
            row = [mrow[x] for x in row]
            m[r] = row
        for i in range(nrows):
            if i != r and m[i][c]:
                f = mul[neg[m[i][c]]]
                other = m[i]
                m[i] = [add[x][f[y]] for x, y in zip(other, row)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in m), r, tuple(pivots)


def rank(rows, spec: FieldSpec) -> int:
    return rref(rows, spec)[1]


def nullspace(rows, spec: FieldSpec, ncols: int):
    """Basis of ``{x : M x = 0}`` for the matrix with the given rows."""
    R, rk, pivots = rref(rows, spec) if rows else ((), 0, ())
    neg = spec.neg_table
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = neg[R[i][f]]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]
    spec: FieldSpec = dc_field(compare=False, repr=False)

    @classmethod
    def span(cls, vectors, spec: FieldSpec, ambient_dim: int | None = None) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        if ambient_dim is None:
            if not vectors:
                raise ValueError("ambient dimension needed for an empty spanning set")
            ambient_dim = len(vectors[0])
        if any(len(v) != ambient_dim for v in vectors):
            raise ValueError("vectors do not all have the ambient length")
        if not vectors:
            return cls(ambient_dim, (), spec)
        R, rk, _ = rref(vectors, spec)
        return cls(ambient_dim, R[:rk], spec)

    @classmethod
    def zero(cls, k: int, spec: FieldSpec) -> "Subspace":
        return cls(k, (), spec)

    @classmethod
    def full(cls, k: int, spec: FieldSpec) -> "Subspace":
        return cls(k, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)), spec)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    @property
    def size(self) -> int:
        return self.spec.q**self.dim

    def contains(self, v) -> bool:
        add, mul, neg = self.spec.add_table, self.spec.mul_table, self.spec.neg_table
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c:
                f = mul[neg[c]]
                v = [add[x][f[y]] for x, y in zip(v, row)]
        return not any(v)

    def lines(self) -> list[tuple[int, ...]]:
        """Normalized generators of every 1-dimensional subspace of ``self``."""
        q = self.spec.q
        add, mul = self.spec.add_table, self.spec.mul_table
        out = []
        for coeffs in normalized_vectors(self.dim, q):
            v = [0] * self.ambient_dim
            for c, row in zip(coeffs, self.basis):
                if c:
                    mc = mul[c]
                    v = [add[x][mc[y]] for x, y in zip(v, row)]
            # RREF pivots make the leading coefficient land on a pivot, so v is normalized
            out.append(tuple(v))
        return out

    def __str__(self):
        if not self.basis:
            return "<0>"
        return "<" + ", ".join("(" + ",".join(map(str, r)) + ")" for r in self.basis) + ">"


def normalize(v, spec: FieldSpec) -> tuple[int, ...]:
    """Scale ``v`` so its first nonzero coordinate is 1."""
    lead = next((x for x in v if x), None)
    if lead is None or lead == 1:
        return tuple(v)
    s = spec.mul_table[spec.inv_table[lead]]
    return tuple(s[x] for x in v)


def normalized_vectors(k: int, q: int):
    """Yield every normalized nonzero vector of length ``k`` in lexicographic order."""
    for lead in range(k - 1, -1, -1):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(q), repeat=k - lead - 1):
            yield prefix + tail


def line_index(v, q: int) -> int:
    """Position of the normalized vector ``v`` in ``normalized_vectors`` order."""
    k = len(v)
    lead = next(i for i, x in enumerate(v) if x)
    offset = (q ** (k - 1 - lead) - 1) // (q - 1)
    tail = 0
    for x in v[lead + 1 :]:
        tail = tail * q + x
    return offset + tail


def orthogonal_complement(V: Subspace) -> Subspace:
    spec = V.spec
    return Subspace.span(nullspace(V.basis, spec, V.ambient_dim), spec, V.ambient_dim)


def subspace_leq(V: Subspace, W: Subspace) -> bool:
    if V.ambient_dim != W.ambient_dim:
        raise ValueError("subspaces live in different ambient spaces")
    if V.dim > W.dim:
        return False
    return all(W.contains(row) for row in V.basis)


def span_of_pair(a, b, spec: FieldSpec) -> Subspace:
    return Subspace.span([a, b], spec, len(a))


def enumerate_pg(r: int, k: int, spec: FieldSpec) -> list[Subspace]:
    """All ``r``-dimensional subspaces of ``F_q^k``, sorted by RREF basis."""
    if not 0 <= r <= k:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={k}")
    q = spec.q
    out = []
    for pivots in itertools.combinations(range(k), r):
        pivot_set = set(pivots)
        slots = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, k) if c not in pivot_set]
        for values in itertools.product(range(q), repeat=len(slots)):
            rows = [[0] * k for _ in range(r)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), x in zip(slots, values):
                rows[i][c] = x
            out.append(tuple(tuple(row) for row in rows))
    out.sort()
    return [Subspace(k, basis, spec) for basis in out]


def pg_indexed(r: int, k: int, spec: FieldSpec) -> list[Subspace]:
    """``PG^r`` in the indexing used by the incidence matrices.

    For ``r > k/2`` the i-th element is the complement of the i-th element of
    ``PG^{k-r}``; otherwise the lexicographic order of ``enumerate_pg``.
    """
    if 2 * r > k:
        return [orthogonal_complement(V) for V in enumerate_pg(k - r, k, spec)]
    return enumerate_pg(r, k, spec)

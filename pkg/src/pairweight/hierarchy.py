"""Generalized Hamming and pair weight hierarchies, LDP and the MPDS test."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .code import LinearCode, encode
from .combinat import gaussian_binomial
from .criterion import compute_mg, pair_weight_theta
from .errors import ConsistencyError, GuardError
from .linalg import enumerate_pg, normalized_vectors, rank

MAX_SUBSPACES = 10**6
MAX_LDP_LENGTH = 20


@dataclass(frozen=True)
class Hierarchy:
    kind: str  # "hamming" or "pair"
    values: tuple[int, ...]

    def __getitem__(self, r):
        """1-based: ``h[1]`` is the minimum weight."""
        return self.values[r - 1]

    def __len__(self):
        return len(self.values)


def _support_masks(C: LinearCode):
    """Hamming-support bitmask of ``yG`` for every normalized ``y``."""
    masks = {}
    for y in normalized_vectors(C.k, C.spec.q):
        c = encode(C, y)
        masks[y] = sum(1 << i for i, x in enumerate(c) if x)
    return masks


def _pair_mask(h: int, n: int) -> int:
    # i is in the pair support iff i or i+1 (mod n) is in the Hamming support
    rot = (h >> 1) | ((h & 1) << (n - 1))
    return h | rot


def _check_levels(C, max_r):
    max_r = C.k if max_r is None else max_r
    if not 1 <= max_r <= C.k:
        raise ValueError(f"max_r must lie in [1, {C.k}]")
    for r in range(1, max_r + 1):
        if gaussian_binomial(r, C.k, C.spec.q) > MAX_SUBSPACES:
            raise GuardError(f"PG^{r}(F_{C.spec.q}^{C.k}) exceeds {MAX_SUBSPACES} subspaces")
    return max_r


def _minimize(C, max_r, weigh):
    masks = _support_masks(C)
    values = []
    for r in range(1, max_r + 1):
        best = None
        for D in enumerate_pg(r, C.k, C.spec):
            h = 0
            for row in D.basis:
                h |= masks[row]
            w = weigh(D, h)
            if best is None or w < best:
                best = w
        values.append(best)
    return tuple(values)


def hamming_hierarchy(C: LinearCode, max_r: int | None = None) -> Hierarchy:
    max_r = _check_levels(C, max_r)
    values = _minimize(C, max_r, lambda D, h: h.bit_count())
    if any(a >= b for a, b in zip(values, values[1:])) or values[0] < 1 or values[-1] > C.n:
        raise ConsistencyError(f"Hamming hierarchy {values} is not strictly increasing within [1, n]")
    return Hierarchy("hamming", values)


def pair_hierarchy(C: LinearCode, max_r: int | None = None, cross_check: bool = True) -> Hierarchy:
    """Minimum pair support over each ``PG^r`` of the message space.

    With ``cross_check`` every subspace's weight is also computed from the
    column-pair spans and the two must agree.
    """
    max_r = _check_levels(C, max_r)
    n = C.n
    mg = compute_mg(C) if cross_check else None

    def weigh(D, h):
        w = _pair_mask(h, n).bit_count()
        if cross_check:
            alt = pair_weight_theta(C, D, mg)
            if alt != w:
                raise ConsistencyError(f"pair weight of {D}: direct {w} vs column-pair formula {alt}")
        return w

    values = _minimize(C, max_r, weigh)
    _check_pair_monotone(values, C.k, n)
    return Hierarchy("pair", values)


def _check_pair_monotone(values, k, n):
    ok = values[0] >= 2 and values[-1] <= n
    for r in range(1, len(values)):
        a, b = values[r - 1], values[r]
        # strict below level k-1, non-strict for the last step
        ok = ok and (a <= b if r == k - 1 else a < b)
    if not ok:
        raise ConsistencyError(f"pair hierarchy {values} violates 2 <= d1 < ... < d(k-1) <= dk <= n")


def ldp(C: LinearCode, at_least: bool = True) -> tuple[int | None, ...]:
    """Length/dimension profile: ``m_r = min |J|`` over index sets with ``dim C_J >= r``.

    With ``at_least=False`` the condition is ``dim C_J == r`` exactly; that
    minimum can be undefined (``None``) for ``r = k - 1`` when
    ``d_p^{k-1} = d_p^k = n``, e.g. for MPDS codes with ``k = 2``.
    """
    n, k = C.n, C.k
    if n > MAX_LDP_LENGTH:
        raise GuardError(f"LDP enumerates 2^n index sets; n={n} exceeds {MAX_LDP_LENGTH}")
    cols = C.columns
    found: dict[int, int] = {}
    rank_cache: dict[int, int] = {}
    for size in range(n + 1):
        for J in itertools.combinations(range(n), size):
            inside = set(J)
            zmask = 0
            for i in range(n):
                if i not in inside:
                    zmask |= (1 << i) | (1 << ((i + 1) % n))
            if zmask not in rank_cache:
                rows = [cols[z] for z in range(n) if zmask >> z & 1]
                rank_cache[zmask] = rank(rows, C.spec) if rows else 0
            dim = k - rank_cache[zmask]
            for r in range(1, dim + 1) if at_least else (dim,):
                if r >= 1 and r not in found:
                    found[r] = size
        if len(found) == k:
            break
    return tuple(found.get(r) for r in range(1, k + 1))


@dataclass(frozen=True)
class MPDSReport:
    is_mpds: bool
    hierarchy: Hierarchy
    bound_table: tuple[tuple[int, int, int], ...]  # (r, d_p^r, bound)


def singleton_bounds(n: int, k: int) -> list[int]:
    return [n - k + r + 1 for r in range(1, k)] + [n]


def mpds_report(C: LinearCode, hierarchy: Hierarchy | None = None) -> MPDSReport:
    h = pair_hierarchy(C) if hierarchy is None else hierarchy
    bounds = singleton_bounds(C.n, C.k)
    table = tuple((r, d, b) for r, (d, b) in enumerate(zip(h.values, bounds), start=1))
    for r, d, b in table:
        if d > b:
            raise ConsistencyError(f"d_p^{r} = {d} exceeds the Singleton-type bound {b}")
    return MPDSReport(h[1] == C.n - C.k + 2, h, table)

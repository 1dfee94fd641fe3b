"""Brute-force ground truth, seeded random instances and the benchmark.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014) so that a seed
names the same instance on any platform:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)            (all arithmetic mod 2^64)

A uniform value in ``[0, m)`` is ``next() % m``; a random code fills its
generator row by row and redraws the whole matrix until it has rank ``k``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .code import LinearCode, encode, hamming_weight, pair_support, pair_weight
from .combinat import gaussian_binomial
from .criterion import is_pair_equiweight, omega_support
from .errors import GuardError
from .gf import FieldSpec
from .iso import IsoPair
from .linalg import enumerate_pg, normalized_vectors, rank

MASK64 = (1 << 64) - 1
MAX_MESSAGES = 10**6


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        return self.next() % m

    def permutation(self, n: int) -> list[int]:
        """Fisher-Yates shuffle of ``range(n)``."""
        perm = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        return perm


def random_matrix(spec: FieldSpec, rows: int, cols: int, rng: SplitMix64):
    return tuple(tuple(rng.below(spec.q) for _ in range(cols)) for _ in range(rows))


def random_code(spec: FieldSpec, n: int, k: int, seed: int | SplitMix64) -> LinearCode:
    if n < 2 or not 1 <= k <= n:
        raise ValueError(f"need n >= 2 and 1 <= k <= n, got n={n}, k={k}")
    rng = seed if isinstance(seed, SplitMix64) else SplitMix64(seed)
    while True:
        G = random_matrix(spec, k, n, rng)
        if rank(G, spec) == k:
            return LinearCode(spec, G)


def random_invertible(spec: FieldSpec, k: int, rng: SplitMix64):
    while True:
        A = random_matrix(spec, k, k, rng)
        if rank(A, spec) == k:
            return A


def permuted_pair(C: LinearCode, rng: SplitMix64) -> IsoPair:
    """Target obtained by a random coordinate permutation of the source."""
    perm = rng.permutation(C.n)
    G = tuple(tuple(row[perm[i]] for i in range(C.n)) for row in C.G)
    return IsoPair(C, LinearCode(C.spec, G))


def monomial_pair(C: LinearCode, rng: SplitMix64, change_basis: bool = True) -> IsoPair:
    """Target ``A G M``: monomial coordinate map, optionally preceded by a change of basis.

    With ``change_basis`` the matched rows no longer come from the coordinate
    map alone, so the isomorphism is a generic one between ``C`` and ``CM``.
    """
    spec = C.spec
    perm = rng.permutation(C.n)
    scale = [1 + rng.below(spec.q - 1) for _ in range(C.n)]
    mul = spec.mul_table
    G = [[mul[scale[i]][row[perm[i]]] for i in range(C.n)] for row in C.G]
    if change_basis:
        A = random_invertible(spec, C.k, rng)
        G = [encode(LinearCode(spec, tuple(map(tuple, G))), a) for a in A]
    return IsoPair(C, LinearCode(spec, tuple(map(tuple, G))))


def _guard_messages(C):
    if C.spec.q**C.k > MAX_MESSAGES:
        raise GuardError(f"q^k = {C.spec.q ** C.k} exceeds {MAX_MESSAGES}")


def pair_weights_by_line(C: LinearCode) -> list[int]:
    _guard_messages(C)
    return [pair_weight(encode(C, y)) for y in normalized_vectors(C.k, C.spec.q)]


def bf_equiweight(C: LinearCode, r: int = 1) -> bool:
    """Whether every ``r``-dimensional subcode has the same pair support size."""
    if r == 1:
        return len(set(pair_weights_by_line(C))) == 1
    if gaussian_binomial(r, C.k, C.spec.q) > MAX_MESSAGES:
        raise GuardError(f"PG^{r} too large")
    sizes = {len(pair_support([encode(C, y) for y in D.basis], C.n)) for D in enumerate_pg(r, C.k, C.spec)}
    return len(sizes) == 1


def bf_hamming_equiweight(C: LinearCode) -> bool:
    _guard_messages(C)
    return len({hamming_weight(encode(C, y)) for y in normalized_vectors(C.k, C.spec.q)}) == 1


def bf_iso(P: IsoPair) -> bool:
    _guard_messages(P.source)
    return all(
        pair_weight(encode(P.source, y)) == pair_weight(encode(P.target, y))
        for y in normalized_vectors(P.source.k, P.source.spec.q)
    )


def bf_gap_constant(P: IsoPair) -> bool:
    _guard_messages(P.source)
    gaps = {
        pair_weight(encode(P.source, y)) - pair_weight(encode(P.target, y))
        for y in normalized_vectors(P.source.k, P.source.spec.q)
    }
    return len(gaps) == 1


# --- benchmark ---


def exhaustive_scan(C: LinearCode, chunk: int = 1 << 18) -> tuple[bool, int]:
    """Encode all ``q^k`` messages and test pair equiweight; returns (verdict, codewords scanned).

    Vectorized with numpy: plain modular arithmetic for prime fields, the
    field's add/mul tables otherwise.
    """
    spec = C.spec
    q, k, n = spec.q, C.k, C.n
    add = np.array(spec.add_table, dtype=np.int16)
    mul = np.array(spec.mul_table, dtype=np.int16)
    G = np.array(C.G, dtype=np.int16)
    total = q**k
    weights = set()
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        if spec.e == 1:
            code = np.zeros((idx.size, n), dtype=np.int64)
            for row in range(k):
                digit = (idx // q ** (k - 1 - row)) % q
                code += digit[:, None] * G[row][None, :]
            code %= q
        else:
            code = np.zeros((idx.size, n), dtype=np.int16)
            for row in range(k):
                digit = (idx // q ** (k - 1 - row)) % q
                code = add[code, mul[digit[:, None], G[row][None, :]]]
        nz = code != 0
        pw = (nz | np.roll(nz, -1, axis=1)).sum(axis=1)
        if start == 0:
            pw = pw[1:]  # message 0 is the zero codeword
        weights.update(np.unique(pw).tolist())
    return len(weights) <= 1, total


@dataclass(frozen=True)
class BenchResult:
    q: int
    n: int
    k: int
    criterion_work: int
    bruteforce_work: int | None
    bruteforce_lines: int
    criterion_ns: int
    bruteforce_ns: int | None
    criterion_verdict: bool
    bruteforce_verdict: bool | None

    def csv_row(self) -> str:
        fields = (self.q, self.n, self.k, self.criterion_work, self.bruteforce_work, self.criterion_ns, self.bruteforce_ns)
        return ",".join("" if x is None else str(x) for x in fields)


CSV_HEADER = "q,n,k,criterion_work,bruteforce_work,criterion_ns,bruteforce_ns"


def benchmark_equiweight(C: LinearCode, run_bruteforce: bool = True) -> BenchResult:
    """Time the line-sum criterion against an exhaustive codeword scan.

    ``criterion_work`` counts the distinct lines the criterion touches;
    ``bruteforce_work`` counts codewords scanned (``q^k``) and
    ``bruteforce_lines`` the lines a scan up to scalars would need.
    """
    q, k = C.spec.q, C.k
    t0 = time.perf_counter_ns()
    verdict = is_pair_equiweight(C)
    criterion_ns = time.perf_counter_ns() - t0
    work = len(omega_support(C)) if k > 1 else 1
    bf_verdict = bf_ns = bf_work = None
    if run_bruteforce:
        t0 = time.perf_counter_ns()
        bf_verdict, bf_work = exhaustive_scan(C)
        bf_ns = time.perf_counter_ns() - t0
    return BenchResult(
        q, C.n, k, work, bf_work, gaussian_binomial(1, k, q), criterion_ns, bf_ns, bool(verdict), bf_verdict
    )

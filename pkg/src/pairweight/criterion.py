"""Pair-equiweight criteria computed from the generator's column pairs.

Everything here works from the spans ``S_j = <G_j, G_{j+1 mod n}>`` of
consecutive generator columns. The per-line sums

    f(L) = sum over j with L inside S_j of q ** -dim(S_j)

are exact ``Fraction`` values; a code is pair equiweight iff ``f`` is
constant over all lines of the message space.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .code import LinearCode
from .combinat import gaussian_binomial
from .linalg import Subspace, enumerate_pg, line_index, normalized_vectors, orthogonal_complement, span_of_pair, subspace_leq


class Answer(str, enum.Enum):
    YES = "YES"
    NO = "NO"
    INDETERMINATE = "INDETERMINATE"


@dataclass
class Verdict:
    answer: Answer
    decided_by: str
    witness: object = None
    value: int | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.answer is Answer.YES


def pair_spans(C: LinearCode) -> list[Subspace]:
    cols = C.columns
    n = C.n
    return [span_of_pair(cols[j], cols[(j + 1) % n], C.spec) for j in range(n)]


def compute_mg(C: LinearCode) -> Counter:
    """Multiplicity of each column-pair span. Values sum to ``n``."""
    return Counter(pair_spans(C))


def theta_g(C: LinearCode, U: Subspace, mg: Counter | None = None) -> int:
    mg = compute_mg(C) if mg is None else mg
    return sum(count for V, count in mg.items() if subspace_leq(V, U))


def pair_weight_theta(C: LinearCode, Dtilde: Subspace, mg: Counter | None = None) -> int:
    """Pair weight of the subcode ``Dtilde * G`` from the column-pair spans alone."""
    return C.n - theta_g(C, orthogonal_complement(Dtilde), mg)


def omega_support(C: LinearCode) -> dict[tuple[int, ...], Fraction]:
    """Nonzero per-line sums, keyed by normalized line generator.

    Only lines inside some ``S_j`` appear; every other line has sum 0. The
    number of keys is the criterion's work count and is at most ``n(q+1)``.
    """
    q = C.spec.q
    sums: dict[tuple[int, ...], Fraction] = {}
    for S in pair_spans(C):
        if S.dim == 0:
            continue
        w = Fraction(1, q**S.dim)
        for line in S.lines():
            sums[line] = sums.get(line, 0) + w
    return sums


def omega_sums(C: LinearCode) -> list[Fraction]:
    """Per-line sums for every line, in ``enumerate_pg(1, k)`` order."""
    sparse = omega_support(C)
    return [Fraction(sparse.get(v, 0)) for v in normalized_vectors(C.k, C.spec.q)]


def omega_sums_via_mg(C: LinearCode) -> list[Fraction]:
    """The same sums computed as ``sum m_G(V) / |V|`` over spans ``V`` containing the line.

    Independent of ``omega_support``: it walks the enumerated lines and tests
    containment in each distinct span.
    """
    mg = compute_mg(C)
    out = []
    for L in enumerate_pg(1, C.k, C.spec):
        total = Fraction(0)
        for V, count in mg.items():
            if V.dim >= 1 and subspace_leq(L, V):
                total += Fraction(count, V.size)
        out.append(total)
    return out


def _find_uncovered_line(k, q, covered):
    for v in normalized_vectors(k, q):
        if v not in covered:
            return v
    return None


def _constancy(sparse, k, q):
    """Return None if the sparse per-line function is constant, else two differing lines."""
    total_lines = gaussian_binomial(1, k, q)
    items = sorted(sparse.items(), key=lambda kv: line_index(kv[0], q))
    if len(items) < total_lines:
        # some line has value 0
        nonzero = [(v, x) for v, x in items if x != 0]
        if not nonzero:
            return None
        zero_line = next((v for v, x in items if x == 0), None)
        if zero_line is None:
            zero_line = _find_uncovered_line(k, q, sparse)
        return (nonzero[0][0], nonzero[0][1]), (zero_line, Fraction(0))
    first_line, first_val = items[0]
    for v, x in items[1:]:
        if x != first_val:
            return (first_line, first_val), (v, x)
    return None


def _line_witness(pair, q):
    (a, fa), (b, fb) = pair
    return {
        "lines": [line_index(a, q), line_index(b, q)],
        "vectors": [list(a), list(b)],
        "values": [str(fa), str(fb)],
    }


def is_pair_equiweight(C: LinearCode) -> Verdict:
    k, q = C.k, C.spec.q
    first_line = Subspace.span([(0,) * (k - 1) + (1,)], C.spec)
    if k == 1:
        return Verdict(Answer.YES, "k=1", value=pair_weight_theta(C, first_line))
    sparse = omega_support(C)
    bad = _constancy(sparse, k, q)
    work = {"lines_examined": len(sparse)}
    if bad is not None:
        return Verdict(Answer.NO, "Thm4.2", witness=_line_witness(bad, q), details=work)
    return Verdict(Answer.YES, "Thm4.2", value=pair_weight_theta(C, first_line), details=work)


def _mg_constant_on(mg, d, k, spec):
    """Whether ``m_G`` is constant on ``PG^d``; returns (constant, value or witness)."""
    keyed = {V: c for V, c in mg.items() if V.dim == d}
    total = gaussian_binomial(d, k, spec.q)
    values = set(keyed.values())
    if len(keyed) < total:
        values.add(0)
    if len(values) == 1:
        return True, values.pop()
    return False, None


def cor43_check(C: LinearCode) -> Verdict:
    if C.k < 3:
        return Verdict(Answer.INDETERMINATE, "Cor4.3-out-of-range")
    mg = compute_mg(C)
    planes_constant, _ = _mg_constant_on(mg, 2, C.k, C.spec)
    if not planes_constant:
        return Verdict(Answer.INDETERMINATE, "Cor4.3-hypothesis-failed")
    lines_constant, _ = _mg_constant_on(mg, 1, C.k, C.spec)
    if lines_constant:
        return Verdict(Answer.YES, "Cor4.3")
    return Verdict(Answer.NO, "Cor4.3", witness=_mg_line_witness(mg, C))


def _mg_line_witness(mg, C):
    lines = enumerate_pg(1, C.k, C.spec)
    values = [mg.get(L, 0) for L in lines]
    i = next(i for i, v in enumerate(values) if v != values[0])
    return {"lines": [0, i], "vectors": [list(lines[0].basis[0]), list(lines[i].basis[0])], "values": [values[0], values[i]]}


def _first_difference(values):
    for i, v in enumerate(values):
        if v != values[0]:
            return 0, i
    return None


def necessary_sums(C: LinearCode, r: int, mg: Counter | None = None) -> list[Fraction]:
    """Per-line sums ``sum n_{k-r-dim V, k-1-dim V} / |V| * m_G(V)`` over ``V`` of dim <= min(2, k-r) containing the line."""
    mg = compute_mg(C) if mg is None else mg
    k, q = C.k, C.spec.q
    s = min(2, k - r)
    out = []
    for L in enumerate_pg(1, k, C.spec):
        total = Fraction(0)
        for V, count in mg.items():
            d = V.dim
            if 1 <= d <= s and subspace_leq(L, V):
                total += Fraction(gaussian_binomial(k - r - d, k - 1 - d, q) * count, V.size)
        out.append(total)
    return out


def sufficient_quantities(C: LinearCode, r: int, mg: Counter | None = None) -> list[Fraction]:
    """Per-plane ``m_G(P) + (1 / n_{1,k-r-1}) * sum of m_G over lines of P``."""
    mg = compute_mg(C) if mg is None else mg
    k, q = C.k, C.spec.q
    scale = Fraction(1, gaussian_binomial(1, k - r - 1, q))
    line_counts = {V: c for V, c in mg.items() if V.dim == 1}
    out = []
    for P in enumerate_pg(2, k, C.spec):
        inner = sum(c for L, c in line_counts.items() if subspace_leq(L, P))
        out.append(mg.get(P, 0) + scale * inner)
    return out


def r_equiweight_analysis(C: LinearCode, r: int) -> Verdict:
    k = C.k
    if k < 2 or not 1 <= r <= k - 1:
        raise ValueError(f"need k >= 2 and 1 <= r <= k-1, got k={k}, r={r}")
    mg = compute_mg(C)
    if r == k - 1:
        constant, _ = _mg_constant_on(mg, 1, k, C.spec)
        if constant:
            return Verdict(Answer.YES, "Thm4.4(b)")
        return Verdict(Answer.NO, "Thm4.4(b)", witness=_mg_line_witness(mg, C))
    if r == 1:
        return is_pair_equiweight(C)
    nec = necessary_sums(C, r, mg)
    bad = _first_difference(nec)
    if bad is not None:
        i, j = bad
        lines = enumerate_pg(1, k, C.spec)
        witness = {
            "lines": [i, j],
            "vectors": [list(lines[i].basis[0]), list(lines[j].basis[0])],
            "values": [str(nec[i]), str(nec[j])],
        }
        return Verdict(Answer.NO, "Thm4.4(a)-necessary-failed", witness=witness)
    if _first_difference(sufficient_quantities(C, r, mg)) is None:
        return Verdict(Answer.YES, "Thm4.4(c)-sufficient")
    return Verdict(Answer.INDETERMINATE, "Thm4.4(a)-passed-(c)-failed")

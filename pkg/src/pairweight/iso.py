"""Does a given linear isomorphism between two codes preserve pair weights?

The isomorphism is given extensionally: row ``i`` of the target generator is
the image of row ``i`` of the source generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .code import LinearCode, pair_weight
from .criterion import Answer, Verdict, _constancy, _line_witness, omega_support


@dataclass(frozen=True)
class IsoPair:
    source: LinearCode
    target: LinearCode

    def __post_init__(self):
        s, t = self.source, self.target
        if s.spec != t.spec:
            raise ValueError("source and target are over different fields")
        if (s.n, s.k) != (t.n, t.k):
            raise ValueError(f"parameter mismatch: [{s.n},{s.k}] vs [{t.n},{t.k}]")


@dataclass(frozen=True)
class GapReport:
    constant_gap: bool
    gap: int | None = None
    failing_lines: dict | None = None
    lines_examined: int = 0


def gap_analysis(P: IsoPair) -> GapReport:
    """Check whether ``w_p(c) - w_p(phi(c))`` is the same for every nonzero ``c``."""
    src, tgt = omega_support(P.source), omega_support(P.target)
    diff: dict[tuple[int, ...], Fraction] = {}
    for line in src.keys() | tgt.keys():
        diff[line] = src.get(line, Fraction(0)) - tgt.get(line, Fraction(0))
    q = P.source.spec.q
    # lines outside both supports have difference 0, as _constancy assumes
    bad = _constancy(diff, P.source.k, q)
    if bad is not None:
        return GapReport(False, failing_lines=_line_witness(bad, q), lines_examined=len(diff))
    g1, h1 = P.source.G[0], P.target.G[0]
    return GapReport(True, gap=pair_weight(g1) - pair_weight(h1), lines_examined=len(diff))


def preserves_pair_weights(P: IsoPair) -> Verdict:
    report = gap_analysis(P)
    if not report.constant_gap:
        return Verdict(Answer.NO, "Cor5.2", witness=report.failing_lines)
    if report.gap != 0:
        return Verdict(Answer.NO, "Cor5.2", witness={"gap": report.gap}, value=report.gap)
    return Verdict(Answer.YES, "Cor5.2", value=0)

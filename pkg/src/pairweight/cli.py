"""Command-line front end.

Code files::

    # comment
    q 4 poly 1 1 1        (poly only for proper prime powers; optional if built in)
    n 4
    k 2
    1 0 1 0
    0 1 0 1

Isomorphism files hold two code blocks separated by a line ``---``; row ``i``
of the second block is the image of row ``i`` of the first.

Exit status: 0 analysis completed, 2 input error, 3 internal consistency fault
(including criterion/oracle disagreement under ``--verify``).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .code import LinearCode, encode, hamming_weight, pair_weight
from .combinat import build_T, check_T_identities
from .criterion import Answer, Verdict, is_pair_equiweight, omega_sums, r_equiweight_analysis
from .errors import CodeFileError, ConsistencyError, GuardError
from .gf import field_of_order
from .hierarchy import hamming_hierarchy, ldp, mpds_report, pair_hierarchy
from .iso import IsoPair, gap_analysis, preserves_pair_weights
from .linalg import normalized_vectors
from .oracle import CSV_HEADER, MAX_MESSAGES, benchmark_equiweight, bf_equiweight, bf_hamming_equiweight, bf_iso, random_code

EXIT_OK, EXIT_INPUT, EXIT_FAULT = 0, 2, 3


# --- file formats ---


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise CodeFileError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _parse_block(lines) -> LinearCode:
    """Parse ``(lineno, text)`` pairs of one code block."""
    header: dict[str, object] = {}
    rows = []
    last = 0
    for lineno, raw in lines:
        last = lineno
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        tokens = text.split()
        key = tokens[0]
        if key in ("q", "n", "k"):
            if rows:
                raise CodeFileError(f"header line {key!r} after matrix rows", lineno)
            if key in header:
                raise CodeFileError(f"duplicate header {key!r}", lineno)
            if key == "q":
                if len(tokens) >= 3 and tokens[2] == "poly":
                    q = _ints(tokens[1:2], lineno)[0]
                    header["poly"] = tuple(_ints(tokens[3:], lineno))
                elif len(tokens) == 2:
                    q = _ints(tokens[1:], lineno)[0]
                else:
                    raise CodeFileError("expected 'q <int> [poly c0 ... ce]'", lineno)
                header["q"] = (q, lineno)
            else:
                if len(tokens) != 2:
                    raise CodeFileError(f"expected '{key} <int>'", lineno)
                header[key] = _ints(tokens[1:], lineno)[0]
            continue
        missing = [h for h in ("q", "n", "k") if h not in header]
        if missing:
            raise CodeFileError(f"matrix row before header(s) {', '.join(missing)}", lineno)
        row = _ints(tokens, lineno)
        if len(row) != header["n"]:
            raise CodeFileError(f"row has {len(row)} entries, expected n={header['n']}", lineno)
        rows.append((lineno, row))

    missing = [h for h in ("q", "n", "k") if h not in header]
    if missing:
        raise CodeFileError(f"missing header(s) {', '.join(missing)}", last or None)
    q, qline = header["q"]
    try:
        spec = field_of_order(q, header.get("poly"))
    except ValueError as exc:
        raise CodeFileError(str(exc), qline) from None
    n, k = header["n"], header["k"]
    if n < 2:
        raise CodeFileError(f"n must be at least 2, got {n}", last)
    if not 1 <= k <= n:
        raise CodeFileError(f"k must satisfy 1 <= k <= n, got {k}", last)
    if len(rows) != k:
        raise CodeFileError(f"expected {k} matrix rows, found {len(rows)}", last)
    for lineno, row in rows:
        for x in row:
            if not 0 <= x < q:
                raise CodeFileError(f"entry {x} out of range [0, {q})", lineno)
    try:
        return LinearCode(spec, tuple(tuple(r) for _, r in rows))
    except ValueError as exc:
        raise CodeFileError(str(exc), rows[-1][0] if rows else last) from None


def parse_code_file(text: str) -> LinearCode:
    return _parse_block(enumerate(text.splitlines(), start=1))


def parse_iso_file(text: str) -> IsoPair:
    lines = list(enumerate(text.splitlines(), start=1))
    seps = [i for i, (_, t) in enumerate(lines) if t.strip() == "---"]
    if len(seps) != 1:
        raise CodeFileError(f"expected exactly one '---' separator, found {len(seps)}")
    cut = seps[0]
    source = _parse_block(lines[:cut])
    target = _parse_block(lines[cut + 1 :])
    try:
        return IsoPair(source, target)
    except ValueError as exc:
        raise CodeFileError(str(exc), lines[cut][0]) from None


def format_code_file(C: LinearCode) -> str:
    spec = C.spec
    qline = f"q {spec.q}"
    if spec.e > 1:
        qline += " poly " + " ".join(map(str, spec.modulus))
    out = [qline, f"n {C.n}", f"k {C.k}"]
    out += [" ".join(map(str, row)) for row in C.G]
    return "\n".join(out) + "\n"


# --- reports ---


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Answer):
        return x.value
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _verdict(v: Verdict) -> dict:
    out = {"answer": v.answer.value, "decided_by": v.decided_by}
    if v.value is not None:
        out["value"] = v.value
    if v.witness is not None:
        out["witness"] = v.witness
    return out


def _code_info(C: LinearCode) -> dict:
    return {"q": C.spec.q, "n": C.n, "k": C.k}


def render_json(report: dict) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"


def render_text(report: dict, indent: int = 0) -> str:
    pad = "  " * indent
    out = []
    for key, value in report.items():
        if isinstance(value, dict):
            out.append(f"{pad}{key}:")
            out.append(render_text(value, indent + 1).rstrip("\n"))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            out.append(f"{pad}{key}:")
            for item in value:
                out.append(f"{pad}  - " + ", ".join(f"{k}={_short(v)}" for k, v in item.items()))
        else:
            out.append(f"{pad}{key}: {_short(value)}")
    return "\n".join(out) + "\n"


def _short(v):
    v = _jsonable(v)
    if isinstance(v, list):
        return "[" + ", ".join(_short(x) for x in v) + "]"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


# --- commands ---


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CodeFileError(f"cannot read {path}: {exc.strerror}") from None


def cmd_weights(args):
    C = parse_code_file(_read(args.file))
    if C.spec.q**C.k > MAX_MESSAGES:
        raise GuardError(f"q^k = {C.spec.q ** C.k} codewords is too many to list")
    words = []
    for y in normalized_vectors(C.k, C.spec.q):
        c = encode(C, y)
        words.append({"message": list(y), "codeword": list(c), "hamming": hamming_weight(c), "pair": pair_weight(c)})
    return EXIT_OK, {
        "code": _code_info(C),
        "codewords": words,
        "pair_equiweight": len({w["pair"] for w in words}) == 1,
        "hamming_equiweight": len({w["hamming"] for w in words}) == 1,
    }


def cmd_hierarchy(args):
    C = parse_code_file(_read(args.file))
    return EXIT_OK, {
        "code": _code_info(C),
        "hamming": list(hamming_hierarchy(C, args.max_r).values),
        "pair": list(pair_hierarchy(C, args.max_r).values),
    }


def cmd_equiweight(args):
    C = parse_code_file(_read(args.file))
    r = args.r
    if r == 1:
        verdict = is_pair_equiweight(C)
    else:
        if not 1 <= r <= C.k - 1:
            raise ValueError(f"--r must lie in [1, {C.k - 1}] for k={C.k}")
        verdict = r_equiweight_analysis(C, r)
    report = {"code": _code_info(C), "r": r, "verdict": _verdict(verdict)}
    if r == 1 and C.spec.q**C.k <= MAX_MESSAGES:
        report["hamming_equiweight"] = bf_hamming_equiweight(C)
    if args.verify:
        truth = bf_equiweight(C, r)
        report["oracle"] = truth
        if verdict.answer is Answer.INDETERMINATE:
            report["verdict"] = _verdict(Verdict(Answer.YES if truth else Answer.NO, "brute-force"))
        elif bool(verdict) != truth:
            report["fault"] = "criterion contradicts brute force"
            return EXIT_FAULT, report
    return EXIT_OK, report


def cmd_mpds(args):
    C = parse_code_file(_read(args.file))
    rep = mpds_report(C)
    return EXIT_OK, {
        "code": _code_info(C),
        "is_mpds": rep.is_mpds,
        "pair_hierarchy": list(rep.hierarchy.values),
        "bounds": [{"r": r, "value": d, "bound": b} for r, d, b in rep.bound_table],
    }


def cmd_ldp(args):
    C = parse_code_file(_read(args.file))
    return EXIT_OK, {"code": _code_info(C), "ldp": list(ldp(C, at_least=not args.exact))}


def cmd_iso(args):
    P = parse_iso_file(_read(args.file))
    gap = gap_analysis(P)
    verdict = preserves_pair_weights(P)
    report = {
        "code": _code_info(P.source),
        "constant_gap": gap.constant_gap,
        "gap": gap.gap,
        "verdict": _verdict(verdict),
        "omega_source": omega_sums(P.source) if P.source.k <= 8 else None,
        "omega_target": omega_sums(P.target) if P.target.k <= 8 else None,
    }
    if args.verify:
        truth = bf_iso(P)
        report["oracle"] = truth
        if bool(verdict) != truth:
            report["fault"] = "criterion contradicts brute force"
            return EXIT_FAULT, report
    return EXIT_OK, report


def _field_arg(args):
    try:
        return field_of_order(args.q)
    except ValueError as exc:
        raise CodeFileError(str(exc)) from None


def cmd_tmatrix(args):
    spec = _field_arg(args)
    if args.check:
        rep = check_T_identities(args.k, spec)
        report = {"q": spec.q, "k": args.k, "passed": rep.passed, "identities": [{"name": n, "ok": ok} for n, ok in rep.entries]}
        return (EXIT_OK if rep.passed else EXIT_FAULT), report
    if args.r is None or args.s is None:
        raise ValueError("tmatrix needs --r and --s, or --check")
    T = build_T(args.r, args.s, args.k, spec)
    return EXIT_OK, {
        "q": spec.q,
        "k": args.k,
        "r": args.r,
        "s": args.s,
        "rows": [str(V) for V in T.rows],
        "cols": [str(W) for W in T.cols],
        "matrix": ["".join(map(str, row)) for row in T.entries],
    }


def cmd_random(args):
    spec = _field_arg(args)
    C = random_code(spec, args.n, args.k, args.seed)
    if args.json:
        return EXIT_OK, {"code": _code_info(C), "seed": args.seed, "generator": [list(r) for r in C.G]}
    return EXIT_OK, format_code_file(C)


def cmd_bench(args):
    if args.file:
        C = parse_code_file(_read(args.file))
    else:
        if None in (args.q, args.n, args.k):
            raise ValueError("bench needs a code file or --q, --n and --k")
        C = random_code(_field_arg(args), args.n, args.k, args.seed)
    res = benchmark_equiweight(C, run_bruteforce=not args.skip_bruteforce)
    if args.json:
        return EXIT_OK, {
            "code": _code_info(C),
            "criterion_work": res.criterion_work,
            "bruteforce_work": res.bruteforce_work,
            "bruteforce_lines": res.bruteforce_lines,
            "criterion_ns": res.criterion_ns,
            "bruteforce_ns": res.bruteforce_ns,
            "criterion_verdict": res.criterion_verdict,
            "bruteforce_verdict": res.bruteforce_verdict,
        }
    text = (CSV_HEADER + "\n" if args.header else "") + res.csv_row() + "\n"
    if res.bruteforce_verdict is not None and res.bruteforce_verdict != res.criterion_verdict:
        sys.stderr.write("criterion contradicts exhaustive scan\n")
        return EXIT_FAULT, text
    return EXIT_OK, text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(prog="pairweight", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", parents=[common], help="list every codeword up to scalars")
    p.add_argument("file")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("hierarchy", parents=[common], help="generalized Hamming and pair weight hierarchies")
    p.add_argument("file")
    p.add_argument("--max-r", type=int, default=None)
    p.set_defaults(func=cmd_hierarchy)

    p = sub.add_parser("equiweight", parents=[common], help="pair (r-)equiweight verdict")
    p.add_argument("file")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--verify", action="store_true", help="also run the brute-force oracle")
    p.set_defaults(func=cmd_equiweight)

    p = sub.add_parser("mpds", parents=[common], help="Singleton-type bound table and MPDS test")
    p.add_argument("file")
    p.set_defaults(func=cmd_mpds)

    p = sub.add_parser("ldp", parents=[common], help="length/dimension profile")
    p.add_argument("file")
    p.add_argument("--exact", action="store_true", help="require dim C_J == r instead of >= r")
    p.set_defaults(func=cmd_ldp)

    p = sub.add_parser("iso", parents=[common], help="does the row-matched isomorphism preserve pair weights")
    p.add_argument("file")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("tmatrix", parents=[common], help="subspace incidence matrices")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--check", action="store_true", help="verify the incidence identities")
    p.set_defaults(func=cmd_tmatrix)

    p = sub.add_parser("random", parents=[common], help="seeded random code in code-file format")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("bench", parents=[common], help="criterion vs exhaustive scan, CSV row")
    p.add_argument("file", nargs="?")
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--skip-bruteforce", action="store_true")
    p.add_argument("--header", action="store_true", help="print the CSV header line")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        status, report = args.func(args)
    except ConsistencyError as exc:
        sys.stderr.write(f"internal consistency fault: {exc}\n")
        return EXIT_FAULT
    except (CodeFileError, GuardError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    if isinstance(report, str):
        out.write(report)
    elif args.json:
        out.write(render_json(report))
    else:
        out.write(render_text(report))
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

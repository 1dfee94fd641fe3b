"""One test per acceptance criterion; the terminal summary prints PASS/FAIL per line."""

import time
from contextlib import contextmanager
from fractions import Fraction

from pairweight.code import encode, pair_support, pair_weight, pair_weight_via_runs
from pairweight.combinat import check_T_identities
from pairweight.criterion import Answer, compute_mg, is_pair_equiweight, omega_sums, pair_weight_theta
from pairweight.gf import make_field
from pairweight.hierarchy import hamming_hierarchy, ldp, mpds_report, pair_hierarchy, singleton_bounds
from pairweight.iso import preserves_pair_weights
from pairweight.linalg import Subspace, normalized_vectors
from pairweight.oracle import SplitMix64, benchmark_equiweight, bf_equiweight, bf_hamming_equiweight, bf_iso, permuted_pair, random_code

@contextmanager
def within(seconds):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"

def test_c1_pair_vs_hamming_equiweight(load_code):
    with within(1):
        C1, C2 = load_code("example213_c1"), load_code("example213_c2")
        assert is_pair_equiweight(C1).answer is Answer.YES
        assert not bf_hamming_equiweight(C1)
        assert is_pair_equiweight(C2).answer is Answer.NO
        assert bf_hamming_equiweight(C2)

def test_c2_ternary_mpds_hierarchy(load_code):
    with within(1):
        C = load_code("example36")
        assert C.spec.q == 3 and C.G == ((1, 0, 1, 1), (0, 1, 2, 1))
        assert pair_hierarchy(C).values == (4, 4)
        assert mpds_report(C).is_mpds

def test_c3_full_length_hierarchies(load_code):
    with within(1):
        C = load_code("remark33")
        assert C.n == 3 and pair_hierarchy(C).values == (3, 3)
        D = load_code("cor34")
        assert hamming_hierarchy(D)[2] == 4
        assert pair_hierarchy(D).values == (3, 4)

def test_c4_binary_length21_equiweight(load_code):
    with within(1):
        C = load_code("example45")
        assert (C.n, C.k, C.spec.q) == (21, 3, 2)
        v = is_pair_equiweight(C)
        assert v.answer is Answer.YES and v.value == 14
        # every row of the weight table: the seven nonzero codewords
        assert [pair_weight(encode(C, y)) for y in normalized_vectors(3, 2)] == [14] * 7

def test_c5_omega_sums_and_isomorphisms(load_code, load_iso):
    with within(1):
        reps = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
        lex = list(normalized_vectors(3, 2))

        def keyed(C):
            vals = omega_sums(C)
            return [vals[lex.index(v)] for v in reps]

        h, f = Fraction(1, 2), Fraction(1, 4)
        assert keyed(load_code("example55_c")) == [h, 1, h, h, h, 0, 0]
        assert keyed(load_code("example55_c1")) == [h, 1, h, h, h, 0, 0]
        assert keyed(load_code("example55_c2")) == [h, 1, h, f, f, f, 0]
        assert preserves_pair_weights(load_iso("example55_phi1")).answer is Answer.YES
        assert preserves_pair_weights(load_iso("example55_phi2")).answer is Answer.NO

def test_c6_incidence_identities():
    with within(10):
        for q, k in [(2, 2), (2, 3), (2, 4), (3, 3)]:
            report = check_T_identities(k, make_field(q))
            assert report.passed, (q, k, report.failures())

def _check_instance(C, rng):
    n, k = C.n, C.k
    mg = compute_mg(C)
    # (i) column-pair weight formula against direct pair support, every line
    for y in normalized_vectors(k, C.spec.q):
        c = encode(C, y)
        assert pair_weight_theta(C, Subspace.span([y], C.spec), mg) == pair_weight(c)
        # (ii) run formula
        assert pair_weight_via_runs([c]) == len(pair_support([c]))
    # (iii) equiweight criterion against brute force
    assert bool(is_pair_equiweight(C)) == bf_equiweight(C, 1)
    # (iv) sandwich, monotonicity (checked inside pair_hierarchy) and Singleton-type bound;
    # the hierarchy cross-checks the weight formula on every subspace of every level
    dh = hamming_hierarchy(C).values
    dp = pair_hierarchy(C, cross_check=True).values
    for r in range(1, k + 1):
        if r < k or dh[-1] < n:
            assert dh[r - 1] + 1 <= dp[r - 1] <= 2 * dh[r - 1]
    if dh[-1] == n:
        assert dp[-1] == n
    assert all(d <= b for d, b in zip(dp, singleton_bounds(n, k)))
    # (v) length/dimension profile
    assert ldp(C) == dp
    # (vi) isomorphism verdict on a permuted copy
    P = permuted_pair(C, rng)
    assert bool(preserves_pair_weights(P)) == bf_iso(P)

def test_c7_differential_battery():
    with within(300):
        checked = 0
        for q in (2, 3):
            F = make_field(q)
            for k in (2, 3, 4):
                for n in range(4, 11):
                    for i in range(200):
                        seed = ((q * 16 + k) * 32 + n) * 1000 + i
                        rng = SplitMix64(seed)
                        C = random_code(F, n, k, rng)
                        _check_instance(C, rng)
                        checked += 1
        assert checked == 2 * 3 * 7 * 200

def test_c8_benchmark_work_counts():
    with within(120):
        C = random_code(make_field(31), 10, 5, 1)
        res = benchmark_equiweight(C)
        assert res.criterion_work <= 320
        assert res.bruteforce_work == 28629151
        assert res.criterion_verdict == res.bruteforce_verdict
        assert res.criterion_ns * 10 <= res.bruteforce_ns

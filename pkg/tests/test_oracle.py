import pytest

from pairweight.code import LinearCode
from pairweight.errors import GuardError
from pairweight.gf import field_of_order, make_field
from pairweight.iso import IsoPair
from pairweight.linalg import rank
from pairweight.oracle import (
    CSV_HEADER,
    SplitMix64,
    benchmark_equiweight,
    bf_equiweight,
    bf_hamming_equiweight,
    bf_iso,
    exhaustive_scan,
    pair_weights_by_line,
    random_code,
)


def test_splitmix_reference_values():
    # first outputs for seed 0 from the reference implementation
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_permutation_is_permutation():
    rng = SplitMix64(9)
    for n in range(1, 12):
        assert sorted(rng.permutation(n)) == list(range(n))


def test_random_code_deterministic():
    F = make_field(2)
    assert random_code(F, 4, 2, 17).G == random_code(F, 4, 2, 17).G
    assert random_code(F, 8, 3, 1).G != random_code(F, 8, 3, 2).G


def test_random_code_full_rank():
    F = make_field(3)
    C = random_code(F, 6, 3, 5)
    assert rank(C.G, F) == 3
    sq = random_code(F, 4, 4, 5)
    assert rank(sq.G, F) == 4
    with pytest.raises(ValueError):
        random_code(F, 3, 4, 0)
    with pytest.raises(ValueError):
        random_code(F, 1, 1, 0)


def test_bf_examples(load_code, load_iso):
    assert bf_equiweight(load_code("example45"))
    assert set(pair_weights_by_line(load_code("example45"))) == {14}
    assert not bf_equiweight(load_code("example213_c2"))
    assert sorted(pair_weights_by_line(load_code("example213_c2"))) == [3, 3, 4]
    assert bf_hamming_equiweight(load_code("example213_c2"))
    assert bf_equiweight(LinearCode(make_field(2), ((1, 0, 1),)))
    assert bf_iso(load_iso("example55_phi1"))
    assert not bf_iso(load_iso("example55_phi2"))
    C = load_code("example36")
    assert bf_iso(IsoPair(C, C))


def test_bf_guard():
    C = random_code(make_field(31), 6, 5, 1)
    with pytest.raises(GuardError):
        pair_weights_by_line(C)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_exhaustive_scan_agrees(q):
    F = field_of_order(q)
    for seed in range(40):
        C = random_code(F, 4 + seed % 3, 2, seed)
        verdict, work = exhaustive_scan(C, chunk=7)
        assert work == q**2
        assert verdict == bf_equiweight(C)


def test_benchmark_small(load_code):
    res = benchmark_equiweight(load_code("example45"))
    assert res.criterion_verdict and res.bruteforce_verdict
    assert res.bruteforce_work == 8 and res.bruteforce_lines == 7
    assert res.criterion_work <= 21 * 3
    row = res.csv_row().split(",")
    assert len(row) == len(CSV_HEADER.split(",")) == 7
    assert row[:5] == ["2", "21", "3", str(res.criterion_work), "8"]


def test_benchmark_k1_and_skip():
    C = LinearCode(make_field(3), ((1, 2, 0, 1),))
    res = benchmark_equiweight(C, run_bruteforce=False)
    assert res.criterion_work == 1 and res.bruteforce_lines == 1
    row = res.csv_row().split(",")
    assert res.bruteforce_work is None and row[4] == row[6] == ""


def test_criterion_work_bound():
    rng = SplitMix64(1)
    for _ in range(100):
        q = (2, 3, 5)[rng.below(3)]
        k = 2 + rng.below(3)
        C = random_code(make_field(q), k + rng.below(8), k, rng)
        assert benchmark_equiweight(C, run_bruteforce=False).criterion_work <= C.n * (q + 1)


def test_benchmark_reproducible():
    a = benchmark_equiweight(random_code(make_field(5), 6, 3, 42))
    b = benchmark_equiweight(random_code(make_field(5), 6, 3, 42))
    assert (a.criterion_work, a.bruteforce_work, a.criterion_verdict) == (b.criterion_work, b.bruteforce_work, b.criterion_verdict)

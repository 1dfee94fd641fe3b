import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pairweight.combinat import gaussian_binomial
from pairweight.gf import field_of_order, make_field
from pairweight.linalg import (
    Subspace,
    enumerate_pg,
    line_index,
    normalized_vectors,
    nullspace,
    orthogonal_complement,
    pg_indexed,
    rank,
    rref,
    span_of_pair,
    subspace_leq,
)


def e(i, k):
    return tuple(int(j == i) for j in range(k))


def all_vectors(V):
    """Every element of V by enumerating all coefficient combinations."""
    F = V.spec
    out = set()
    for coeffs in itertools.product(range(F.q), repeat=V.dim):
        v = [0] * V.ambient_dim
        for c, row in zip(coeffs, V.basis):
            v = [F.add_table[x][F.mul_table[c][y]] for x, y in zip(v, row)]
        out.add(tuple(v))
    return out


def test_rref_examples(F2):
    assert rref([[1, 1, 0], [0, 1, 1]], F2)[1] == 2
    assert rref([[0, 0, 0], [0, 0, 0]], F2)[1] == 0
    R, rk, piv = rref([[1, 2], [2, 4]], make_field(5))
    assert rk == 1 and piv == (0,) and R == ((1, 2), (0, 0))


def test_rref_is_reduced():
    F = make_field(3)
    R, rk, piv = rref([[2, 1, 0, 1], [1, 1, 1, 0], [0, 2, 1, 2]], F)
    for i, pc in enumerate(piv):
        assert R[i][pc] == 1
        assert all(R[j][pc] == 0 for j in range(len(R)) if j != i)
    assert list(piv) == sorted(piv)


def test_complement_examples(F2):
    assert orthogonal_complement(Subspace.span([e(0, 3)], F2)) == Subspace.span([e(1, 3), e(2, 3)], F2)
    assert orthogonal_complement(Subspace.zero(3, F2)) == Subspace.full(3, F2)
    W = orthogonal_complement(Subspace.span([(1, 1, 1)], F2))
    assert W == Subspace.span([(1, 1, 0), (0, 1, 1)], F2)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_duality_is_bijection(q, k):
    F = make_field(q)
    for r in range(k + 1):
        pg = enumerate_pg(r, k, F)
        images = [orthogonal_complement(V) for V in pg]
        assert all(W.dim == k - r for W in images)
        assert set(images) == set(enumerate_pg(k - r, k, F))
        for V, W in zip(pg, images):
            assert orthogonal_complement(W) == V
            assert all(sum(F.mul_table[a][b] for a, b in zip(v, w)) % q == 0 for v in V.basis for w in W.basis)


def test_enumerate_counts(F2):
    assert len(enumerate_pg(1, 3, F2)) == 7
    assert enumerate_pg(0, 4, F2) == [Subspace.zero(4, F2)]
    assert len(enumerate_pg(2, 4, F2)) == 35
    with pytest.raises(ValueError):
        enumerate_pg(4, 3, F2)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_enumerate_matches_gaussian_binomial(q):
    F = field_of_order(q)
    for k in range(6 if q == 2 else 5):
        for r in range(k + 1):
            pg = enumerate_pg(r, k, F)
            assert len(pg) == len(set(pg)) == gaussian_binomial(r, k, q)


def test_enumeration_order_for_lines():
    F = make_field(3)
    lines = enumerate_pg(1, 3, F)
    vecs = list(normalized_vectors(3, 3))
    assert vecs == sorted(vecs)
    assert [L.basis[0] for L in lines] == vecs
    assert [line_index(v, 3) for v in vecs] == list(range(len(vecs)))


def test_leq(F2):
    assert subspace_leq(Subspace.zero(3, F2), Subspace.span([e(2, 3)], F2))
    assert subspace_leq(Subspace.span([e(0, 3)], F2), Subspace.span([e(0, 3), e(1, 3)], F2))
    assert not subspace_leq(Subspace.span([e(2, 3)], F2), Subspace.span([e(0, 3), e(1, 3)], F2))
    with pytest.raises(ValueError):
        subspace_leq(Subspace.zero(2, F2), Subspace.zero(3, F2))


def test_span_of_pair(F2):
    assert span_of_pair(e(0, 3), e(1, 3), F2).dim == 2
    assert span_of_pair((0, 0), (0, 0), F2) == Subspace.zero(2, F2)
    F5 = make_field(5)
    assert span_of_pair((1, 2), (2, 4), F5) == Subspace.span([(1, 2)], F5)


def test_lines_of_subspace():
    F = make_field(3)
    V = Subspace.span([(1, 0, 2, 1), (0, 1, 1, 1)], F)
    lines = V.lines()
    assert len(lines) == 4
    expected = {min(tuple(F.mul_table[c][x] for x in v) for c in (1, 2)) for v in all_vectors(V) if any(v)}
    # normalized representatives are the scalar multiples with leading 1
    assert {L for L in lines} == {v for v in all_vectors(V) if any(v) and next(x for x in v if x) == 1}
    assert len(expected) == 4


def test_nullspace():
    F = make_field(3)
    M = [(1, 2, 0, 1), (0, 1, 1, 2)]
    N = nullspace(M, F, 4)
    assert len(N) == 2
    for x in N:
        for row in M:
            assert sum(a * b for a, b in zip(row, x)) % 3 == 0


def test_pg_indexed_pairs_hyperplanes(F2):
    lines = pg_indexed(1, 3, F2)
    planes = pg_indexed(2, 3, F2)
    assert [orthogonal_complement(L) for L in lines] == planes


@st.composite
def subspace_with_two_bases(draw):
    q = draw(st.sampled_from([2, 3, 5]))
    k = draw(st.integers(1, 5))
    F = make_field(q)
    r = draw(st.integers(0, k))
    vec = st.tuples(*[st.integers(0, q - 1)] * k)
    rows = draw(st.lists(vec, min_size=r, max_size=r))
    # a second spanning set: random combinations plus the originals in another order
    mixers = draw(st.lists(st.tuples(*[st.integers(0, q - 1)] * max(r, 1)), min_size=2, max_size=4))
    combos = []
    for m in mixers:
        v = [0] * k
        for c, row in zip(m, rows):
            v = [(x + c * y) % q for x, y in zip(v, row)]
        combos.append(tuple(v))
    return F, k, rows, list(reversed(rows)) + combos


@settings(max_examples=200, deadline=None)
@given(subspace_with_two_bases())
def test_canonical_form_is_basis_independent(data):
    F, k, rows, other = data
    A = Subspace.span(rows, F, k)
    B = Subspace.span(other, F, k)
    assert A == B and hash(A) == hash(B)
    assert A.dim == rank(rows, F) if rows else A.dim == 0
    assert all_vectors(A) == all_vectors(B)

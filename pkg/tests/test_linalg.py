from fractions import Fraction

from hypothesis import given, strategies as st

from flagcoh.linalg import SparseEchelon, bareiss_rank, rank, row_reduce

small = st.integers(-4, 4)


@st.composite
def matrices(draw):
    r = draw(st.integers(1, 6))
    c = draw(st.integers(1, 6))
    return [[draw(small) for _ in range(c)] for _ in range(r)]


@given(matrices(), st.randoms())
def test_rref_invariant_under_row_permutation(m, rnd):
    shuffled = list(m)
    rnd.shuffle(shuffled)
    a, b = row_reduce(m), row_reduce(shuffled)
    assert a.rank == b.rank
    assert a.pivots == b.pivots
    assert a.rref[: a.rank] == b.rref[: b.rank]


@given(matrices())
def test_rank_agrees_with_fraction_free(m):
    assert rank(m) == bareiss_rank(m)


@given(matrices())
def test_rref_shape(m):
    red = row_reduce(m)
    for i, col in enumerate(red.pivots):
        assert red.rref[i][col] == 1
        assert all(red.rref[k][col] == 0 for k in range(len(red.rref)) if k != i)
    assert all(not any(row) for row in red.rref[red.rank :])


@given(matrices())
def test_sparse_echelon_matches_dense(m):
    e = SparseEchelon()
    for row in m:
        e.add({j: Fraction(v) for j, v in enumerate(row) if v})
    assert len(e) == rank(m)
    for row in m:
        assert e.normal({j: Fraction(v) for j, v in enumerate(row) if v}) == {}


def test_row_reduce_empty():
    assert row_reduce([]).rank == 0


def test_sparse_normal_of_independent_vector():
    e = SparseEchelon()
    e.add({0: Fraction(1), 1: Fraction(1)})
    assert e.normal({0: Fraction(1)}) == {1: Fraction(-1)}

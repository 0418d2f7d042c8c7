import pytest
from hypothesis import given, strategies as st

from conftest import matrices, same_size
from tourmat.boolmat import (
    BoolMatrix,
    BoolVec,
    DimensionError,
    asym_part,
    diag,
    identity,
    max_asymmetric,
    max_complete,
    max_general,
    ones,
    power,
    sym_part,
    transpose,
    unit_vec,
    zeros,
)
from tourmat.oracle import maximal, reference_mul


def dense_max(r: BoolMatrix) -> list[int]:
    return sorted(maximal(r.n, lambda i, j: bool(r[i, j])))


def test_identity_times_a_is_a():
    a = BoolMatrix.from_dense([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert identity(3) @ a == a
    assert a @ identity(3) == a


def test_zero_matrix_annihilates():
    a = BoolMatrix.from_dense([[1, 1], [0, 1]])
    assert zeros(2) @ a == zeros(2)


def test_complement_of_identity():
    c = ~identity(3)
    assert c.to_dense() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionError):
        identity(2) @ identity(3)
    with pytest.raises(DimensionError):
        identity(2) | identity(3)
    with pytest.raises(DimensionError):
        identity(2) @ BoolVec(3, 0)


def test_zero_dimension_rejected():
    with pytest.raises(DimensionError):
        identity(0)
    with pytest.raises(DimensionError):
        BoolMatrix(0, ())


def test_rows_must_fit():
    with pytest.raises(DimensionError):
        BoolMatrix(2, (4, 0))
    with pytest.raises(DimensionError):
        BoolMatrix.from_dense([[1, 0], [1]])


def test_vector_helpers():
    v = BoolVec.from_indices(5, [0, 3])
    assert v.labels() == [1, 4]
    assert str(v) == "[1,4]"
    assert v.count() == 2
    assert 3 in v and 2 not in v
    assert (~v).indices() == [1, 2, 4]
    assert BoolVec.from_dense([0, 1, 1]).indices() == [1, 2]
    with pytest.raises(IndexError):
        BoolVec.from_indices(2, [2])


def test_unit_vector_picks_column():
    a = BoolMatrix.from_dense([[0, 1, 0], [0, 0, 1], [1, 1, 0]])
    # A e(j) is column j
    assert (a @ unit_vec(3, 1)).indices() == [0, 2]


def test_diag():
    a = BoolMatrix.from_dense([[1, 1, 0], [0, 0, 1], [1, 0, 1]])
    assert diag(a).indices() == [0, 2]


def test_power_zero_is_identity():
    a = ones(4)
    assert power(a, 0) == identity(4)
    with pytest.raises(ValueError):
        power(a, -1)


@given(same_size(2))
def test_product_matches_reference(ab):
    a, b = ab
    assert (a @ b).to_dense() == reference_mul(a.to_dense(), b.to_dense())


@given(same_size(3))
def test_product_associative(abc):
    a, b, c = abc
    assert (a @ b) @ c == a @ (b @ c)


@given(same_size(3))
def test_product_distributes_over_sum(abc):
    a, b, c = abc
    assert a @ (b | c) == (a @ b) | (a @ c)


@given(same_size(2))
def test_transpose_of_product(ab):
    a, b = ab
    assert transpose(a @ b) == transpose(b) @ transpose(a)


@given(matrices())
def test_double_complement_and_transpose(a):
    assert ~~a == a
    assert a.T.T == a


@given(same_size(2))
def test_de_morgan(ab):
    a, b = ab
    assert ~(a | b) == ~a & ~b


@given(matrices(), st.integers(0, 5))
def test_power_is_repeated_product(a, k):
    acc = identity(a.n)
    for _ in range(k):
        acc = acc @ a
    assert power(a, k) == acc


@given(matrices())
def test_matrix_vector_product(a):
    v = BoolVec(a.n, a.rows[0])
    want = [int(any(a[i, k] and v[k] for k in range(a.n))) for i in range(a.n)]
    assert (a @ v).to_dense() == want


@given(matrices())
def test_asym_and_sym_parts_split_relation(r):
    p, s = asym_part(r), sym_part(r)
    assert (p | s) == r
    assert (p & s).is_zero()
    assert (p & p.T).is_zero()
    assert s == s.T


@given(matrices())
def test_max_general_matches_scan(r):
    assert max_general(r).indices() == dense_max(r)


@given(matrices())
def test_max_of_relation_equals_max_of_asymmetric_part(r):
    assert max_general(r) == max_general(asym_part(r)) == max_asymmetric(asym_part(r))


@given(matrices())
def test_max_complete_on_complete_relations(r):
    complete = r | ~r.T
    assert max_complete(complete) == max_general(complete)

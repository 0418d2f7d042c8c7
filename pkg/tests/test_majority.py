import pytest
from hypothesis import given

from conftest import structures
from tourmat.boolmat import BoolMatrix, identity, zeros
from tourmat.majority import (
    PreferenceProfile,
    StructureError,
    TournamentRequiredError,
    all_ties,
    from_edges,
    from_matrices,
    from_profile,
    horizon,
    lower_contour,
    require_tournament,
    upper_contour,
)


def test_fixture_contours(fixture):
    # alternative 2 (index 1)
    assert lower_contour(fixture, 1).labels() == [3]
    assert upper_contour(fixture, 1).labels() == [1, 4, 6]
    assert horizon(fixture, 1).labels() == [5]


def test_fixture_tie_matrix(fixture):
    want = ["000011", "000010", "000111", "001000", "111000", "101000"]
    assert ["".join(map(str, r)) for r in fixture.T.to_dense()] == want


def test_flipped_tie_reports_partition_failure(fixture):
    rows = list(fixture.T.rows)
    rows[0] &= ~(1 << 4)  # clear t_15 only
    with pytest.raises(StructureError) as exc:
        from_matrices(fixture.M, BoolMatrix(6, tuple(rows)))
    assert exc.value.invariant == "partition"
    assert exc.value.pair == (1, 5)


def test_diagonal_rejected():
    with pytest.raises(StructureError) as exc:
        from_matrices(identity(2), zeros(2))
    assert exc.value.invariant == "reflexivity"


def test_symmetric_majority_rejected():
    m = BoolMatrix.from_dense([[0, 1], [1, 0]])
    with pytest.raises(StructureError) as exc:
        from_matrices(m, zeros(2))
    assert exc.value.invariant == "asymmetry"


def test_asymmetric_ties_rejected():
    # t_12 set but t_21 missing, and 2 dominates 1 as well
    m = BoolMatrix.from_dense([[0, 0], [1, 0]])
    t = BoolMatrix.from_dense([[0, 1], [0, 0]])
    with pytest.raises(StructureError) as exc:
        from_matrices(m, t)
    assert exc.value.invariant == "symmetry"


def test_tie_overlapping_domination_rejected():
    m = BoolMatrix.from_dense([[0, 1], [0, 0]])
    t = BoolMatrix.from_dense([[0, 1], [1, 0]])
    with pytest.raises(StructureError) as exc:
        from_matrices(m, t)
    assert exc.value.invariant == "overlap"


def test_from_edges_errors():
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        from_edges(3, [(0, 1), (1, 0)])


def test_all_ties():
    s = all_ties(4)
    assert s.M.is_zero()
    assert s.U.count() == 16
    assert not s.is_tournament()
    with pytest.raises(TournamentRequiredError):
        require_tournament(s)


def test_profile_majority():
    # Condorcet cycle
    p = PreferenceProfile.of(3, [(0, 1, 2), (1, 2, 0), (2, 0, 1)])
    s = from_profile(p)
    assert sorted(s.edges()) == [(0, 1), (1, 2), (2, 0)]
    # even split gives a tie
    s = from_profile(PreferenceProfile.of(2, [(0, 1), (1, 0)]))
    assert s.M.is_zero() and s.T[0, 1]


def test_profile_validation():
    with pytest.raises(ValueError):
        PreferenceProfile.of(3, [(0, 1, 1)])
    with pytest.raises(ValueError):
        from_profile(PreferenceProfile.of(2, [(0, 1)]))


def test_digest_stable(fixture):
    assert fixture.digest == from_edges(6, fixture.edges()).digest
    assert len(fixture.digest) == 16


@given(structures())
def test_partition_holds(s):
    assert (s.M | s.M.T | s.T | s.E).count() == s.n * s.n
    assert (s.M & s.M.T).is_zero()
    assert (s.T & (s.M | s.M.T | s.E)).is_zero()
    assert s.T == s.T.T


@given(structures())
def test_contours_partition_others(s):
    for i in range(s.n):
        L, D, H = lower_contour(s, i), upper_contour(s, i), horizon(s, i)
        assert (L | D | H).count() == s.n - 1
        assert (L & D).is_empty() and (L & H).is_empty() and (D & H).is_empty()

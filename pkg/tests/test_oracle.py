import pytest
from hypothesis import given

from conftest import structures
from tourmat import oracle
from tourmat.boolmat import max_general
from tourmat.closure import m_ladder
from tourmat.gen import GenSpec, generate
from tourmat.majority import TournamentRequiredError, from_edges


def test_fixture_values(fixture):
    assert max_general(oracle.covering_relation(fixture, 3)).labels() == [1, 3, 4, 5, 6]
    assert max_general(oracle.captured_relation(fixture)).labels() == [1, 2, 3, 4, 5, 6]
    assert max_general(oracle.trapped_relation(fixture)).labels() == [3, 4, 5, 6]
    assert oracle.minimal_dominant_set(fixture).labels() == [1, 2, 3, 4, 5, 6]
    assert oracle.minimal_undominated_union(fixture).labels() == [4, 5, 6]
    assert oracle.source_components(fixture).labels() == [4, 5, 6]
    assert oracle.distances(fixture).diameter == 3


def test_modified_covering_can_be_symmetric():
    # 1 and 2 tied, both dominate 3: each covers the other
    s = from_edges(3, [(0, 2), (1, 2)])
    r = oracle.covering_relation(s, 2, modified=True)
    assert r[0, 1] and r[1, 0]
    assert not oracle.covering_relation(s, 2)[0, 1]


def test_three_cycle_weak_stability():
    s = generate(GenSpec(n=3, kind="cycle"))
    for v in (1, 2, 3):
        for i in range(3):
            assert not oracle.is_weakly_stable(s, {i}, v)
        for pair in ({0, 1}, {1, 2}, {0, 2}):
            assert oracle.is_weakly_stable(s, pair, v)


def test_whole_set_is_stable(fixture):
    for v in (2, 3):
        assert oracle.is_weakly_stable(fixture, range(6), v)


def test_empty_set_rejected(fixture):
    with pytest.raises(ValueError):
        oracle.is_weakly_stable(fixture, [], 2)
    with pytest.raises(ValueError):
        oracle.is_weakly_stable(fixture, [0], 4)


def test_enumeration_bound():
    s = generate(GenSpec(n=13, kind="tournament", seed=1))
    with pytest.raises(oracle.EnumerationBoundError):
        oracle.minimal_dominant_set(s)
    assert oracle.minimal_dominant_set(s, bound=13).count() >= 1


def test_k_stable_needs_tournament(fixture):
    with pytest.raises(TournamentRequiredError):
        oracle.k_stable_alternatives(fixture, 1)
    with pytest.raises(TournamentRequiredError):
        oracle.k_stable_set_union(fixture, 1)


def test_strongly_connected_has_no_trapping():
    s = generate(GenSpec(n=5, kind="cycle"))
    assert oracle.trapped_relation(s).is_zero()


def test_complete_relation_distances():
    s = generate(GenSpec(n=4, kind="transitive"))
    dt = oracle.distances(s)
    assert all(dt(0, j) == 1 for j in range(1, 4))
    assert dt(3, 0) is None
    assert dt.eccentricity(0) == 1 and dt.eccentricity(3) is None


@given(structures(max_n=9))
def test_distance_triangle_inequality(s):
    dt = oracle.distances(s)
    for i in range(s.n):
        for j in range(s.n):
            assert (dt(i, j) == 1) == bool(s.M[i, j])
            for k in range(s.n):
                if dt(i, k) is not None and dt(k, j) is not None:
                    assert dt(i, j) is not None and dt(i, j) <= dt(i, k) + dt(k, j)


@given(structures(max_n=9))
def test_ladder_entries_match_distances(s):
    dt = oracle.distances(s)
    ladder = m_ladder(s)
    for k in range(1, ladder.fixpoint_index + 1):
        mk = ladder.level(k)
        for i in range(s.n):
            for j in range(s.n):
                d = dt(i, j)
                assert bool(mk[i, j]) == (d is not None and d <= k)


@given(structures(max_n=7))
def test_weak_stability_monotone(s):
    for v in (2, 3):
        stable = oracle.minimal_weakly_stable_sets(s, v)
        for B in stable:
            for extra in range(s.n):
                assert oracle.is_weakly_stable(s, B | {extra}, v)


@given(structures(max_n=7))
def test_undominated_union_is_source_components(s):
    assert oracle.minimal_undominated_union(s) == oracle.source_components(s)


@given(structures(max_n=7))
def test_monotone_shortcut_agrees_with_full_minimality(s):
    c = oracle.contours(s)
    for v in (2, 3):
        pred = lambda B, v=v: oracle._weakly_stable(c, B, v)
        assert oracle.minimal_sets(s.n, pred, True) == oracle.minimal_sets(s.n, pred, False)


@given(structures(max_n=7, ties=False))
def test_version_one_equals_version_three_on_tournaments(s):
    assert oracle.minimal_weakly_stable_union(s, 1) == oracle.minimal_weakly_stable_union(s, 3)

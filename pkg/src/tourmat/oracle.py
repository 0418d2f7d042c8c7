"""Definition-level reference implementations used to cross-check the solvers.

Everything here works on plain Python sets built from contour sets, breadth
first search and subset enumeration. Nothing calls the matrix formulas; the
only thing read from a structure is whether ``i`` dominates ``j`` and whether
they tie. These routines are deliberately naive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .boolmat import BoolMatrix, BoolVec
from .majority import MajorityStructure, require_tournament

DEFAULT_ENUM_BOUND = 12

Set = frozenset


class EnumerationBoundError(ValueError):
    """Subset enumeration was requested on too many alternatives."""


class Contours:
    """L(i), D(i), H(i) as Python sets for every alternative."""

    def __init__(self, s: MajorityStructure):
        n = s.n
        self.n = n
        self.alts = Set(range(n))
        self.dom = [[bool(s.M[i, j]) for j in range(n)] for i in range(n)]
        self.tie = [[bool(s.T[i, j]) for j in range(n)] for i in range(n)]
        self.L = [Set(j for j in range(n) if self.dom[i][j]) for i in range(n)]
        self.D = [Set(j for j in range(n) if self.dom[j][i]) for i in range(n)]
        self.H = [Set(j for j in range(n) if self.tie[i][j]) for i in range(n)]


def contours(s: MajorityStructure) -> Contours:
    return Contours(s)


def _vec(n: int, members: Iterable[int]) -> BoolVec:
    return BoolVec.from_indices(n, members)


# relations and maximal elements


def maximal(n: int, rel: Callable[[int, int], bool]) -> Set:
    """i is maximal iff every j that relates to i is related back from i."""
    return Set(
        i for i in range(n) if all(not rel(j, i) or rel(i, j) for j in range(n) if j != i)
    )


def unbeaten(n: int, rel: Callable[[int, int], bool]) -> Set:
    """Alternatives that no other alternative relates to."""
    return Set(i for i in range(n) if not any(rel(j, i) for j in range(n) if j != i))


def _covers(c: Contours, j: int, i: int, version: int, modified: bool) -> bool:
    """Does j cover i?"""
    if i == j:
        return False
    Li, Lj, Di, Dj, Hi, Hj = c.L[i], c.L[j], c.D[i], c.D[j], c.H[i], c.H[j]
    if version == 1:
        ok = Li <= Lj | Hj
    elif version == 2:
        ok = Li <= Lj
    elif version == 3:
        ok = Dj <= Di
    elif version == 4:
        ok = Li <= Lj and Dj <= Di
    elif version == 5:
        # a tied challenger j is itself in H(i) but never in L(j); leave it out
        ok = (Li | (Hi - {j})) <= Lj if modified else (Li | Hi) <= Lj
    else:
        raise ValueError(f"covering version must be 1..5, got {version}")
    if modified:
        return ok and not c.dom[i][j]
    return ok and c.dom[j][i]


def covering_relation(s: MajorityStructure, version: int, modified: bool = False) -> BoolMatrix:
    """Entry (j, i) is set iff j covers i."""
    c = Contours(s)
    n = s.n
    return BoolMatrix.from_pairs(
        n, ((j, i) for j in range(n) for i in range(n) if _covers(c, j, i, version, modified))
    )


def uncovered_set(s: MajorityStructure, version: int, modified: bool = False) -> BoolVec:
    """Alternatives that no other alternative covers."""
    c = Contours(s)
    return _vec(s.n, unbeaten(s.n, lambda j, i: _covers(c, j, i, version, modified)))


def _captures(c: Contours, j: int, i: int) -> bool:
    """Does j capture i?"""
    if not c.dom[j][i]:
        return False
    Li, Hi = c.L[i], c.H[i]
    two_step = any(
        (k in Li and (c.dom[k][j] or c.tie[k][j])) or (k in Hi and c.dom[k][j])
        for k in range(c.n)
    )
    if two_step:
        return False
    three_step = any(
        (c.dom[k][l] or c.tie[k][l]) and c.dom[l][j] for k in Li for l in range(c.n)
    )
    return not three_step


def captured_relation(s: MajorityStructure) -> BoolMatrix:
    """Entry (j, i) is set iff j captures i."""
    c = Contours(s)
    n = s.n
    return BoolMatrix.from_pairs(
        n, ((j, i) for j in range(n) for i in range(n) if _captures(c, j, i))
    )


def uncaptured_set(s: MajorityStructure) -> BoolVec:
    c = Contours(s)
    return _vec(s.n, unbeaten(s.n, lambda j, i: _captures(c, j, i)))


# distances


@dataclass(frozen=True)
class DistanceTable:
    """Shortest majority-path lengths; ``None`` marks an unreachable pair."""

    n: int
    dist: tuple[tuple[int | None, ...], ...]

    def __call__(self, i: int, j: int) -> int | None:
        return self.dist[i][j]

    def reaches(self, i: int, j: int) -> bool:
        return self.dist[i][j] is not None

    def eccentricity(self, i: int) -> int | None:
        """Largest distance from i, or None if something is unreachable."""
        row = self.dist[i]
        if any(d is None for d in row):
            return None
        return max(row)

    @cached_property
    def diameter(self) -> int:
        """Longest shortest path over reachable ordered pairs; 1 if there are none."""
        finite = [d for row in self.dist for d in row if d]
        return max(finite, default=1)


def _bfs(adj: Sequence[Sequence[int]], src: int) -> list[int | None]:
    dist: list[int | None] = [None] * len(adj)
    dist[src] = 0
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def distances(s: MajorityStructure) -> DistanceTable:
    c = Contours(s)
    adj = [sorted(c.L[i]) for i in range(s.n)]
    return DistanceTable(s.n, tuple(tuple(_bfs(adj, i)) for i in range(s.n)))


def weak_distances(s: MajorityStructure) -> DistanceTable:
    """Shortest paths over the weak relation (domination or tie)."""
    c = Contours(s)
    adj = [sorted(c.L[i] | c.H[i]) for i in range(s.n)]
    return DistanceTable(s.n, tuple(tuple(_bfs(adj, i)) for i in range(s.n)))


def trapped_relation(s: MajorityStructure) -> BoolMatrix:
    """Entry (i, j) is set iff i dominates j and j cannot reach i."""
    c = Contours(s)
    dt = distances(s)
    n = s.n
    return BoolMatrix.from_pairs(
        n, ((i, j) for i in range(n) for j in range(n) if c.dom[i][j] and not dt.reaches(j, i))
    )


def untrapped_set(s: MajorityStructure) -> BoolVec:
    c = Contours(s)
    dt = distances(s)
    return _vec(s.n, unbeaten(s.n, lambda i, j: c.dom[i][j] and not dt.reaches(j, i)))


def source_components(s: MajorityStructure) -> BoolVec:
    """Members of strongly connected components that nothing outside can reach."""
    dt = distances(s)
    n = s.n
    return _vec(
        n,
        (i for i in range(n) if all(dt.reaches(i, j) for j in range(n) if dt.reaches(j, i))),
    )


def reference_closure(m: BoolMatrix) -> BoolMatrix:
    """Reflexive transitive closure by Warshall's algorithm on dense lists."""
    n = m.n
    r = m.to_dense()
    for i in range(n):
        r[i][i] = 1
    for k in range(n):
        rk = r[k]
        for i in range(n):
            if r[i][k]:
                ri = r[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = 1
    return BoolMatrix.from_dense(r)


def reference_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    """Textbook triple-loop Boolean product on dense 0/1 lists, no short-circuit."""
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = 0
            for k in range(n):
                v |= a[i][k] & b[k][j]
            out[i][j] = v
    return out


# subset enumeration


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise EnumerationBoundError(f"subset enumeration limited to n <= {bound}, got n = {n}")


def _subsets(n: int) -> Iterable[Set]:
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            yield Set(combo)


def minimal_sets(n: int, pred: Callable[[Set], bool], monotone: bool) -> list[Set]:
    """Inclusion-minimal nonempty sets satisfying ``pred``, smallest first.

    With ``monotone`` a set is minimal when dropping any single member breaks
    the predicate. Otherwise every candidate is compared against the minimal
    sets already found, which is correct for any predicate.
    """
    found: list[Set] = []
    if monotone:
        holds = {B: pred(B) for B in _subsets(n)}
        for B, ok in holds.items():
            if ok and all(not holds.get(B - {x}, False) for x in B):
                found.append(B)
        return found
    for B in _subsets(n):
        if pred(B) and not any(F < B for F in found):
            found.append(B)
    return found


def _union(n: int, sets: Iterable[Set]) -> BoolVec:
    members: set[int] = set()
    for B in sets:
        members |= B
    return _vec(n, members)


def is_weakly_stable(s: MajorityStructure, B: Iterable[int], version: int) -> bool:
    return _weakly_stable(Contours(s), Set(B), version)


def _weakly_stable(c: Contours, B: Set, version: int) -> bool:
    if not B:
        raise ValueError("weak stability is defined for nonempty sets")
    outside = c.alts - B
    if version == 1:
        # any outsider attacking B is itself attacked from B
        return all(not (B & c.L[j]) or bool(B & c.D[j]) for j in outside)
    if version == 2:
        return all(B & c.D[j] for j in outside)
    if version == 3:
        return all(B & (c.D[j] | c.H[j]) for j in outside)
    raise ValueError(f"weak stability version must be 1..3, got {version}")


def minimal_weakly_stable_sets(
    s: MajorityStructure, version: int, bound: int = DEFAULT_ENUM_BOUND
) -> list[Set]:
    _check_bound(s.n, bound)
    c = Contours(s)
    return minimal_sets(s.n, lambda B: _weakly_stable(c, B, version), monotone=version != 1)


def minimal_weakly_stable_union(
    s: MajorityStructure, version: int, bound: int = DEFAULT_ENUM_BOUND
) -> BoolVec:
    return _union(s.n, minimal_weakly_stable_sets(s, version, bound))


def minimal_dominant_set(s: MajorityStructure, bound: int = DEFAULT_ENUM_BOUND) -> BoolVec:
    """Smallest set whose members all dominate every outsider."""
    _check_bound(s.n, bound)
    c = Contours(s)
    for B in _subsets(s.n):
        if all(c.dom[i][j] for i in B for j in c.alts - B):
            return _vec(s.n, B)
    raise AssertionError("the full set is always dominant")  # pragma: no cover


def minimal_undominated_union(s: MajorityStructure, bound: int = DEFAULT_ENUM_BOUND) -> BoolVec:
    """Union of the minimal sets into which no outsider dominates."""
    _check_bound(s.n, bound)
    c = Contours(s)

    def undominated(B: Set) -> bool:
        return not any(c.dom[j][i] for j in c.alts - B for i in B)

    return _union(s.n, minimal_sets(s.n, undominated, monotone=False))


def condorcet_winner(s: MajorityStructure) -> BoolVec:
    c = Contours(s)
    return _vec(s.n, (i for i in range(s.n) if c.L[i] == c.alts - {i}))


def core(s: MajorityStructure) -> BoolVec:
    c = Contours(s)
    return _vec(s.n, (i for i in range(s.n) if not c.D[i]))


def mws3_direct_members(s: MajorityStructure) -> BoolVec:
    """Direct membership test for the union of minimal weakly stable sets (third version).

    i is a member iff it is uncovered under version II, or some j in L(i) or
    H(i) is covered (modified version II) by no k in D(i).
    """
    c = Contours(s)
    uc2 = unbeaten(s.n, lambda j, i: _covers(c, j, i, 2, False))
    out = []
    for i in range(s.n):
        if i in uc2 or any(
            not any(_covers(c, k, j, 2, True) for k in c.D[i]) for j in c.L[i] | c.H[i]
        ):
            out.append(i)
    return _vec(s.n, out)


# k-stability (tournaments)


def k_stable_alternatives(s: MajorityStructure, k: int) -> BoolVec:
    """SP_(k): alternatives reaching everything within k steps but not within k - 1."""
    require_tournament(s, "SP(k)")
    return _vec(s.n, (i for i in _within(s, k) if i not in _within(s, k - 1)))


def cumulative_stable_alternatives(s: MajorityStructure, k: int) -> BoolVec:
    """P_(k): alternatives reaching everything within k steps (P_(0) is empty)."""
    require_tournament(s, "P(k)")
    return _vec(s.n, _within(s, k))


def _within(s: MajorityStructure, k: int) -> Set:
    if k <= 0:
        return Set()
    dt = distances(s)
    return Set(i for i in range(s.n) if all(d is not None and d <= k for d in dt.dist[i]))


def eccentricity_classes(s: MajorityStructure) -> dict[int, Set]:
    """Group generally stable alternatives by eccentricity (at least 1)."""
    dt = distances(s)
    out: dict[int, set[int]] = {}
    for i in range(s.n):
        e = dt.eccentricity(i)
        if e is not None:
            out.setdefault(max(e, 1), set()).add(i)
    return {k: Set(v) for k, v in out.items()}


def stability_horizon(s: MajorityStructure) -> int:
    """Largest eccentricity over the minimal dominant set."""
    require_tournament(s, "stability horizon")
    return max(eccentricity_classes(s))


def set_degree(dt: DistanceTable, B: Set) -> int | None:
    """Steps needed to reach every outsider from some member of B (at least 1)."""
    worst = 1
    for j in range(dt.n):
        if j in B:
            continue
        best = None
        for i in B:
            d = dt.dist[i][j]
            if d is not None and (best is None or d < best):
                best = d
        if best is None:
            return None
        worst = max(worst, best)
    return worst


def minimal_k_stable_sets(
    s: MajorityStructure, k: int, bound: int = DEFAULT_ENUM_BOUND
) -> list[Set]:
    """Sets of stability degree exactly k with no proper subset of degree k."""
    require_tournament(s, "k-stable sets")
    _check_bound(s.n, bound)
    dt = distances(s)
    return minimal_sets(s.n, lambda B: set_degree(dt, B) == k, monotone=False)


def k_stable_set_unions(
    s: MajorityStructure, kmax: int, bound: int = DEFAULT_ENUM_BOUND
) -> list[BoolVec]:
    """``[S_(0), S_(1), ..., S_(kmax)]`` where S_(k) is the union of minimal
    k'-stable sets over all k' <= k and S_(0) is empty."""
    require_tournament(s, "S(k)")
    _check_bound(s.n, bound)
    dt = distances(s)
    degree = {B: set_degree(dt, B) for B in _subsets(s.n)}
    members: set[int] = set()
    out = [_vec(s.n, members)]
    for kk in range(1, kmax + 1):
        found: list[Set] = []
        for B, d in degree.items():
            if d == kk and not any(F < B for F in found):
                found.append(B)
        for B in found:
            members |= B
        out.append(_vec(s.n, members))
    return out


def k_stable_set_union(s: MajorityStructure, k: int, bound: int = DEFAULT_ENUM_BOUND) -> BoolVec:
    """S_(k): union of minimal k'-stable sets over all k' <= k."""
    return k_stable_set_unions(s, k, bound)[k]


def k_stable_set_class(s: MajorityStructure, k: int, bound: int = DEFAULT_ENUM_BOUND) -> BoolVec:
    """SS_(k): members of S_(k) not already in S_(k-1)."""
    unions = k_stable_set_unions(s, k, bound)
    return unions[k] & ~unions[k - 1]

"""Solution concepts as Boolean matrix-vector formulas.

Every concept is the characteristic vector of a set of alternatives, computed
from ``M`` (majority), ``T`` (ties), ``U = M + T + E`` and their closures.
Most have the shape ``~(~Q @ a)``: the alternatives whose row of ``Q`` is
all ones, where ``Q`` collects everything an alternative "answers" in at most
a few steps.

The k-stability families (``p_k``, ``sp_k``, ``s_k``, ``ss_k``) exist only
for tournaments and raise :class:`TournamentRequiredError` on ties.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .boolmat import BoolMatrix, BoolVec, all_ones_vec, diag, max_general, zeros_vec
from .closure import diameter_mu, diameter_nu, induced_relations, m_ladder, u_ladder
from .majority import MajorityStructure, require_tournament


class ConceptId(str, enum.Enum):
    CW = "CW"
    CR = "CR"
    UC1 = "UC1"
    UC2 = "UC2"
    UC3 = "UC3"
    UC4 = "UC4"
    UC5 = "UC5"
    UC1M = "UC1M"
    UC2M = "UC2M"
    UC3M = "UC3M"
    UC4M = "UC4M"
    UC5M = "UC5M"
    UCP = "UCP"
    MWS2 = "MWS2"
    MWS3 = "MWS3"
    MU = "MU"
    UT = "UT"
    MD = "MD"
    P = "P"
    SP = "SP"
    S = "S"
    SS = "SS"

    @property
    def needs_k(self) -> bool:
        return self in K_FAMILIES


K_FAMILIES = frozenset({ConceptId.P, ConceptId.SP, ConceptId.S, ConceptId.SS})
BASE_CONCEPTS = tuple(c for c in ConceptId if c not in K_FAMILIES)


def _answered_by_all(q: BoolMatrix) -> BoolVec:
    return ~(~q @ all_ones_vec(q.n))


def condorcet_winner(s: MajorityStructure) -> BoolVec:
    return _answered_by_all(s.M | s.E)


def core(s: MajorityStructure) -> BoolVec:
    return ~(s.M.T @ all_ones_vec(s.n))


def _covering_sum(M: BoolMatrix, T: BoolMatrix, E: BoolMatrix, version: int, modified: bool) -> BoolMatrix:
    MM = M @ M
    if version == 1:
        q = MM
    elif version == 2:
        q = M @ T | MM
    elif version == 3:
        q = T @ M | MM
    elif version == 4:
        q = T @ M | M @ T | MM
    elif version == 5:
        q = T @ T | T @ M | M @ T | MM
    else:
        raise ValueError(f"covering version must be 1..5, got {version}")
    q = q | M | E
    # the modified versions differ only by the missing standalone T
    return q if modified else q | T


def uncovered(s: MajorityStructure, version: int, modified: bool = False) -> BoolVec:
    return _answered_by_all(_covering_sum(s.M, s.T, s.E, version, modified))


def uncaptured(s: MajorityStructure) -> BoolVec:
    M, U = s.M, s.U
    return _answered_by_all(M @ U @ M | U @ M | M @ U | U)


def mws2(s: MajorityStructure) -> BoolVec:
    return (s.M | s.E) @ uncovered(s, 3)


def _mws3(M: BoolMatrix, T: BoolMatrix, U: BoolMatrix, E: BoolMatrix) -> BoolVec:
    mu_e = M @ U | E
    # entry (k, j) of covered: k is covered by j under modified version II
    covered = ~mu_e
    # f_i: some k in L(i) or H(i) is covered by no j in D(i)
    f = diag((M | T) @ ~(covered @ M))
    return _answered_by_all(M @ U | U) | f


def mws3(s: MajorityStructure) -> BoolVec:
    return _mws3(s.M, s.T, s.U, s.E)


def minimal_undominated_union(s: MajorityStructure) -> BoolVec:
    return max_general(m_ladder(s).closure)


def untrapped(s: MajorityStructure) -> BoolVec:
    return _answered_by_all(m_ladder(s).closure | s.T)


def minimal_dominant(s: MajorityStructure) -> BoolVec:
    return _answered_by_all(u_ladder(s).closure)


def p_k(s: MajorityStructure, k: int) -> BoolVec:
    """Alternatives reaching every other one in at most ``k`` steps; ``p_0`` is empty."""
    require_tournament(s, "P(k)")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k == 0:
        return zeros_vec(s.n)
    return _answered_by_all(m_ladder(s).level(k))


def sp_k(s: MajorityStructure, k: int) -> BoolVec:
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return p_k(s, k) & ~p_k(s, k - 1)


def stability_horizon(s: MajorityStructure) -> int:
    """Least ``m >= 1`` with ``p_m = p_(m+1)``; ``P_(m)`` is then the minimal dominant set."""
    require_tournament(s, "stability horizon")
    m = 1
    while p_k(s, m) != p_k(s, m + 1):
        m += 1
    return m


@lru_cache(maxsize=64)
def _s_chain(s: MajorityStructure) -> tuple[BoolVec, ...]:
    """``(s_0, s_1, ..., s_depth)`` where ``s_depth`` is the first to reach md."""
    require_tournament(s, "S(k)")
    md = minimal_dominant(s)
    limit = stability_horizon(s) + 1
    chain = [zeros_vec(s.n), (s.M | s.E) @ p_k(s, 2)]
    while chain[-1] != md:
        k = len(chain)
        if k > limit:
            raise AssertionError("S(k) did not reach the minimal dominant set by k = m + 1")
        ut, mt, tt = induced_relations(s, k)
        chain.append(chain[-1] | _mws3(mt, tt, ut, s.E))
    return tuple(chain)


def _s_at(s: MajorityStructure, k: int) -> BoolVec:
    chain = _s_chain(s)
    return chain[min(k, len(chain) - 1)]


def s_k(s: MajorityStructure, k: int) -> BoolVec:
    """Union of the minimal k'-stable sets for k' <= k; constant once it reaches md."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return _s_at(s, k)


def ss_k(s: MajorityStructure, k: int) -> BoolVec:
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return _s_at(s, k) & ~_s_at(s, k - 1)


def set_stability_depth(s: MajorityStructure) -> int:
    """Least ``k`` with ``s_k = md``; at most ``stability_horizon + 1``."""
    return len(_s_chain(s)) - 1


_UC = {
    ConceptId.UC1: (1, False),
    ConceptId.UC2: (2, False),
    ConceptId.UC3: (3, False),
    ConceptId.UC4: (4, False),
    ConceptId.UC5: (5, False),
    ConceptId.UC1M: (1, True),
    ConceptId.UC2M: (2, True),
    ConceptId.UC3M: (3, True),
    ConceptId.UC4M: (4, True),
    ConceptId.UC5M: (5, True),
}

_SIMPLE = {
    ConceptId.CW: condorcet_winner,
    ConceptId.CR: core,
    ConceptId.UCP: uncaptured,
    ConceptId.MWS2: mws2,
    ConceptId.MWS3: mws3,
    ConceptId.MU: minimal_undominated_union,
    ConceptId.UT: untrapped,
    ConceptId.MD: minimal_dominant,
}

_KFUN = {ConceptId.P: p_k, ConceptId.SP: sp_k, ConceptId.S: s_k, ConceptId.SS: ss_k}


def solve(s: MajorityStructure, concept: ConceptId | str, k: int | None = None) -> BoolVec:
    """Evaluate one concept; the k-families require ``k``."""
    c = ConceptId(concept)
    if c in _UC:
        return uncovered(s, *_UC[c])
    if c in _SIMPLE:
        return _SIMPLE[c](s)
    if k is None:
        raise ValueError(f"{c.value} needs a k")
    return _KFUN[c](s, k)


def concept_key(concept: ConceptId, k: int | None = None) -> str:
    return f"{concept.value}({k})" if concept.needs_k else concept.value


@dataclass(frozen=True)
class SolutionReport:
    """Named sets for one instance, plus the diameters and horizon.

    ``sets`` maps keys such as ``"UC1"`` or ``"SP(2)"`` to vectors, in
    report order. ``m`` and ``s_depth`` are None unless the instance is a
    tournament.
    """

    digest: str
    n: int
    sets: dict[str, BoolVec] = field(default_factory=dict)
    d_mu: int = 1
    d_nu: int = 1
    m: int | None = None
    s_depth: int | None = None


def solve_all(s: MajorityStructure) -> SolutionReport:
    sets = {c.value: solve(s, c) for c in BASE_CONCEPTS}
    m = depth = None
    if s.is_tournament():
        m = stability_horizon(s)
        depth = set_stability_depth(s)
        for k in range(1, m + 1):
            sets[concept_key(ConceptId.P, k)] = p_k(s, k)
        for k in range(1, m + 1):
            sets[concept_key(ConceptId.SP, k)] = sp_k(s, k)
        seq = _s_chain(s)
        for k in range(1, depth + 1):
            sets[concept_key(ConceptId.S, k)] = seq[k]
        for k in range(1, depth + 1):
            sets[concept_key(ConceptId.SS, k)] = seq[k] & ~seq[k - 1]
    return SolutionReport(
        digest=s.digest,
        n=s.n,
        sets=sets,
        d_mu=diameter_mu(s),
        d_nu=diameter_nu(s),
        m=m,
        s_depth=depth,
    )

"""k-transitive closures, diameters, and the relations induced by them.

``M_(k) = M + M^2 + ... + M^k + E = (M + E)^k`` represents reachability in at
most ``k`` majority steps (reflexive). ``U_(k) = U + ... + U^k = U^k`` is the
same for the weak relation. Both sequences grow until a fixpoint whose index
is the diameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .boolmat import BoolMatrix, asym_part, identity, sym_part
from .majority import MajorityStructure, require_tournament


@dataclass(frozen=True)
class ClosureLadder:
    """Accumulated closures ``X_(1), X_(2), ...`` up to one step past the fixpoint.

    ``steps[k - 1]`` is ``X_(k)``; the last two entries are equal and
    ``fixpoint_index`` is the least ``d`` with ``X_(d) = X_(d+1)``.
    """

    base: BoolMatrix
    steps: tuple[BoolMatrix, ...]
    fixpoint_index: int

    def level(self, k: int) -> BoolMatrix:
        """``X_(k)`` for any ``k >= 0``; levels past the fixpoint repeat it."""
        if k < 0:
            raise ValueError(f"level must be non-negative, got {k}")
        if k == 0:
            return identity(self.base.n)
        return self.steps[min(k, len(self.steps)) - 1]

    @property
    def closure(self) -> BoolMatrix:
        return self.steps[-1]


def _ladder(base: BoolMatrix, first: BoolMatrix, step: BoolMatrix) -> ClosureLadder:
    steps = [first]
    # a strictly growing chain of reflexive relations on n points stabilises within n steps
    for _ in range(base.n + 1):
        nxt = steps[-1] @ step
        steps.append(nxt)
        if nxt == steps[-2]:
            return ClosureLadder(base, tuple(steps), len(steps) - 1)
    raise AssertionError("closure ladder failed to stabilise")  # pragma: no cover


@lru_cache(maxsize=64)
def m_ladder(s: MajorityStructure) -> ClosureLadder:
    """Ladder of ``M_(k)``; its fixpoint index is the majority diameter d(mu)."""
    me = s.M | s.E
    return _ladder(s.M, me, me)


@lru_cache(maxsize=64)
def u_ladder(s: MajorityStructure) -> ClosureLadder:
    """Ladder of ``U_(k)``; its fixpoint index is the weak diameter d(nu)."""
    return _ladder(s.U, s.U, s.U)


def transitive_closure_mu(s: MajorityStructure) -> BoolMatrix:
    return m_ladder(s).closure


def transitive_closure_nu(s: MajorityStructure) -> BoolMatrix:
    return u_ladder(s).closure


def diameter_mu(s: MajorityStructure) -> int:
    return m_ladder(s).fixpoint_index


def diameter_nu(s: MajorityStructure) -> int:
    return u_ladder(s).fixpoint_index


def induced_relations(
    s: MajorityStructure, k: int
) -> tuple[BoolMatrix, BoolMatrix, BoolMatrix]:
    """Weak, strict and tie matrices of the k-step reachability relation.

    Returns ``(U~, M~, T~)`` with ``U~ = M_(k)``, ``M~`` its asymmetric part and
    ``T~`` its symmetric part without the diagonal, so that ``U~ = M~ + T~ + E``.
    """
    require_tournament(s, "induced k-step relations")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    u = m_ladder(s).level(k)
    return u, asym_part(u), sym_part(u) & ~s.E

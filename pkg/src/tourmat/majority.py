"""Majority structures: the dominance relation, its ties, and their union.

A :class:`MajorityStructure` holds the matrix ``M`` of the (asymmetric)
majority relation and the matrix ``T`` of ties. The weak relation
``U = M + T + E`` is derived. Alternatives are 0-based internally.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .boolmat import (
    BoolMatrix,
    BoolVec,
    DimensionError,
    complement,
    identity,
    iter_bits,
    transpose,
    unit_vec,
    zeros,
)


class StructureError(ValueError):
    """A matrix pair violates an invariant of majority structures.

    ``pair`` is the offending entry as 1-based labels, or None.
    """

    def __init__(self, invariant: str, message: str, pair: tuple[int, int] | None = None):
        self.invariant = invariant
        self.pair = pair
        where = f" at ({pair[0]},{pair[1]})" if pair else ""
        super().__init__(f"{invariant}{where}: {message}")


class TournamentRequiredError(ValueError):
    """A tournament-only concept was requested on an instance with ties."""


def _first_pair(m: BoolMatrix) -> tuple[int, int] | None:
    for i, r in enumerate(m.rows):
        if r:
            j = next(iter_bits(r))
            return i + 1, j + 1
    return None


@dataclass(frozen=True)
class MajorityStructure:
    """Validated pair (M, T); see :func:`from_matrices` for the checks."""

    M: BoolMatrix
    T: BoolMatrix
    _validated: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self._validated:
            _validate(self.M, self.T)

    @property
    def n(self) -> int:
        return self.M.n

    @cached_property
    def E(self) -> BoolMatrix:
        return identity(self.n)

    @cached_property
    def U(self) -> BoolMatrix:
        return self.M | self.T | self.E

    def edges(self) -> list[tuple[int, int]]:
        """Majority pairs ``(i, j)`` meaning i dominates j, 0-based, row-major."""
        return self.M.pairs()

    def is_tournament(self) -> bool:
        return self.T.is_zero()

    @cached_property
    def digest(self) -> str:
        """Short content hash of the instance, stable across runs."""
        h = hashlib.sha256(f"n {self.n}\n".encode())
        for i, j in self.edges():
            h.update(f"mu {i + 1} {j + 1}\n".encode())
        h.update(b"tau\n")
        for i, j in self.T.pairs():
            if i < j:
                h.update(f"{i + 1} {j + 1}\n".encode())
        return h.hexdigest()[:16]


def _validate(M: BoolMatrix, T: BoolMatrix) -> None:
    if M.n != T.n:
        raise DimensionError(f"M is {M.n}x{M.n} but T is {T.n}x{T.n}")
    n = M.n
    E = identity(n)
    Mt = transpose(M)
    for name, mat in (("M", M), ("T", T)):
        bad = mat & E
        if not bad.is_zero():
            raise StructureError("reflexivity", f"{name} has a diagonal entry", _first_pair(bad))
    bad = M & Mt
    if not bad.is_zero():
        raise StructureError("asymmetry", "M holds in both directions", _first_pair(bad))
    missing = complement(M | Mt | T | E)
    if not missing.is_zero():
        raise StructureError(
            "partition", "pair is neither dominated nor tied", _first_pair(missing)
        )
    bad = T & complement(transpose(T))
    if not bad.is_zero():
        raise StructureError("symmetry", "T is not symmetric", _first_pair(bad))
    bad = T & (M | Mt)
    if not bad.is_zero():
        raise StructureError("overlap", "pair is both tied and dominated", _first_pair(bad))


def from_matrices(M: BoolMatrix, T: BoolMatrix) -> MajorityStructure:
    """Validate and wrap an explicit (M, T) pair.

    Checks, in order: no diagonal entries, M asymmetric, the partition
    ``M + M^tr + T + E = I``, T symmetric, T disjoint from M and M^tr.
    Raises :class:`StructureError` naming the first violation found.
    """
    return MajorityStructure(M, T)


def _ties_from(M: BoolMatrix) -> BoolMatrix:
    # T = complement(M + M^tr + E)
    return complement(M | transpose(M) | identity(M.n))


def from_edges(n: int, mu_edges: Iterable[tuple[int, int]]) -> MajorityStructure:
    """Build a structure from 0-based majority pairs; every other pair is a tie."""
    if n < 1:
        raise DimensionError(f"dimension must be at least 1, got {n}")
    rows = [0] * n
    for i, j in mu_edges:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"pair ({i}, {j}) out of range for n={n}")
        if i == j:
            raise ValueError(f"pair ({i}, {j}) is a self-loop")
        if (rows[j] >> i) & 1:
            raise ValueError(f"pair ({i}, {j}) also appears reversed")
        rows[i] |= 1 << j
    M = BoolMatrix(n, tuple(rows))
    return MajorityStructure(M, _ties_from(M), _validated=True)


@dataclass(frozen=True)
class PreferenceProfile:
    """Strict orders over ``n`` alternatives, most preferred first (0-based)."""

    n: int
    orders: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        want = list(range(self.n))
        for k, order in enumerate(self.orders):
            if sorted(order) != want:
                raise ValueError(f"order {k} is not a permutation of 0..{self.n - 1}: {order}")

    @classmethod
    def of(cls, n: int, orders: Iterable[Sequence[int]]) -> PreferenceProfile:
        return cls(n, tuple(tuple(o) for o in orders))


def from_profile(p: PreferenceProfile) -> MajorityStructure:
    """Simple pairwise majority: i dominates j iff more orders rank i above j."""
    if len(p.orders) < 2:
        raise ValueError("a profile needs at least two orders")
    n = p.n
    wins = [[0] * n for _ in range(n)]
    for order in p.orders:
        for a, i in enumerate(order):
            for j in order[a + 1:]:
                wins[i][j] += 1
    edges = [(i, j) for i in range(n) for j in range(n) if wins[i][j] > wins[j][i]]
    return from_edges(n, edges)


def _check_alt(s: MajorityStructure, i: int) -> None:
    if not 0 <= i < s.n:
        raise IndexError(f"alternative {i} out of range for n={s.n}")


def lower_contour(s: MajorityStructure, i: int) -> BoolVec:
    """L(i): alternatives dominated by i, as M^tr . e(i)."""
    _check_alt(s, i)
    return transpose(s.M) @ unit_vec(s.n, i)


def upper_contour(s: MajorityStructure, i: int) -> BoolVec:
    """D(i): alternatives dominating i, as M . e(i)."""
    _check_alt(s, i)
    return s.M @ unit_vec(s.n, i)


def horizon(s: MajorityStructure, i: int) -> BoolVec:
    """H(i): alternatives tied with i, as T . e(i)."""
    _check_alt(s, i)
    return s.T @ unit_vec(s.n, i)


def is_tournament(s: MajorityStructure) -> bool:
    return s.is_tournament()


def require_tournament(s: MajorityStructure, what: str = "this concept") -> None:
    if not s.is_tournament():
        raise TournamentRequiredError(f"{what} is defined only for tournaments; instance has ties")


def all_ties(n: int) -> MajorityStructure:
    return MajorityStructure(zeros(n), complement(identity(n)))

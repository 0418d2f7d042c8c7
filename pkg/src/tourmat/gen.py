"""Seeded instance generators and the built-in six-alternative example.

Randomness comes from SplitMix64 so that a seed names the same instance in
any language::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2**64
    output z ^ (z >> 31)

Pairs ``i < j`` are visited in row-major order. For a tournament one draw
decides the orientation: ``i`` beats ``j`` iff the top bit is 0. For a weak
instance one draw is turned into a float ``(z >> 11) / 2**53`` and the pair is
tied when it is below ``tie_prob``; otherwise a second draw orients it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .majority import MajorityStructure, PreferenceProfile, from_edges

MASK64 = (1 << 64) - 1

Kind = Literal["tournament", "weak", "transitive", "cycle", "fixture"]
KINDS: tuple[str, ...] = ("tournament", "weak", "transitive", "cycle", "fixture")

# the worked example, 1-based: (i, j) means i dominates j
FIXTURE_EDGES: tuple[tuple[int, int], ...] = (
    (1, 2), (2, 3), (3, 1), (4, 1), (4, 2), (4, 5), (5, 6), (6, 2), (6, 4),
)
FIXTURE_N = 6


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / (1 << 53)

    def coin(self) -> bool:
        return bool(self.next_u64() >> 63)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


@dataclass(frozen=True)
class GenSpec:
    """What to generate. ``tie_prob`` only matters for ``weak``; ``fixture`` ignores n and seed."""

    n: int = 6
    kind: Kind = "tournament"
    tie_prob: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if not 0.0 <= self.tie_prob <= 1.0:
            raise ValueError(f"tie_prob must lie in [0, 1], got {self.tie_prob}")
        if self.kind != "fixture" and self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")


def worked_example() -> MajorityStructure:
    return from_edges(FIXTURE_N, [(i - 1, j - 1) for i, j in FIXTURE_EDGES])


def _random_edges(n: int, rng: SplitMix64, tie_prob: float) -> list[tuple[int, int]]:
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if tie_prob > 0.0 and rng.random() < tie_prob:
                continue
            edges.append((j, i) if rng.coin() else (i, j))
    return edges


def generate(spec: GenSpec) -> MajorityStructure:
    n = spec.n
    if spec.kind == "fixture":
        return worked_example()
    if spec.kind == "transitive":
        return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if spec.kind == "cycle":
        # for n = 2 the wrap-around pair would reverse the first one
        edges = [(i, (i + 1) % n) for i in range(n if n >= 3 else n - 1)]
        return from_edges(n, edges)
    rng = SplitMix64(spec.seed)
    tie_prob = spec.tie_prob if spec.kind == "weak" else 0.0
    return from_edges(n, _random_edges(n, rng, tie_prob))


def random_tournament(n: int, seed: int) -> MajorityStructure:
    return generate(GenSpec(n, "tournament", 0.0, seed))


def random_weak(n: int, seed: int, tie_prob: float = 0.3) -> MajorityStructure:
    return generate(GenSpec(n, "weak", tie_prob, seed))


def random_profile(n: int, voters: int, seed: int) -> PreferenceProfile:
    """Independent uniform strict orders (Fisher-Yates on the same stream)."""
    rng = SplitMix64(seed)
    orders = []
    for _ in range(voters):
        order = list(range(n))
        for i in range(n - 1, 0, -1):
            j = rng.below(i + 1)
            order[i], order[j] = order[j], order[i]
        orders.append(order)
    return PreferenceProfile.of(n, orders)

"""Seeded property suite: solver formulas against the oracles, plus invariants.

Each property looks at one instance and returns None when it holds or a short
description of the mismatch. :func:`run_check` feeds it seeded weak
instances and tournaments and stops at the first failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import oracle
from .boolmat import BoolVec, zeros_vec
from .closure import diameter_mu, diameter_nu, m_ladder
from .gen import SplitMix64, worked_example, random_tournament, random_weak
from .majority import MajorityStructure
from .solvers import (
    ConceptId,
    set_stability_depth,
    solve,
    stability_horizon,
)

Solver = Callable[[MajorityStructure, ConceptId, Optional[int]], BoolVec]
Check = Callable[[MajorityStructure, Solver], Optional[str]]

# subset enumeration for weak stability and k-stable sets stays at or below this size
ENUM_MAX_N = 8
TIE_PROBS = (0.15, 0.3, 0.5)

# the worked six-alternative example (1-based labels)
FIXTURE_EXPECTED: dict[str, list[int]] = {
    "CW": [],
    "CR": [],
    "UC1": [3, 4, 5, 6],
    "UC2": [2, 3, 4, 5, 6],
    "UC3": [1, 3, 4, 5, 6],
    "UC4": [1, 2, 3, 4, 5, 6],
    "UC5": [1, 2, 3, 4, 5, 6],
    "UCP": [1, 2, 3, 4, 5, 6],
    "MWS2": [1, 2, 3, 4, 5, 6],
    "MU": [4, 5, 6],
    "UT": [3, 4, 5, 6],
    "MD": [1, 2, 3, 4, 5, 6],
}
FIXTURE_D_MU = 3


def _diff(name: str, got: BoolVec, want: BoolVec) -> Optional[str]:
    if got == want:
        return None
    return f"{name}: solver {got} != oracle {want}"


def _first(results: Iterable[Optional[str]]) -> Optional[str]:
    return next((r for r in results if r is not None), None)


_UNCOVERED = {
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


def check_uncovered(s: MajorityStructure, solver: Solver) -> Optional[str]:
    return _first(
        _diff(c.value, solver(s, c, None), oracle.uncovered_set(s, v, mod))
        for c, (v, mod) in _UNCOVERED.items()
    )


def check_simple(s: MajorityStructure, solver: Solver) -> Optional[str]:
    pairs = (
        (ConceptId.CW, oracle.condorcet_winner),
        (ConceptId.CR, oracle.core),
        (ConceptId.UCP, oracle.uncaptured_set),
        (ConceptId.UT, oracle.untrapped_set),
        (ConceptId.MU, oracle.minimal_undominated_union),
        (ConceptId.MD, oracle.minimal_dominant_set),
    )
    return _first(_diff(c.value, solver(s, c, None), fn(s)) for c, fn in pairs)


def check_weak_stability(s: MajorityStructure, solver: Solver) -> Optional[str]:
    if s.n > ENUM_MAX_N:
        return None
    return _first(
        (
            _diff("MWS2", solver(s, ConceptId.MWS2, None), oracle.minimal_weakly_stable_union(s, 2)),
            _diff("MWS3", solver(s, ConceptId.MWS3, None), oracle.minimal_weakly_stable_union(s, 3)),
        )
    )


def check_mws3_direct(s: MajorityStructure, solver: Solver) -> Optional[str]:
    return _diff("MWS3 vs direct membership", solver(s, ConceptId.MWS3, None), oracle.mws3_direct_members(s))


def check_closure(s: MajorityStructure, solver: Solver) -> Optional[str]:
    dt = oracle.distances(s)
    ladder = m_ladder(s)
    for k in range(1, ladder.fixpoint_index + 2):
        mk = ladder.level(k)
        for i in range(s.n):
            for j in range(s.n):
                d = dt(i, j)
                want = d is not None and d <= k
                if bool(mk[i, j]) != want:
                    return f"M_({k})[{i + 1},{j + 1}] = {mk[i, j]} but distance is {d}"
    if diameter_mu(s) != dt.diameter:
        return f"d_mu {diameter_mu(s)} != longest shortest path {dt.diameter}"
    wd = oracle.weak_distances(s).diameter
    if diameter_nu(s) != wd:
        return f"d_nu {diameter_nu(s)} != longest weak shortest path {wd}"
    return None


def check_inclusions(s: MajorityStructure, solver: Solver) -> Optional[str]:
    for c, (v, mod) in _UNCOVERED.items():
        if not mod:
            continue
        plain = ConceptId(f"UC{v}")
        if not solver(s, c, None).issubset(solver(s, plain, None)):
            return f"{c.value} not inside {plain.value}"
    if not solver(s, ConceptId.UCP, None).issubset(solver(s, ConceptId.MD, None)):
        return "UCP not inside MD"
    return None


def check_stable_alternatives(s: MajorityStructure, solver: Solver) -> Optional[str]:
    if not s.is_tournament():
        return None
    m = stability_horizon(s)
    want_m = oracle.stability_horizon(s)
    if m != want_m:
        return f"horizon {m} != largest eccentricity {want_m}"
    for k in range(1, m + 2):
        r = _first(
            (
                _diff(f"P({k})", solver(s, ConceptId.P, k), oracle.cumulative_stable_alternatives(s, k)),
                _diff(f"SP({k})", solver(s, ConceptId.SP, k), oracle.k_stable_alternatives(s, k)),
            )
        )
        if r:
            return r
    return None


def check_stable_sets(s: MajorityStructure, solver: Solver) -> Optional[str]:
    if not s.is_tournament() or s.n > ENUM_MAX_N:
        return None
    depth = set_stability_depth(s)
    unions = oracle.k_stable_set_unions(s, depth + 1)
    for k in range(1, depth + 2):
        got = solver(s, ConceptId.S, k)
        r = _diff(f"S({k})", got, unions[k])
        if r:
            return r
        r = _diff(f"SS({k})", solver(s, ConceptId.SS, k), unions[k] & ~unions[k - 1])
        if r:
            return r
    return None


def check_stable_inclusions(s: MajorityStructure, solver: Solver) -> Optional[str]:
    if not s.is_tournament():
        return None
    md = solver(s, ConceptId.MD, None)
    for k in range(1, stability_horizon(s) + 1):
        p, sk = solver(s, ConceptId.P, k), solver(s, ConceptId.S, k)
        p2 = solver(s, ConceptId.P, k + 2)
        if not (p.issubset(sk) and sk.issubset(p2) and p2.issubset(md)):
            return f"P({k}) <= S({k}) <= P({k + 2}) <= MD fails: {p} {sk} {p2} {md}"
    return None


def check_coincidences(s: MajorityStructure, solver: Solver) -> Optional[str]:
    if not s.is_tournament():
        return None
    uc = solver(s, ConceptId.UC1, None)
    for c in _UNCOVERED:
        if solver(s, c, None) != uc:
            return f"{c.value} {solver(s, c, None)} != UC1 {uc}"
    md = solver(s, ConceptId.MD, None)
    for c in (ConceptId.MU, ConceptId.UT):
        if solver(s, c, None) != md:
            return f"{c.value} {solver(s, c, None)} != MD {md}"
    cw = solver(s, ConceptId.CW, None)
    if solver(s, ConceptId.SP, 1) != cw:
        return f"SP(1) {solver(s, ConceptId.SP, 1)} != CW {cw}"
    sp2 = solver(s, ConceptId.SP, 2)
    want = uc if cw.is_empty() else zeros_vec(s.n)
    if sp2 != want:
        return f"SP(2) {sp2} != {want}"
    if solver(s, ConceptId.P, 3) != solver(s, ConceptId.UCP, None):
        return "P(3) != UCP"
    if s.n <= ENUM_MAX_N:
        v1 = oracle.minimal_weakly_stable_union(s, 1)
        if v1 != solver(s, ConceptId.MWS3, None):
            return f"MWS1 {v1} != MWS3 {solver(s, ConceptId.MWS3, None)}"
    return None


def check_fixture(s: MajorityStructure, solver: Solver) -> Optional[str]:
    if s != worked_example():
        return None
    for key, labels in FIXTURE_EXPECTED.items():
        got = solver(s, ConceptId(key), None).labels()
        if got != labels:
            return f"worked example {key}: {got} != {labels}"
    if diameter_mu(s) != FIXTURE_D_MU:
        return f"worked example d_mu: {diameter_mu(s)} != {FIXTURE_D_MU}"
    return None


PROPERTIES: dict[str, Check] = {
    "fixture": check_fixture,
    "uncovered": check_uncovered,
    "simple": check_simple,
    "weak-stability": check_weak_stability,
    "mws3-direct": check_mws3_direct,
    "closure": check_closure,
    "inclusions": check_inclusions,
    "stable-alternatives": check_stable_alternatives,
    "stable-sets": check_stable_sets,
    "stable-inclusions": check_stable_inclusions,
    "coincidences": check_coincidences,
}


def default_solver(s: MajorityStructure, c: ConceptId, k: Optional[int]) -> BoolVec:
    return solve(s, c, k)


@dataclass
class Failure:
    prop: str
    trial: int
    detail: str
    instance: MajorityStructure


@dataclass
class CheckResult:
    """Per-property pass counts; a property that does not apply to an instance counts as passed."""

    instances: int = 0
    passed: dict[str, int] = field(default_factory=dict)
    failure: Optional[Failure] = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def instances(trials: int, n_values: Iterable[int], seed: int) -> Iterable[MajorityStructure]:
    """The worked example, then for each n: ``trials`` weak instances and ``trials`` tournaments."""
    yield worked_example()
    rng = SplitMix64(seed)
    for n in n_values:
        for t in range(trials):
            yield random_weak(n, rng.next_u64(), TIE_PROBS[t % len(TIE_PROBS)])
        for _ in range(trials):
            yield random_tournament(n, rng.next_u64())


def run_check(
    trials: int,
    n_values: Iterable[int],
    seed: int = 0,
    solver: Solver = default_solver,
    properties: Optional[dict[str, Check]] = None,
) -> CheckResult:
    props = PROPERTIES if properties is None else properties
    result = CheckResult(passed={name: 0 for name in props})
    for trial, s in enumerate(instances(trials, n_values, seed)):
        result.instances += 1
        for name, fn in props.items():
            detail = fn(s, solver)
            if detail is not None:
                result.failure = Failure(name, trial, detail, s)
                return result
            result.passed[name] += 1
    return result


def parse_n_range(text: str) -> list[int]:
    """``"3..8"`` or ``"6"`` or ``"3,5,7"``."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(v) for v in text.split(",")]
    except ValueError:
        raise ValueError(f"bad n range {text!r}; expected e.g. 3..8") from None
    if not values or min(values) < 1:
        raise ValueError(f"bad n range {text!r}; sizes must be at least 1")
    return values

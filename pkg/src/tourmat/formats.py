"""Instance files and report rendering. All labels here are 1-based.

Text instances look like::

    # optional comments
    n 3
    mu 1 2
    mu 2 3
    mu 3 1

Pairs not listed in either direction are ties. The JSON form is
``{"n": 3, "mu_edges": [[1, 2], ...]}``; instead of edges it may carry
``"profile": [[1, 2, 3], ...]`` (strict orders, best first), in which case
the majority relation is computed from the profile.
"""

from __future__ import annotations

import json
from typing import Any

from .majority import MajorityStructure, PreferenceProfile, from_edges, from_profile
from .solvers import SolutionReport


class InstanceParseError(ValueError):
    """Malformed instance; ``line`` is 1-based, or None for whole-document errors."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InstanceParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_text(text: str) -> MajorityStructure:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise InstanceParseError("duplicate 'n' header", lineno)
            if len(parts) != 2:
                raise InstanceParseError("expected 'n <count>'", lineno)
            n = _int(parts[1], lineno)
            if n < 1:
                raise InstanceParseError(f"n must be at least 1, got {n}", lineno)
        elif parts[0] == "mu":
            if n is None:
                raise InstanceParseError("'mu' line before the 'n' header", lineno)
            if len(parts) != 3:
                raise InstanceParseError("expected 'mu <i> <j>'", lineno)
            i, j = _int(parts[1], lineno), _int(parts[2], lineno)
            for v in (i, j):
                if not 1 <= v <= n:
                    raise InstanceParseError(f"alternative {v} out of range 1..{n}", lineno)
            if i == j:
                raise InstanceParseError(f"self-domination {i} {j}", lineno)
            if (j, i) in seen:
                raise InstanceParseError(
                    f"pair {i} {j} contradicts line {seen[(j, i)]}", lineno
                )
            if (i, j) not in seen:
                seen[(i, j)] = lineno
                edges.append((i - 1, j - 1))
        else:
            raise InstanceParseError(f"unknown directive {parts[0]!r}", lineno)
    if n is None:
        raise InstanceParseError("missing 'n' header")
    return from_edges(n, edges)


def to_text(s: MajorityStructure) -> str:
    lines = [f"n {s.n}"]
    lines += [f"mu {i + 1} {j + 1}" for i, j in s.edges()]
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> MajorityStructure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceParseError(f"invalid JSON: {e.msg}", e.lineno) from None
    return from_json_obj(doc)


def from_json_obj(doc: Any) -> MajorityStructure:
    if not isinstance(doc, dict) or "n" not in doc:
        raise InstanceParseError("expected an object with an 'n' field")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise InstanceParseError(f"'n' must be a positive integer, got {n!r}")
    if "profile" in doc and "mu_edges" not in doc:
        try:
            orders = [[a - 1 for a in order] for order in doc["profile"]]
            return from_profile(PreferenceProfile.of(n, orders))
        except (TypeError, ValueError) as e:
            raise InstanceParseError(f"bad profile: {e}") from None
    edges = doc.get("mu_edges", [])
    out = []
    for k, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e)):
            raise InstanceParseError(f"mu_edges[{k}] must be a pair of integers, got {e!r}")
        out.append((e[0] - 1, e[1] - 1))
    try:
        return from_edges(n, out)
    except ValueError as e:
        raise InstanceParseError(str(e)) from None


def to_json_obj(s: MajorityStructure) -> dict[str, Any]:
    return {"n": s.n, "mu_edges": [[i + 1, j + 1] for i, j in s.edges()]}


def to_json(s: MajorityStructure) -> str:
    return json.dumps(to_json_obj(s), separators=(", ", ": ")) + "\n"


def parse_instance(text: str) -> MajorityStructure:
    """Sniff the format: a leading ``{`` means JSON, anything else is text."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def report_text(r: SolutionReport) -> str:
    lines = [f"instance: {r.digest}", f"n: {r.n}"]
    lines += [f"{key}: {vec}" for key, vec in r.sets.items()]
    lines += [f"d_mu: {r.d_mu}", f"d_nu: {r.d_nu}"]
    if r.m is not None:
        lines.append(f"m: {r.m}")
    if r.s_depth is not None:
        lines.append(f"s_depth: {r.s_depth}")
    return "\n".join(lines) + "\n"


def report_obj(r: SolutionReport) -> dict[str, Any]:
    return {
        "instance": r.digest,
        "n": r.n,
        "concepts": {key: vec.labels() for key, vec in r.sets.items()},
        "d_mu": r.d_mu,
        "d_nu": r.d_nu,
        "m": r.m,
        "s_depth": r.s_depth,
    }


def report_json(r: SolutionReport) -> str:
    return json.dumps(report_obj(r), indent=2) + "\n"

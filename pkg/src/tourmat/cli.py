"""Command-line interface: ``tourmat solve|gen|check|bench``.

Exit status is 0 on success, 1 for usage or input errors, 2 when ``check``
finds a property failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from . import checks, formats
from .closure import diameter_mu, diameter_nu
from .gen import KINDS, GenSpec, generate
from .majority import MajorityStructure, TournamentRequiredError
from .solvers import (
    BASE_CONCEPTS,
    ConceptId,
    SolutionReport,
    concept_key,
    set_stability_depth,
    solve,
    solve_all,
    stability_horizon,
)

EXIT_OK, EXIT_USAGE, EXIT_PROPERTY = 0, 1, 2
FIXTURES = ("example",)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_concepts(text: str) -> Optional[list[ConceptId]]:
    """None means all concepts."""
    if text.strip().lower() == "all":
        return None
    out = []
    for tok in text.split(","):
        tok = tok.strip().upper()
        try:
            out.append(ConceptId(tok))
        except ValueError:
            known = ", ".join(c.value for c in ConceptId)
            raise UsageError(f"unknown concept {tok!r}; known: {known}, all") from None
    return out


def _load(args: argparse.Namespace) -> MajorityStructure:
    if args.fixture:
        return generate(GenSpec(kind="fixture"))
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {args.input}: {e.strerror}") from None
    try:
        return formats.parse_instance(text)
    except formats.InstanceParseError as e:
        raise UsageError(f"{args.input}: {e}") from None


def _k_range(s: MajorityStructure, c: ConceptId) -> range:
    if c in (ConceptId.P, ConceptId.SP):
        return range(1, stability_horizon(s) + 1)
    return range(1, set_stability_depth(s) + 1)


def _selected_report(s: MajorityStructure, concepts: list[ConceptId], k: Optional[int]) -> SolutionReport:
    sets = {}
    for c in concepts:
        if not c.needs_k:
            sets[c.value] = solve(s, c)
            continue
        if not s.is_tournament():
            raise TournamentRequiredError(
                f"{c.value} is defined only for tournaments; this instance has ties"
            )
        for kk in [k] if k is not None else _k_range(s, c):
            sets[concept_key(c, kk)] = solve(s, c, kk)
    tour = s.is_tournament()
    return SolutionReport(
        digest=s.digest,
        n=s.n,
        sets=sets,
        d_mu=diameter_mu(s),
        d_nu=diameter_nu(s),
        m=stability_horizon(s) if tour else None,
        s_depth=set_stability_depth(s) if tour else None,
    )


def cmd_solve(args: argparse.Namespace) -> int:
    s = _load(args)
    concepts = _parse_concepts(args.concepts)
    if args.k is not None and args.k < 1:
        raise UsageError(f"--k must be at least 1, got {args.k}")
    if concepts is None and args.k is None:
        report = solve_all(s)
    else:
        if concepts is None:
            concepts = list(BASE_CONCEPTS) + [c for c in ConceptId if c.needs_k]
            if not s.is_tournament():
                concepts = list(BASE_CONCEPTS)
        try:
            report = _selected_report(s, concepts, args.k)
        except TournamentRequiredError as e:
            raise UsageError(str(e)) from None
    render = formats.report_json if args.format == "json" else formats.report_text
    sys.stdout.write(render(report))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = GenSpec(n=args.n, kind=args.kind, tie_prob=args.tie_prob, seed=args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from None
    s = generate(spec)
    sys.stdout.write(formats.to_json(s) if args.format == "json" else formats.to_text(s))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    try:
        n_values = checks.parse_n_range(args.n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    result = checks.run_check(args.trials, n_values, args.seed)
    print(f"instances: {result.instances}")
    for name, count in result.passed.items():
        print(f"  {name:<22} {count} passed")
    if result.ok:
        print("all properties hold")
        return EXIT_OK
    f = result.failure
    print(f"FAIL {f.prop} on instance {f.trial}: {f.detail}")
    print("counterexample:")
    sys.stdout.write(formats.to_text(f.instance))
    return EXIT_PROPERTY


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {text!r}; expected e.g. 64,256,512") from None
    if not sizes or min(sizes) < 1:
        raise UsageError("--sizes must list positive integers")
    return sizes


def cmd_bench(args: argparse.Namespace) -> int:
    if args.reps < 1:
        raise UsageError(f"--reps must be at least 1, got {args.reps}")
    sizes = _parse_sizes(args.sizes)
    print(f"{'n':>6}  {'kind':<10}  {'d_mu':>4}  {'seconds':>10}")
    for n in sizes:
        try:
            s = generate(GenSpec(n=n, kind=args.kind, tie_prob=args.tie_prob, seed=args.seed))
        except ValueError as e:
            raise UsageError(str(e)) from None
        best = float("inf")
        for _ in range(args.reps):
            t0 = time.perf_counter()
            report = solve_all(s)
            best = min(best, time.perf_counter() - t0)
        print(f"{s.n:>6}  {args.kind:<10}  {report.d_mu:>4}  {best:>10.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tourmat", description="Majority-relation solution sets via Boolean matrices.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("solve", help="compute solution sets for an instance")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="instance file (text or JSON), '-' for stdin")
    src.add_argument("--fixture", choices=FIXTURES, help="built-in instance")
    sp.add_argument("--concepts", default="all", help="comma-separated ids, or 'all'")
    sp.add_argument("--k", type=int, help="k for the P, SP, S and SS families")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_solve)

    gp = sub.add_parser("gen", help="write a generated instance")
    gp.add_argument("--kind", choices=KINDS, default="tournament")
    gp.add_argument("--n", type=int, default=6)
    gp.add_argument("--tie-prob", type=float, default=0.0)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--format", choices=("text", "json"), default="text")
    gp.set_defaults(func=cmd_gen)

    cp = sub.add_parser("check", help="compare solvers with the reference oracles")
    cp.add_argument("--trials", type=int, default=50, help="instances of each kind per size")
    cp.add_argument("--n", default="3..8", help="sizes, e.g. 3..8 or 4,6")
    cp.add_argument("--seed", type=int, default=0)
    cp.set_defaults(func=cmd_check)

    bp = sub.add_parser("bench", help="time solve_all on generated instances")
    bp.add_argument("--sizes", default="64,256,512")
    bp.add_argument("--reps", type=int, default=3)
    bp.add_argument("--kind", choices=KINDS, default="tournament")
    bp.add_argument("--tie-prob", type=float, default=0.0)
    bp.add_argument("--seed", type=int, default=0)
    bp.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"tourmat: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

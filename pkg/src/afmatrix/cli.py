"""ICCMA-style command line front end.

Solve::

    afmatrix -p EE-ST -f af.apx -fo apx
    afmatrix -p DC-PR -f af.tgf -a b

Validate::

    afmatrix validate --trials 500 --n-min 1 --n-max 8 --p 0.1 0.25 0.5 --seed 42 --report out.json

Exit status: 0 success, 1 error, 2 usage error, 3 a certified block
predicate disagreed with the oracle. Literal c-block test discrepancies are
reported but do not change the exit status.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import NamedTuple, Sequence

from .argsets import ArgSet, ExtensionSet, SemanticsId
from .errors import ArgumentationError, EnumerationLimitExceeded
from .framework import ArgumentationFramework, load
from .matrix import build_matrix, render
from .semantics import DEFAULT_LIMIT, enumerate_extensions
from .validation import run_campaign

TASKS = ("SE", "EE", "DC", "DS")
PROBLEMS = [f"{t}-{s.value}" for t in TASKS for s in SemanticsId]
EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2, 3


class CliResult(NamedTuple):
    status: int
    stdout: str
    stderr: str = ""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _solve_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="afmatrix", add_help=False)
    p.add_argument("-p", dest="problem")
    p.add_argument("-f", dest="file")
    p.add_argument("-fo", dest="fmt", choices=["apx", "tgf"])
    p.add_argument("-a", dest="query")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--problems", action="store_true")
    p.add_argument("--formats", action="store_true")
    p.add_argument("--matrix", action="store_true", help="print the attack matrix and exit")
    p.add_argument("-h", "--help", action="store_true")
    return p


def _validate_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="afmatrix validate")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--p", type=float, nargs="+", default=[0.1, 0.25, 0.5])
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--no-self-attacks", action="store_true")
    p.add_argument("--report", type=Path)
    return p


def format_extension(af: ArgumentationFramework, s: ArgSet) -> str:
    if not s.members:
        return "[ ]"
    return "[" + ",".join(af.labels(s.indices)) + "]"


def answer(af: ArgumentationFramework, task: str, family: ExtensionSet, query: int | None) -> str:
    if task == "EE":
        if not len(family):
            return "NO EXTENSIONS"
        return "\n".join(format_extension(af, e) for e in family)
    if task == "SE":
        return format_extension(af, family.extensions[0]) if len(family) else "NO"
    if task == "DC":
        return "YES" if any(query in e for e in family) else "NO"
    # DS over an empty family (only possible for ST) is YES.
    return "YES" if all(query in e for e in family) else "NO"


def _parse_problem(problem: str) -> tuple[str, SemanticsId]:
    task, _, sem = problem.partition("-")
    if task not in TASKS or sem not in SemanticsId.__members__:
        raise UsageError(f"unknown problem {problem!r}; see --problems")
    return task, SemanticsId(sem)


def _solve(argv: Sequence[str]) -> CliResult:
    args = _solve_parser().parse_args(argv)
    if args.help:
        return CliResult(EXIT_OK, (__doc__ or "").strip())
    if args.problems:
        return CliResult(EXIT_OK, "[" + ",".join(PROBLEMS) + "]")
    if args.formats:
        return CliResult(EXIT_OK, "[apx,tgf]")
    if not args.file:
        raise UsageError("afmatrix: -f <file> is required")
    if args.matrix:
        return CliResult(EXIT_OK, render(build_matrix(load(args.file, args.fmt))))
    if not args.problem:
        raise UsageError("afmatrix: -p <TASK>-<SEM> is required")
    task, sem = _parse_problem(args.problem)
    if task in ("DC", "DS") and args.query is None:
        raise UsageError(f"afmatrix: {task} needs a query argument (-a)")
    if task not in ("DC", "DS") and args.query is not None:
        raise UsageError(f"afmatrix: {task} takes no query argument")
    af = load(args.file, args.fmt)
    query = None
    if args.query is not None:
        if args.query not in af.index_of:
            raise UsageError(f"afmatrix: unknown argument {args.query!r}")
        query = af.index_of[args.query]
    limit = args.limit if args.limit > 0 else None
    try:
        family = enumerate_extensions(build_matrix(af), sem, limit=limit)
    except EnumerationLimitExceeded as exc:
        raise EnumerationLimitExceeded(f"{exc}; raise it with --limit {af.n}") from exc
    return CliResult(EXIT_OK, answer(af, task, family, query))


def _validate(argv: Sequence[str]) -> CliResult:
    args = _validate_parser().parse_args(argv)
    if args.trials < 0:
        raise UsageError("afmatrix validate: --trials must be non-negative")
    report = run_campaign(
        args.trials,
        (args.n_min, args.n_max),
        args.p,
        args.seed,
        allow_self_attacks=not args.no_self_attacks,
    )
    if args.report:
        args.report.write_text(report.to_json())
    status = EXIT_FALSIFIED if report.certified_discrepancies() else EXIT_OK
    return CliResult(status, report.summary())


def run(argv: Sequence[str]) -> CliResult:
    """Execute one invocation; never raises and never exits."""
    argv = list(argv)
    try:
        if argv and argv[0] == "validate":
            return _validate(argv[1:])
        return _solve(argv)
    except UsageError as exc:
        return CliResult(EXIT_USAGE, "", str(exc))
    except (ArgumentationError, OSError, ValueError) as exc:
        return CliResult(EXIT_ERROR, "", f"error: {type(exc).__name__}: {exc}")


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.stdout:
        print(result.stdout)
    if result.stderr:
        print(result.stderr.splitlines()[0] if result.stderr else "", file=sys.stderr)
    return result.status


if __name__ == "__main__":
    sys.exit(main())

"""Argumentation framework data model and APX/TGF interchange."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DuplicateArgument, EmptyFramework, ParseError, UnknownArgument


@dataclass(frozen=True)
class ArgumentationFramework:
    """A finite framework ``(A, R)``.

    Arguments are opaque labels kept in declaration order; internally each
    label maps to a 0-based index and attacks are pairs of indices.
    """

    arguments: tuple[str, ...]
    attacks: frozenset[tuple[int, int]]
    index_of: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for i, label in enumerate(self.arguments):
            if label in index:
                raise DuplicateArgument(f"argument {label!r} declared twice")
            index[label] = i
        n = len(self.arguments)
        for a, b in self.attacks:
            if not (0 <= a < n and 0 <= b < n):
                raise UnknownArgument(f"attack ({a}, {b}) outside 0..{n - 1}")
        object.__setattr__(self, "index_of", MappingProxyType(index))

    @property
    def n(self) -> int:
        return len(self.arguments)

    def sorted_attacks(self) -> list[tuple[int, int]]:
        return sorted(self.attacks)

    def attackers_of(self, j: int) -> list[int]:
        return [a for a, b in self.sorted_attacks() if b == j]

    def labels(self, indices: Iterable[int]) -> list[str]:
        return [self.arguments[i] for i in indices]


def framework_from_pairs(
    labels: Iterable[str], attack_pairs: Iterable[tuple[str, str]]
) -> ArgumentationFramework:
    """Build a framework from labels and label-level attack pairs.

    >>> af = framework_from_pairs(["1", "2", "3"], [("1", "2"), ("2", "3"), ("3", "1")])
    >>> af.n, len(af.attacks)
    (3, 3)
    """
    labels = tuple(str(x) for x in labels)
    index = {}
    for i, label in enumerate(labels):
        if not label:
            raise ValueError("argument labels must be non-empty")
        if label in index:
            raise DuplicateArgument(f"argument {label!r} declared twice")
        index[label] = i
    attacks = set()
    for a, b in attack_pairs:
        a, b = str(a), str(b)
        for x in (a, b):
            if x not in index:
                raise UnknownArgument(f"attack ({a}, {b}) references undeclared argument {x!r}")
        attacks.add((index[a], index[b]))
    return ArgumentationFramework(labels, frozenset(attacks))


_LABEL = r"[^\s(),.%#]+(?:\.[^\s(),.%#]+)*"
_APX_STATEMENT = re.compile(
    rf"(?P<pred>arg|att)\s*\(\s*(?P<x>{_LABEL})\s*(?:,\s*(?P<y>{_LABEL})\s*)?\)\s*\."
)
_WS = re.compile(r"\s+")


def _strip_apx_comments(text: str) -> str:
    # Blank out comment lines so positions (and hence line numbers) survive.
    out = []
    for line in text.splitlines(keepends=True):
        if line.lstrip().startswith("%"):
            body = line.rstrip("\r\n")
            line = " " * len(body) + line[len(body):]
        out.append(line)
    return "".join(out)


def parse_apx(text: str, *, allow_empty: bool = False) -> ArgumentationFramework:
    """Parse ``arg(x).`` / ``att(x,y).`` statements.

    Statements may share a line or span several; lines starting with ``%``
    are comments. An ``att`` must come after both of its ``arg``
    declarations.
    """
    text = _strip_apx_comments(text)
    labels: list[str] = []
    index: dict[str, int] = {}
    attacks: set[tuple[int, int]] = set()
    pos = 0
    while True:
        ws = _WS.match(text, pos)
        if ws:
            pos = ws.end()
        if pos >= len(text):
            break
        line = text.count("\n", 0, pos) + 1
        m = _APX_STATEMENT.match(text, pos)
        if m is None:
            snippet = text[pos:].split("\n", 1)[0][:40]
            raise ParseError(f"malformed statement near {snippet!r}", line)
        pred, x, y = m.group("pred", "x", "y")
        if pred == "arg":
            if y is not None:
                raise ParseError(f"arg/1 given two terms: {m.group(0)!r}", line)
            if x in index:
                raise DuplicateArgument(f"line {line}: argument {x!r} declared twice")
            index[x] = len(labels)
            labels.append(x)
        else:
            if y is None:
                raise ParseError(f"att/2 given one term: {m.group(0)!r}", line)
            for z in (x, y):
                if z not in index:
                    raise UnknownArgument(f"line {line}: att({x},{y}) before arg({z})")
            attacks.add((index[x], index[y]))
        pos = m.end()
    if not labels and not allow_empty:
        raise EmptyFramework("framework declares no arguments")
    return ArgumentationFramework(tuple(labels), frozenset(attacks))


def parse_tgf(text: str, *, allow_empty: bool = False) -> ArgumentationFramework:
    """Parse trivial graph format: node lines, a ``#`` line, then edge lines.

    Only the first token of a node line is used as the label (TGF allows a
    trailing description).
    """
    lines = text.splitlines()
    if not any(line.strip() == "#" for line in lines):
        raise ParseError("missing '#' separator between nodes and edges")
    labels: list[str] = []
    index: dict[str, int] = {}
    attacks: set[tuple[int, int]] = set()
    in_edges = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise ParseError("second '#' separator", lineno)
            in_edges = True
            continue
        tokens = line.split()
        if not in_edges:
            label = tokens[0]
            if label in index:
                raise DuplicateArgument(f"line {lineno}: argument {label!r} declared twice")
            index[label] = len(labels)
            labels.append(label)
        else:
            if len(tokens) != 2:
                raise ParseError(f"edge line needs exactly two nodes: {line!r}", lineno)
            x, y = tokens
            for z in (x, y):
                if z not in index:
                    raise UnknownArgument(f"line {lineno}: edge references unknown node {z!r}")
            attacks.add((index[x], index[y]))
    if not labels and not allow_empty:
        raise EmptyFramework("framework declares no arguments")
    return ArgumentationFramework(tuple(labels), frozenset(attacks))


def serialize_apx(af: ArgumentationFramework) -> str:
    lines = [f"arg({a})." for a in af.arguments]
    lines += [f"att({af.arguments[i]},{af.arguments[j]})." for i, j in af.sorted_attacks()]
    return "\n".join(lines) + ("\n" if lines else "")


def serialize_tgf(af: ArgumentationFramework) -> str:
    lines = list(af.arguments) + ["#"]
    lines += [f"{af.arguments[i]} {af.arguments[j]}" for i, j in af.sorted_attacks()]
    return "\n".join(lines) + "\n"


PARSERS = {"apx": parse_apx, "tgf": parse_tgf}


def load(path: str | Path, fmt: str | None = None) -> ArgumentationFramework:
    """Read a framework from disk; ``fmt`` defaults to the file suffix."""
    path = Path(path)
    fmt = (fmt or path.suffix.lstrip(".")).lower()
    if fmt not in PARSERS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {sorted(PARSERS)}")
    text = path.read_text()
    try:
        return PARSERS[fmt](text)
    except ParseError as exc:
        err = ParseError(f"{path}: {exc}")
        err.line = exc.line
        raise err from exc

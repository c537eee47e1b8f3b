"""Argument sets as bit vectors, semantics identifiers and extension families.

Shared by the matrix route and the oracle, so this module must not import
anything that builds matrices.
"""

from __future__ import annotations

import enum
from functools import cached_property
from dataclasses import dataclass
from typing import Iterable, Iterator


class SemanticsId(str, enum.Enum):
    CF = "CF"
    AD = "AD"
    ST = "ST"
    CO = "CO"
    PR = "PR"
    GR = "GR"
    ID = "ID"
    SST = "SST"
    EAG = "EAG"


def bit_indices(mask: int) -> tuple[int, ...]:
    """Set bit positions of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True, order=False)
class ArgSet:
    """A subset of ``{0, ..., universe_size - 1}`` stored as an int bit vector."""

    universe_size: int
    members: int = 0

    def __post_init__(self):
        if self.universe_size < 0:
            raise ValueError("universe_size must be non-negative")
        if self.members < 0 or self.members >> self.universe_size:
            raise ValueError(
                f"members {self.members:#x} outside universe of size {self.universe_size}"
            )

    @classmethod
    def from_indices(cls, universe_size: int, indices: Iterable[int]) -> ArgSet:
        mask = 0
        for i in indices:
            if not 0 <= i < universe_size:
                raise ValueError(f"index {i} outside universe of size {universe_size}")
            mask |= 1 << i
        return cls(universe_size, mask)

    @classmethod
    def full(cls, universe_size: int) -> ArgSet:
        return cls(universe_size, (1 << universe_size) - 1)

    @classmethod
    def empty(cls, universe_size: int) -> ArgSet:
        return cls(universe_size, 0)

    @cached_property
    def indices(self) -> tuple[int, ...]:
        """Strictly increasing index list ``i_1 < ... < i_k``."""
        return bit_indices(self.members)

    def complement(self) -> ArgSet:
        return ArgSet(self.universe_size, ((1 << self.universe_size) - 1) & ~self.members)

    def issubset(self, other: ArgSet) -> bool:
        return self.members & ~other.members == 0

    def __contains__(self, index: int) -> bool:
        return bool(self.members >> index & 1)

    def __len__(self) -> int:
        return bin(self.members).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __or__(self, other: ArgSet) -> ArgSet:
        return ArgSet(self.universe_size, self.members | other.members)

    def __and__(self, other: ArgSet) -> ArgSet:
        return ArgSet(self.universe_size, self.members & other.members)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical order: cardinality first, then the increasing index list."""
        return (len(self), self.indices)

    def __repr__(self) -> str:
        return f"ArgSet({{{', '.join(map(str, self.indices))}}}, n={self.universe_size})"


@dataclass(frozen=True)
class ExtensionSet:
    """A deduplicated family of extensions kept in canonical order."""

    n: int
    extensions: tuple[ArgSet, ...]

    @classmethod
    def of(cls, n: int, sets: Iterable[ArgSet]) -> ExtensionSet:
        unique = {s.members: s for s in sets}
        for s in unique.values():
            if s.universe_size != n:
                raise ValueError("extension universe does not match frame dimension")
        return cls(n, tuple(sorted(unique.values(), key=ArgSet.sort_key)))

    def __len__(self) -> int:
        return len(self.extensions)

    def __iter__(self) -> Iterator[ArgSet]:
        return iter(self.extensions)

    def __contains__(self, s: ArgSet) -> bool:
        return any(e.members == s.members for e in self.extensions)

    def as_index_lists(self) -> list[tuple[int, ...]]:
        return [e.indices for e in self.extensions]

    def masks(self) -> frozenset[int]:
        return frozenset(e.members for e in self.extensions)

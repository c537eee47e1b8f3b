"""The Boolean attack matrix of a framework and its block algebra.

Row ``i`` of the matrix holds the attacks made by argument ``i``; column
``j`` holds the attacks received by argument ``j``. Blocks are materialised
copies indexed by strictly increasing row/column index lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .argsets import ArgSet
from .errors import DimensionMismatch, EmptySelection
from .framework import ArgumentationFramework


@dataclass(frozen=True, eq=False)
class AttackMatrix:
    """``M(F)``: ``bits[i, j]`` is True iff ``(i, j)`` is an attack.

    ``row_bits[i]`` and ``col_bits[j]`` expose each row and column as an int
    bit vector over argument indices.
    """

    n: int
    bits: np.ndarray
    row_bits: tuple[int, ...]
    col_bits: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, AttackMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return int(self.bits[ij])

    def tolist(self) -> list[list[int]]:
        return self.bits.astype(int).tolist()


@dataclass(frozen=True, eq=False)
class Block:
    row_indices: tuple[int, ...]
    col_indices: tuple[int, ...]
    entries: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_indices), len(self.col_indices))

    def __eq__(self, other):
        if not isinstance(other, Block):
            return NotImplemented
        return (
            self.row_indices == other.row_indices
            and self.col_indices == other.col_indices
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.row_indices, self.col_indices, self.entries.tobytes()))

    def tolist(self) -> list[list[int]]:
        return self.entries.astype(int).tolist()


def build_matrix(af: ArgumentationFramework) -> AttackMatrix:
    n = af.n
    bits = np.zeros((n, n), dtype=bool)
    rows = [0] * n
    cols = [0] * n
    for i, j in af.attacks:
        bits[i, j] = True
        rows[i] |= 1 << j
        cols[j] |= 1 << i
    bits.setflags(write=False)
    return AttackMatrix(n, bits, tuple(rows), tuple(cols))


def _check_indices(m: AttackMatrix, idx: Sequence[int], what: str) -> tuple[int, ...]:
    idx = tuple(int(i) for i in idx)
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise DimensionMismatch(f"{what} indices must be strictly increasing: {idx}")
    if idx and not (0 <= idx[0] and idx[-1] < m.n):
        raise DimensionMismatch(f"{what} indices {idx} outside matrix of order {m.n}")
    return idx


def _extract(m: AttackMatrix, rows: tuple[int, ...], cols: tuple[int, ...]) -> Block:
    if rows:
        entries = m.bits.take(rows, axis=0).take(cols, axis=1)
    else:
        entries = np.zeros((0, len(cols)), dtype=bool)
    entries.setflags(write=False)
    return Block(rows, cols, entries)


def block(m: AttackMatrix, rows: Sequence[int], cols: Sequence[int]) -> Block:
    """The ``k x h`` block at the intersection of ``rows`` and ``cols``."""
    return _extract(m, _check_indices(m, rows, "row"), _check_indices(m, cols, "column"))


def principal_block(m: AttackMatrix, idx: Sequence[int]) -> Block:
    return block(m, idx, idx)


def _check_set(m: AttackMatrix, s: ArgSet) -> None:
    if s.universe_size != m.n:
        raise DimensionMismatch(f"set over {s.universe_size} arguments, matrix of order {m.n}")


def cf_block(m: AttackMatrix, s: ArgSet) -> Block:
    """Principal block on ``S``. Rejects the empty set."""
    _check_set(m, s)
    if not s.members:
        raise EmptySelection("cf-block of the empty set is undefined")
    return _extract(m, s.indices, s.indices)


def s_block(m: AttackMatrix, s: ArgSet) -> Block:
    """Rows ``S`` by columns ``A \\ S``: attacks leaving ``S``."""
    _check_set(m, s)
    return _extract(m, s.indices, s.complement().indices)


def a_block(m: AttackMatrix, s: ArgSet) -> Block:
    """Rows ``A \\ S`` by columns ``S``: attacks entering ``S``."""
    _check_set(m, s)
    return _extract(m, s.complement().indices, s.indices)


def c_block(m: AttackMatrix, s: ArgSet) -> Block:
    """Principal block on ``A \\ S``."""
    _check_set(m, s)
    rest = s.complement().indices
    return _extract(m, rest, rest)


def complementary_block(m: AttackMatrix, b: Block) -> Block:
    """Delete ``b``'s rows and columns from ``m``; what remains."""
    _check_indices(m, b.row_indices, "row")
    _check_indices(m, b.col_indices, "column")
    rows = [i for i in range(m.n) if i not in set(b.row_indices)]
    cols = [j for j in range(m.n) if j not in set(b.col_indices)]
    return block(m, rows, cols)


def block_is_zero(b: Block) -> bool:
    return not b.entries.any()


def row_is_nonzero(b: Block, r: int) -> bool:
    if not 0 <= r < b.shape[0]:
        raise DimensionMismatch(f"row {r} outside block of shape {b.shape}")
    return bool(b.entries[r, :].any())


def col_is_nonzero(b: Block, t: int) -> bool:
    if not 0 <= t < b.shape[1]:
        raise DimensionMismatch(f"column {t} outside block of shape {b.shape}")
    return bool(b.entries[:, t].any())


def render(x: AttackMatrix | Block) -> str:
    """Rows of space-separated 0/1, one line per row, as printed in the literature."""
    arr = x.bits if isinstance(x, AttackMatrix) else x.entries
    return "\n".join(" ".join("1" if v else "0" for v in row) for row in arr)

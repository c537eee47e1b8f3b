"""Extension semantics decided by zero-tests on blocks of the attack matrix.

Conflict-freeness, stability, admissibility and completeness are decided
per set from the cf-, s-, a- and c-blocks. The remaining semantics are
selections over the admissible/complete families.
"""

from __future__ import annotations

import enum

import numpy as np

from .argsets import ArgSet, ExtensionSet, SemanticsId
from .errors import EnumerationLimitExceeded, InternalInvariantViolated, PreconditionViolated
from .matrix import (
    AttackMatrix,
    a_block,
    block_is_zero,
    c_block,
    cf_block,
    s_block,
)

DEFAULT_LIMIT = 24


class CorrespondenceReading(str, enum.Enum):
    """How "the s-block column corresponding to a c-block row/entry" is read.

    ATTACKER_ALIGNED: c-block row ``r`` nonzero requires s-block column ``r`` zero.
    TARGET_ALIGNED: c-block entry ``(r, t)`` set requires s-block column ``t`` zero.
    """

    ATTACKER_ALIGNED = "ATTACKER_ALIGNED"
    TARGET_ALIGNED = "TARGET_ALIGNED"


def _nonzero_cols(entries: np.ndarray) -> np.ndarray:
    return entries.any(axis=0)


def _nonzero_rows(entries: np.ndarray) -> np.ndarray:
    return entries.any(axis=1)


def is_conflict_free(m: AttackMatrix, s: ArgSet) -> bool:
    if not s.members:
        return True
    return block_is_zero(cf_block(m, s))


def is_stable(m: AttackMatrix, s: ArgSet) -> bool:
    """Conflict-free, and every column of the s-block has a 1."""
    if not is_conflict_free(m, s):
        return False
    return bool(_nonzero_cols(s_block(m, s).entries).all())


def _defended_from_outside(m: AttackMatrix, s: ArgSet, hit_by_s: np.ndarray) -> bool:
    # a-block row t nonzero => s-block column t nonzero; both index A \ S alike.
    attacks_in = _nonzero_rows(a_block(m, s).entries)
    return bool(np.all(~attacks_in | hit_by_s))


def _no_outsider_defended(m: AttackMatrix, s: ArgSet, hit_by_s: np.ndarray) -> bool:
    # Outsider t is undefended iff S attacks it (its attacker in S is never
    # countered, S being conflict-free) or some outsider p with c-block
    # entry (p, t) set is left unattacked by S (zero s-block column p).
    c = c_block(m, s).entries
    free_attacker = (c & ~hit_by_s[:, None]).any(axis=0)
    return bool(np.all(hit_by_s | free_attacker))


def is_admissible(m: AttackMatrix, s: ArgSet) -> bool:
    """Conflict-free, and each outside argument that attacks into ``S``
    (nonzero a-block row) is itself attacked from ``S`` (the matching
    s-block column is nonzero).
    """
    if not is_conflict_free(m, s):
        return False
    return _defended_from_outside(m, s, _nonzero_cols(s_block(m, s).entries))


def is_complete(m: AttackMatrix, s: ArgSet) -> bool:
    """Admissible, and no argument outside ``S`` is defended by ``S``."""
    if not is_conflict_free(m, s):
        return False
    hit_by_s = _nonzero_cols(s_block(m, s).entries)
    return _defended_from_outside(m, s, hit_by_s) and _no_outsider_defended(m, s, hit_by_s)


def theorem20_literal(
    m: AttackMatrix, s: ArgSet, reading: CorrespondenceReading | str
) -> bool:
    """The two-condition c-block test for completeness, taken literally.

    Condition (2): a zero c-block column ``t`` needs a nonzero s-block
    column ``t``. Condition (1) depends on ``reading``. Kept for auditing
    against :func:`is_complete`; not used by the solver.
    """
    reading = CorrespondenceReading(reading)
    if not is_admissible(m, s):
        raise PreconditionViolated(f"{s!r} is not admissible")
    s_nz = _nonzero_cols(s_block(m, s).entries)
    c = c_block(m, s).entries
    cond2 = np.all(_nonzero_cols(c) | s_nz)
    if reading is CorrespondenceReading.ATTACKER_ALIGNED:
        cond1 = np.all(~_nonzero_rows(c) | ~s_nz)
    else:
        cond1 = not (c & s_nz[None, :]).any()
    return bool(cond1 and cond2)


def range_of(m: AttackMatrix, s: ArgSet) -> ArgSet:
    """``S`` together with every argument some member of ``S`` attacks."""
    mask = s.members
    for i in s.indices:
        mask |= m.row_bits[i]
    return ArgSet(m.n, mask)


def conflict_free_masks(m: AttackMatrix) -> list[int]:
    """Depth-first over increasing indices; a branch adding ``j`` is cut when
    row ``j`` or column ``j`` meets the current members (or ``a_jj = 1``)."""
    n = m.n
    clash = [m.row_bits[j] | m.col_bits[j] for j in range(n)]
    usable = [not (m.row_bits[j] >> j & 1) for j in range(n)]
    out: list[int] = []

    def extend(mask: int, start: int) -> None:
        out.append(mask)
        for j in range(start, n):
            if usable[j] and not clash[j] & mask:
                extend(mask | 1 << j, j + 1)

    extend(0, 0)
    return out


def enumerate_conflict_free(m: AttackMatrix) -> ExtensionSet:
    return ExtensionSet.of(m.n, (ArgSet(m.n, x) for x in conflict_free_masks(m)))


def maximal(masks) -> list[int]:
    """The subset-maximal members of a family of bit masks."""
    masks = set(masks)
    return [x for x in masks if not any(x != y and x & ~y == 0 for y in masks)]


def minimal(masks) -> list[int]:
    masks = set(masks)
    return [x for x in masks if not any(x != y and y & ~x == 0 for y in masks)]


def _unique(masks: list[int], what: str) -> int:
    if len(masks) != 1:
        raise InternalInvariantViolated(f"expected a unique {what}, found {len(masks)}")
    return masks[0]


class _Enumerator:
    """Caches the intermediate families one enumeration call needs."""

    def __init__(self, m: AttackMatrix):
        self.m = m
        self._cache: dict[SemanticsId, list[int]] = {}

    def _filter(self, pred) -> list[int]:
        m = self.m
        return [x for x in self.get(SemanticsId.CF) if pred(m, ArgSet(m.n, x))]

    def _max_admissible_within(self, bound: int, what: str) -> list[int]:
        inside = [x for x in self.get(SemanticsId.AD) if x & ~bound == 0]
        return [_unique(maximal(inside), what)]

    def _intersection(self, masks: list[int]) -> int:
        acc = (1 << self.m.n) - 1
        for x in masks:
            acc &= x
        return acc

    def get(self, sem: SemanticsId) -> list[int]:
        if sem in self._cache:
            return self._cache[sem]
        m = self.m
        if sem is SemanticsId.CF:
            out = conflict_free_masks(m)
        elif sem is SemanticsId.ST:
            out = self._filter(is_stable)
        elif sem is SemanticsId.AD:
            out = self._filter(is_admissible)
        elif sem is SemanticsId.CO:
            out = []
            for x in self.get(SemanticsId.AD):
                s = ArgSet(m.n, x)
                if _no_outsider_defended(m, s, _nonzero_cols(s_block(m, s).entries)):
                    out.append(x)
        elif sem is SemanticsId.PR:
            out = maximal(self.get(SemanticsId.AD))
        elif sem is SemanticsId.GR:
            out = [_unique(minimal(self.get(SemanticsId.CO)), "grounded extension")]
        elif sem is SemanticsId.ID:
            bound = self._intersection(self.get(SemanticsId.PR))
            out = self._max_admissible_within(bound, "ideal extension")
        elif sem is SemanticsId.SST:
            ad = self.get(SemanticsId.AD)
            ranges = {x: range_of(m, ArgSet(m.n, x)).members for x in ad}
            top = set(maximal(ranges.values()))
            out = [x for x in ad if ranges[x] in top]
        elif sem is SemanticsId.EAG:
            bound = self._intersection(self.get(SemanticsId.SST))
            out = self._max_admissible_within(bound, "eager extension")
        else:  # pragma: no cover
            raise ValueError(sem)
        self._cache[sem] = out
        return out


def enumerate_extensions(
    m: AttackMatrix, sem: SemanticsId | str, limit: int | None = DEFAULT_LIMIT
) -> ExtensionSet:
    """All ``sem`` extensions of the framework behind ``m`` in canonical order.

    ``limit`` caps the argument count (``None`` disables the cap).
    """
    sem = SemanticsId(sem)
    if limit is not None and m.n > limit:
        raise EnumerationLimitExceeded(
            f"{m.n} arguments exceeds the enumeration limit of {limit}"
        )
    masks = _Enumerator(m).get(sem)
    return ExtensionSet.of(m.n, (ArgSet(m.n, x) for x in masks))


def enumerate_all(
    m: AttackMatrix, limit: int | None = DEFAULT_LIMIT
) -> dict[SemanticsId, ExtensionSet]:
    """Every semantics at once, sharing the admissible/complete families."""
    if limit is not None and m.n > limit:
        raise EnumerationLimitExceeded(
            f"{m.n} arguments exceeds the enumeration limit of {limit}"
        )
    e = _Enumerator(m)
    return {sem: ExtensionSet.of(m.n, (ArgSet(m.n, x) for x in e.get(sem))) for sem in SemanticsId}

"""Brute-force reference semantics, written straight from the set-theoretic
definitions over the attack relation.

Deliberately naive: every quantifier is a loop over arguments or over all
``2**n`` subsets. This module never touches the matrix code, so agreement
with :mod:`afmatrix.semantics` is evidence rather than tautology.
"""

from __future__ import annotations

from itertools import combinations

from .argsets import ArgSet, ExtensionSet, SemanticsId
from .errors import OracleLimitExceeded
from .framework import ArgumentationFramework

ORACLE_LIMIT = 20


def conflict_free(af: ArgumentationFramework, s: ArgSet) -> bool:
    return not any((a, b) in af.attacks for a in s for b in s)


def defeats(af: ArgumentationFramework, s: ArgSet, a: int) -> bool:
    """Some member of ``s`` attacks ``a``."""
    return any((b, a) in af.attacks for b in s)


def defends(af: ArgumentationFramework, s: ArgSet, a: int) -> bool:
    """Every attacker of ``a`` is defeated by ``s`` (vacuous if unattacked)."""
    return all(defeats(af, s, b) for b in range(af.n) if (b, a) in af.attacks)


def admissible(af: ArgumentationFramework, s: ArgSet) -> bool:
    return conflict_free(af, s) and all(defends(af, s, a) for a in s)


def stable(af: ArgumentationFramework, s: ArgSet) -> bool:
    return conflict_free(af, s) and all(
        defeats(af, s, a) for a in range(af.n) if a not in s
    )


def complete(af: ArgumentationFramework, s: ArgSet) -> bool:
    return admissible(af, s) and all(
        a in s for a in range(af.n) if defends(af, s, a)
    )


def attack_range(af: ArgumentationFramework, s: ArgSet) -> set[int]:
    return set(s) | {b for (a, b) in af.attacks if a in s}


def all_subsets(n: int):
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            yield ArgSet.from_indices(n, combo)


def _proper_subset(x: ArgSet, y: ArgSet) -> bool:
    return set(x) < set(y)


def _intersection(af: ArgumentationFramework, family: list[ArgSet]) -> set[int]:
    out = set(range(af.n))
    for t in family:
        out &= set(t)
    return out


def _enumerate(af: ArgumentationFramework, sem: SemanticsId) -> list[ArgSet]:
    subsets = list(all_subsets(af.n))
    if sem is SemanticsId.CF:
        return [s for s in subsets if conflict_free(af, s)]
    if sem is SemanticsId.ST:
        return [s for s in subsets if stable(af, s)]
    if sem is SemanticsId.AD:
        return [s for s in subsets if admissible(af, s)]
    if sem is SemanticsId.CO:
        return [s for s in subsets if complete(af, s)]

    ad = _enumerate(af, SemanticsId.AD)
    if sem is SemanticsId.PR:
        return [s for s in ad if not any(_proper_subset(s, t) for t in ad)]
    if sem is SemanticsId.GR:
        co = _enumerate(af, SemanticsId.CO)
        return [s for s in co if not any(_proper_subset(t, s) for t in co)]
    if sem is SemanticsId.SST:
        return [
            s for s in ad
            if not any(attack_range(af, s) < attack_range(af, t) for t in ad)
        ]
    if sem in (SemanticsId.ID, SemanticsId.EAG):
        over = SemanticsId.PR if sem is SemanticsId.ID else SemanticsId.SST
        bound = _intersection(af, _enumerate(af, over))
        inside = [u for u in ad if set(u) <= bound]
        return [s for s in inside if not any(_proper_subset(s, u) for u in inside)]
    raise ValueError(sem)


def oracle_enumerate(af: ArgumentationFramework, sem: SemanticsId | str) -> ExtensionSet:
    sem = SemanticsId(sem)
    if af.n > ORACLE_LIMIT:
        raise OracleLimitExceeded(f"oracle handles at most {ORACLE_LIMIT} arguments, got {af.n}")
    return ExtensionSet.of(af.n, _enumerate(af, sem))


_PER_SET = {
    SemanticsId.CF: conflict_free,
    SemanticsId.AD: admissible,
    SemanticsId.ST: stable,
    SemanticsId.CO: complete,
}


def oracle_is(af: ArgumentationFramework, s: ArgSet, sem: SemanticsId | str) -> bool:
    """Membership of ``s`` in the ``sem`` family.

    CF/AD/ST/CO are decided directly; the selection semantics fall back to
    membership in :func:`oracle_enumerate`.
    """
    sem = SemanticsId(sem)
    if sem in _PER_SET:
        return _PER_SET[sem](af, s)
    return s in oracle_enumerate(af, sem)


def grounded_by_iteration(af: ArgumentationFramework) -> ArgSet:
    """Least fixed point of the characteristic function, iterated from the empty set."""
    s = ArgSet.empty(af.n)
    while True:
        nxt = ArgSet.from_indices(af.n, [a for a in range(af.n) if defends(af, s, a)])
        if nxt == s:
            return s
        s = nxt

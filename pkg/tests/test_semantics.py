import itertools
import os

import pytest
from hypothesis import given, settings

from afmatrix import (
    ArgSet,
    ArgumentationFramework,
    CorrespondenceReading,
    EnumerationLimitExceeded,
    InternalInvariantViolated,
    PreconditionViolated,
    SemanticsId,
    build_matrix,
    enumerate_all,
    enumerate_conflict_free,
    enumerate_extensions,
    framework_from_pairs,
    is_admissible,
    is_complete,
    is_conflict_free,
    is_stable,
    range_of,
    theorem20_literal,
)
from afmatrix import oracle
from afmatrix.semantics import _unique, maximal, minimal
from conftest import S, framework_and_subset, frameworks, worked_af

A, T = CorrespondenceReading.ATTACKER_ALIGNED, CorrespondenceReading.TARGET_ALIGNED
PREDICATES = [
    (is_conflict_free, SemanticsId.CF),
    (is_stable, SemanticsId.ST),
    (is_admissible, SemanticsId.AD),
    (is_complete, SemanticsId.CO),
]


def fam(af, family):
    return [tuple(int(af.arguments[i]) for i in e.indices) for e in family]


# -- per-set predicates on the worked frameworks ------------------------------

def test_conflict_free_examples(ex8):
    m = build_matrix(ex8)
    assert is_conflict_free(m, S(ex8, 1, 3, 5))
    assert not is_conflict_free(m, S(ex8, 1, 2))
    assert is_conflict_free(m, ArgSet.empty(5))


def test_stable_examples(ex8):
    m = build_matrix(ex8)
    assert is_stable(m, S(ex8, 1, 3, 5))
    assert not is_stable(m, S(ex8, 2, 4))
    assert not is_stable(m, ArgSet.empty(5))


def test_admissible_examples(ex8):
    m = build_matrix(ex8)
    assert is_admissible(m, S(ex8, 1, 5))
    assert not is_admissible(m, S(ex8, 3, 5))
    assert is_admissible(m, ArgSet.empty(5))


def test_complete_examples(ex17):
    m = build_matrix(ex17)
    assert is_complete(m, S(ex17, 1, 3, 5))
    assert not is_complete(m, S(ex17, 1, 5))
    assert not is_complete(m, S(ex17, 1))


def test_theorem20_literal_examples(ex8, ex17):
    m17 = build_matrix(ex17)
    assert theorem20_literal(m17, S(ex17, 1, 3, 5), A) is False
    assert is_complete(m17, S(ex17, 1, 3, 5))
    m14 = build_matrix(ex8)
    for reading in (A, T):
        assert theorem20_literal(m14, S(ex8, 1, 3, 5), reading) is True
        assert theorem20_literal(m17, S(ex17, 1, 5), reading) is False


def test_theorem20_literal_requires_admissible(ex8):
    with pytest.raises(PreconditionViolated):
        theorem20_literal(build_matrix(ex8), S(ex8, 3, 5), A)


def test_range_examples(ex6, ex8):
    assert range_of(build_matrix(ex6), ArgSet.empty(3)) == ArgSet.empty(3)
    assert range_of(build_matrix(ex6), S(ex6, 2)) == S(ex6, 2, 3)
    assert range_of(build_matrix(ex8), S(ex8, 1, 3, 5)) == ArgSet.full(5)


# -- enumeration --------------------------------------------------------------

def test_enumerate_conflict_free_examples(ex6, ex8):
    assert fam(ex8, enumerate_conflict_free(build_matrix(ex8))) == [
        (), (1,), (2,), (3,), (4,), (5,),
        (1, 3), (1, 4), (1, 5), (2, 4), (3, 5), (1, 3, 5),
    ]
    assert fam(ex6, enumerate_conflict_free(build_matrix(ex6))) == [(), (1,), (2,), (3,)]
    selfish = framework_from_pairs(["a"], [("a", "a")])
    assert enumerate_conflict_free(build_matrix(selfish)).as_index_lists() == [()]


def test_enumerate_examples(ex6, ex8, ex17):
    assert fam(ex8, enumerate_extensions(build_matrix(ex8), "ST")) == [(1, 3, 5)]
    assert fam(ex17, enumerate_extensions(build_matrix(ex17), "CO")) == [(1, 3, 5)]
    m6 = build_matrix(ex6)
    assert fam(ex6, enumerate_extensions(m6, "PR")) == [()]
    assert fam(ex6, enumerate_extensions(m6, "GR")) == [()]
    assert fam(ex6, enumerate_extensions(m6, "ST")) == []
    assert fam(ex8, enumerate_extensions(build_matrix(ex8), "AD")) == [(), (1,), (1, 5), (1, 3, 5)]


def test_enumeration_limit():
    af = ArgumentationFramework(tuple(str(i) for i in range(25)), frozenset())
    m = build_matrix(af)
    with pytest.raises(EnumerationLimitExceeded):
        enumerate_extensions(m, "GR")
    with pytest.raises(EnumerationLimitExceeded):
        enumerate_extensions(build_matrix(worked_af("ex8")), "GR", limit=4)
    # with the cap disabled; everyone attacks everyone, so the tree stays tiny
    clique = ArgumentationFramework(
        tuple(str(i) for i in range(25)),
        frozenset((i, j) for i in range(25) for j in range(25) if i != j),
    )
    m = build_matrix(clique)
    assert enumerate_extensions(m, "GR", limit=None).as_index_lists() == [()]
    assert len(enumerate_extensions(m, "PR", limit=None)) == 25


def test_unique_guard():
    with pytest.raises(InternalInvariantViolated):
        _unique([1, 2], "thing")
    assert sorted(maximal([0b001, 0b011, 0b100])) == [0b011, 0b100]
    assert sorted(minimal([0b001, 0b011, 0b100])) == [0b001, 0b100]


# -- corrected complete condition: exhaustive verification ----------------------

def all_frameworks(n, self_attacks=True):
    pairs = [(i, j) for i in range(n) for j in range(n) if self_attacks or i != j]
    labels = tuple(str(k + 1) for k in range(n))
    for bits in range(1 << len(pairs)):
        yield ArgumentationFramework(
            labels, frozenset(p for k, p in enumerate(pairs) if bits >> k & 1)
        )


def _check_exhaustively(af, preds=PREDICATES):
    m = build_matrix(af)
    for s in oracle.all_subsets(af.n):
        for pred, sem in preds:
            assert pred(m, s) == oracle.oracle_is(af, s, sem), (af, s, sem)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_all_frameworks_up_to_three(n):
    for af in all_frameworks(n):
        _check_exhaustively(af)


def test_all_loop_free_frameworks_of_four():
    for af in all_frameworks(4, self_attacks=False):
        _check_exhaustively(af, [(is_complete, SemanticsId.CO)])


@pytest.mark.skipif(not os.environ.get("AFMATRIX_SLOW"), reason="set AFMATRIX_SLOW=1")
def test_all_frameworks_of_four_with_loops():
    for af in all_frameworks(4):
        _check_exhaustively(af)


@settings(max_examples=300, deadline=None)
@given(frameworks(min_n=5, max_n=6))
def test_random_frameworks_five_six_exhaustive_subsets(af):
    _check_exhaustively(af)


# -- properties -----------------------------------------------------------------

@settings(max_examples=400, deadline=None)
@given(framework_and_subset(max_n=8))
def test_predicates_match_oracle(case):
    af, s = case
    m = build_matrix(af)
    for pred, sem in PREDICATES:
        assert pred(m, s) == oracle.oracle_is(af, s, sem)


@settings(max_examples=150, deadline=None)
@given(frameworks(max_n=6))
def test_all_semantics_match_oracle(af):
    families = enumerate_all(build_matrix(af))
    for sem in SemanticsId:
        assert families[sem] == oracle.oracle_enumerate(af, sem), sem
        assert families[sem] == enumerate_extensions(build_matrix(af), sem)


@settings(max_examples=200, deadline=None)
@given(frameworks(max_n=7))
def test_semantics_lattice(af):
    m = build_matrix(af)
    f = {k: v.masks() for k, v in enumerate_all(m).items()}
    assert f[SemanticsId.ST] <= f[SemanticsId.PR] <= f[SemanticsId.CO] <= f[SemanticsId.AD]
    for sem in (SemanticsId.GR, SemanticsId.ID, SemanticsId.EAG):
        assert len(f[sem]) == 1
    for sem in (SemanticsId.AD, SemanticsId.PR, SemanticsId.CO, SemanticsId.GR):
        assert f[sem]
    (gr,), (ideal,), (eager,) = f[SemanticsId.GR], f[SemanticsId.ID], f[SemanticsId.EAG]
    assert all(gr & ~c == 0 for c in f[SemanticsId.CO])
    assert all(ideal & ~p == 0 for p in f[SemanticsId.PR])
    assert all(eager & ~x == 0 for x in f[SemanticsId.SST])
    if f[SemanticsId.ST]:
        assert f[SemanticsId.SST] == f[SemanticsId.ST]
    for x in f[SemanticsId.ST]:
        assert range_of(m, ArgSet(af.n, x)) == ArgSet.full(af.n)
    assert 0 in f[SemanticsId.AD]


@settings(max_examples=200, deadline=None)
@given(frameworks(max_n=7))
def test_semi_stable_same_over_complete_base(af):
    m = build_matrix(af)
    families = enumerate_all(m)
    co = [e for e in families[SemanticsId.CO]]
    ranges = {e.members: range_of(m, e).members for e in co}
    top = set(maximal(ranges.values()))
    from_co = {x for x, r in ranges.items() if r in top}
    assert from_co == families[SemanticsId.SST].masks()


def test_canonical_order():
    af = framework_from_pairs(list("abcd"), [])
    cf = enumerate_conflict_free(build_matrix(af))
    keys = [(len(e), e.indices) for e in cf]
    assert keys == sorted(keys) and len(cf) == 16
    assert list(itertools.islice((e.indices for e in cf), 6)) == [
        (), (0,), (1,), (2,), (3,), (0, 1),
    ]

import pytest
from hypothesis import strategies as st

from afmatrix import ArgSet, ArgumentationFramework, framework_from_pairs

EX6 = (["1", "2", "3"], [("1", "2"), ("2", "3"), ("3", "1")])
EX7 = (["1", "2", "3", "4"], [("1", "2"), ("1", "3"), ("2", "1"), ("2", "3"), ("3", "4")])
# ex8, ex11 and ex14 share one framework.
EX8 = (["1", "2", "3", "4", "5"], [("1", "2"), ("2", "3"), ("2", "5"), ("4", "3"), ("5", "4")])
EX17 = (
    ["1", "2", "3", "4", "5"],
    [("1", "2"), ("2", "3"), ("2", "4"), ("2", "5"), ("4", "3"), ("5", "4")],
)

WORKED = {"ex6": EX6, "ex7": EX7, "ex8": EX8, "ex11": EX8, "ex14": EX8, "ex17": EX17}


def worked_af(name: str) -> ArgumentationFramework:
    return framework_from_pairs(*WORKED[name])


def S(af: ArgumentationFramework, *labels) -> ArgSet:
    """Argument set from 1-based labels."""
    return ArgSet.from_indices(af.n, [af.index_of[str(x)] for x in labels])


@pytest.fixture
def ex6():
    return worked_af("ex6")


@pytest.fixture
def ex7():
    return worked_af("ex7")


@pytest.fixture
def ex8():
    return worked_af("ex8")


@pytest.fixture
def ex17():
    return worked_af("ex17")


@st.composite
def frameworks(draw, min_n=0, max_n=6, self_attacks=True):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(n) if self_attacks or i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return ArgumentationFramework(tuple(str(k + 1) for k in range(n)), frozenset(chosen))


@st.composite
def framework_and_subset(draw, min_n=0, max_n=6):
    af = draw(frameworks(min_n, max_n))
    mask = draw(st.integers(0, (1 << af.n) - 1))
    return af, ArgSet(af.n, mask)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

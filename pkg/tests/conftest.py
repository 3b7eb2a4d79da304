import pytest
from hypothesis import strategies as st

from rangesem.framework import ArgumentationFramework
from rangesem.program import Clause, NormalProgram

CYCLE3 = ArgumentationFramework.from_names("abc", [("a", "b"), ("b", "c"), ("c", "a")])
MUTUAL = ArgumentationFramework.from_names("ab", [("a", "b"), ("b", "a")])
SINGLE = ArgumentationFramework.from_names("ab", [("a", "b")])
CHAIN = ArgumentationFramework.from_names("abc", [("a", "b"), ("b", "c")])
SELF = ArgumentationFramework.from_names("a", [("a", "a")])


@pytest.fixture
def cycle3():
    return CYCLE3


@pytest.fixture
def mutual():
    return MUTUAL


@pytest.fixture
def single():
    return SINGLE


@pytest.fixture
def chain():
    return CHAIN


@st.composite
def frameworks(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(n)]
    attacks = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return ArgumentationFramework(tuple(f"x{i}" for i in range(n)), frozenset(attacks))


@st.composite
def programs(draw, max_atoms=5, max_clauses=8):
    n = draw(st.integers(0, max_atoms))
    if n == 0:
        return NormalProgram()
    full = (1 << n) - 1
    clause = st.builds(
        Clause,
        st.integers(0, n - 1),
        st.integers(0, full),
        st.integers(0, full),
    )
    clauses = draw(st.frozensets(clause, max_size=max_clauses))
    return NormalProgram(tuple(f"p{i}" for i in range(n)), clauses)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, msg = results[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {msg}")

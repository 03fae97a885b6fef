import pytest

from unitalgraphs.construction import construct
from unitalgraphs.graph import Graph


@pytest.fixture(scope="session")
def state():
    return construct()


def cycle(n):
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.build(10, outer + spokes + inner)


ACCEPTANCE_LINES = []


def record(criterion, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

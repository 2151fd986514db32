import pytest
from hypothesis import strategies as st

from bicliq import Graph

P3 = Graph(3, [(0, 1), (1, 2)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
TWO_K2 = Graph(4, [(0, 1), (2, 3)])
STAR3 = Graph(4, [(0, 1), (0, 2), (0, 3)])
K1 = Graph(1)
K2 = Graph.complete(2)
K3 = Graph.complete(3)
K4 = Graph.complete(4)
K5 = Graph.complete(5)


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(all_pairs), max_size=len(all_pairs)))
    return Graph(n, [e for e, k in zip(all_pairs, keep) if k])


# Acceptance results, printed one line per criterion at the end of the run.
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(name, ok, detail):
        ACCEPTANCE_RESULTS[name] = (bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")

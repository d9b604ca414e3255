import pytest

from gogzeta import examples
from gogzeta.graph import build_graph

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {msg}")


@pytest.fixture(scope="session")
def k4():
    return examples.k4()


@pytest.fixture(scope="session")
def cov_c3():
    return examples.k4_covering("c3")


@pytest.fixture(scope="session")
def cov_a4():
    return examples.k4_covering("a4")


@pytest.fixture
def two_legs():
    return build_graph({"vertices": ["v"], "legs": ["v", "v"]})


def bouquet(m):
    return build_graph({"vertices": ["v"], "edges": [["v", "v"]] * m})


def dipole(m):
    return build_graph({"vertices": ["a", "b"], "edges": [["a", "b"]] * m})

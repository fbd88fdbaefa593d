import pathlib

import pytest

from monomization.graph import RootedMultigraph, load_graph

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = FIXTURES / "golden"


@pytest.fixture
def k2():
    return RootedMultigraph.complete(2)


@pytest.fixture
def k3():
    return RootedMultigraph.complete(3)


@pytest.fixture
def k5():
    return RootedMultigraph.complete(5)


@pytest.fixture
def ex4():
    return load_graph(FIXTURES / "example4.graph")



# one PASS/FAIL line per acceptance criterion, printed after the run
_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        name = report.nodeid.rsplit("_", 1)[1]
        prev = _criteria.get(name)
        if prev != "FAIL":
            _criteria[name] = "FAIL" if report.failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    import test_acceptance
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=int):
        doc = getattr(test_acceptance, f"test_criterion_{name}").__doc__
        terminalreporter.write_line(f"{_criteria[name]} criterion {name}: {doc}")

import pytest

from bdm.graph import build_graph

# criterion number -> outcome, filled as acceptance tests report
_ACCEPTANCE: dict[int, dict] = {}
_ACCEPTANCE_MARKERS: dict[str, tuple[int, str]] = {}


@pytest.fixture
def p3():
    # a0 - b0 - a1
    return build_graph(2, 1, [(0, 0), (1, 0)])


@pytest.fixture
def star():
    # three A leaves on b0, which takes two
    return build_graph(3, 1, [(0, 0), (1, 0), (2, 0)], {3: 2})


@pytest.fixture
def c4():
    return build_graph(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])


@pytest.fixture
def chain():
    # a0b0, a1b1 inevitable, a0b1 forbidden
    return build_graph(2, 2, [(0, 0), (1, 1), (0, 1)])


@pytest.fixture
def single_edge():
    return build_graph(1, 1, [(0, 0)], [2, 1])


def pytest_runtest_logreport(report):
    marker = _ACCEPTANCE_MARKERS.get(report.nodeid)
    if marker is None:
        return
    number, title = marker
    entry = _ACCEPTANCE.setdefault(number, {"title": title, "ok": True, "seen": False})
    if report.when == "call" or report.failed:
        entry["seen"] = True
        if report.failed:
            entry["ok"] = False


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            _ACCEPTANCE_MARKERS[item.nodeid] = (mark.args[0], mark.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        entry = _ACCEPTANCE[number]
        status = "PASS" if entry["ok"] and entry["seen"] else "FAIL"
        terminalreporter.write_line(f"AC{number} {status}  {entry['title']}")

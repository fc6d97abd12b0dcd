import pytest

_criteria = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run tests marked slow (hours)")


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): an acceptance criterion")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow; pass --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[rep.outcome]
        _criteria.append((status, marker.args[0], rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for status, label, secs in _criteria:
        terminalreporter.write_line(f"[{status}] {label} ({secs:.1f}s)")


@pytest.fixture(scope="session")
def golden_table():
    """Golden b(n, k) values for k = 3..14: sorted (n, k, b) rows."""
    from pathlib import Path
    lines = (Path(__file__).parent / "data" / "golden_table.csv").read_text().splitlines()
    assert lines[0] == "n,k,b"
    return [tuple(map(int, ln.split(","))) for ln in lines[1:]]

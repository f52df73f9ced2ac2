import pytest

ACCEPTANCE_RESULTS: dict = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance criterion for the summary table."""
    label = request.node.get_closest_marker("criterion").args[0]
    yield label
    rep = getattr(request.node, "rep_call", None)
    ACCEPTANCE_RESULTS[label] = bool(rep and rep.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0][1:])):
        status = "PASS" if ACCEPTANCE_RESULTS[label] else "FAIL"
        terminalreporter.write_line(f"{status}  {label}")

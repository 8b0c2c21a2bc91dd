import pytest

ACCEPTANCE_RESULTS: dict[str, bool] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in sorted(ACCEPTANCE_RESULTS.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")


@pytest.fixture
def record_acceptance(request):
    name = request.node.name.removeprefix("test_")

    yield name
    rep = getattr(request.node, "rep_call", None)
    ACCEPTANCE_RESULTS[name] = bool(rep and rep.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep

import pytest

ACCEPTANCE_RESULTS = []


@pytest.fixture
def criterion(request):
    """Record a one-line pass/fail verdict for an acceptance criterion."""
    entry = {"name": request.node.name, "detail": "", "ok": False}
    ACCEPTANCE_RESULTS.append(entry)

    def note(detail):
        entry["detail"] = detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    entry["ok"] = rep is not None and rep.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for e in ACCEPTANCE_RESULTS:
        verdict = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {e['name']}: {e['detail']}")

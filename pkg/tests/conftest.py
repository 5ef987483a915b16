import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; pass/fail comes from the test outcome."""
    entry = {"label": request.node.name, "detail": ""}

    def set_detail(label, detail=""):
        entry["label"] = label
        entry["detail"] = detail

    yield set_detail
    rep = getattr(request.node, "rep_call", None)
    passed = rep is not None and rep.passed
    _ACCEPTANCE.append((entry["label"], passed, entry["detail"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _ACCEPTANCE:
        line = f"[{'PASS' if passed else 'FAIL'}] {label}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)

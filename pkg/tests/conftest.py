import pytest

_CRITERIA: dict[str, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def detail(request):
    """Collects a one-line measurement summary for the acceptance report."""
    notes: list[str] = []
    request.node.user_properties.append(("detail", notes))
    return notes.append


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    notes = next((v for k, v in item.user_properties if k == "detail"), [])
    _CRITERIA[number] = {"title": title, "passed": report.passed, "notes": list(notes)}


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        status = "PASS" if entry["passed"] else "FAIL"
        line = f"[{status}] {number:>2}. {entry['title']}"
        if entry["notes"]:
            line += " | " + "; ".join(entry["notes"])
        tr.write_line(line)
    passed = sum(e["passed"] for e in _CRITERIA.values())
    tr.write_line(f"{passed}/{len(_CRITERIA)} criteria passed")

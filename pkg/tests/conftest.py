import pytest

_criteria: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or rep.failed:
        num = mark.args[0]
        title = mark.kwargs.get("title", item.name)
        entry = _criteria.setdefault(num, [title, True])
        entry[1] = entry[1] and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(_criteria):
        title, ok = _criteria[num]
        terminalreporter.write_line(f"AC{num:<3}{'PASS' if ok else 'FAIL'}  {title}")

import pytest

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    entry = _criteria.setdefault(number, [title, True])
    if report.failed or (report.when == "call" and report.skipped):
        entry[1] = False


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("criterion")
    if m is not None:
        outcome.get_result().criterion = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title}")

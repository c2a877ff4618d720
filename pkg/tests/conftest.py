import pytest

from luroth.report import build_suite

# acceptance tests register here as name -> short title, in criterion order
CRITERIA: dict[str, str] = {}
_OUTCOMES: dict[str, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if name.startswith("test_criterion_") and (report.when == "call" or report.failed):
        if _OUTCOMES.get(name) != "FAIL":
            _OUTCOMES[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for name, title in CRITERIA.items():
        if name in _OUTCOMES:
            terminalreporter.write_line(f"{_OUTCOMES[name]}  {name[len('test_'):]}: {title}")


@pytest.fixture(scope="session")
def suite_run():
    """The full claim suite, evaluated once per session."""
    return build_suite().run()

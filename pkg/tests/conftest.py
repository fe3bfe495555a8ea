import os

import pytest


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache(tmp_path_factory):
    """Keep the on-disk coset cache out of the working tree."""
    old = os.environ.get("BCHLAB_CACHE")
    os.environ["BCHLAB_CACHE"] = str(tmp_path_factory.mktemp("coset-cache"))
    yield
    if old is None:
        os.environ.pop("BCHLAB_CACHE", None)
    else:
        os.environ["BCHLAB_CACHE"] = old


_criteria: dict[int, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if report.when == "call" or report.failed:
        prev = _criteria.get(n, "PASS")
        _criteria[n] = "FAIL" if report.failed or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        terminalreporter.write_line(f"{_criteria[n]} criterion {n}")

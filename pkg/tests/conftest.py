import os

import pytest

from tricross import kernels

# Long scans run by default only with the compiled kernels; TRICROSS_SLOW=1 forces them.
SLOW = os.environ.get("TRICROSS_SLOW", "") not in ("", "0") or kernels.IMPLEMENTATION == "cython"

_ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = {}


@pytest.fixture
def acceptance(request):
    """Record one acceptance line: ``acceptance(number, title, passed, seconds)``."""
    log = request.config.stash[_ACCEPTANCE]

    def record(number, title, passed, seconds):
        log[number] = (title, passed, seconds)

    return record


def pytest_terminal_summary(terminalreporter, config):
    log = config.stash.get(_ACCEPTANCE, {})
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(log):
        title, passed, seconds = log[number]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}  ({seconds:.2f} s)")

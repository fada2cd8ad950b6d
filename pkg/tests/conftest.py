import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


import pytest  # noqa: E402

ACCEPTANCE = []


@pytest.fixture
def record():
    """Print one verdict line and keep it for the terminal summary."""
    def _record(idx, title, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {idx:2d}  {title}: {detail}"
        print(line)
        ACCEPTANCE.append(line)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)

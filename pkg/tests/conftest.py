import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from framegeom import load_builtin  # noqa: E402

settings.register_profile("default", max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("FRAMEGEOM_HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def kenmotsu3():
    return load_builtin("kenmotsu3")


@pytest.fixture(scope="session")
def hyperbolic3():
    return load_builtin("hyperbolic_kenmotsu3")


@pytest.fixture(scope="session")
def abelian3():
    return load_builtin("abelian_flat3")


@pytest.fixture(scope="session")
def su2():
    return load_builtin("su2_round3")


@pytest.fixture
def acceptance_record():
    """Record one PASS/FAIL line per acceptance criterion and assert on it."""

    def record(number, title, results):
        failed = [name for name, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {number} [{status}] {title} ({len(results) - len(failed)}/{len(results)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed[:5])
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert not failed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

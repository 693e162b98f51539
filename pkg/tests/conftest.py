"""Shared fixtures and the acceptance criteria summary hook."""

import pytest
from hypothesis import settings

from tagspot.carriers import REFERENCE_LAYOUT
from tagspot.codebook import builtin_codebook

# Monte Carlo heavy tests blow the default hypothesis deadline; wall clock
# budgets are asserted explicitly where they matter.
settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def layout():
    return REFERENCE_LAYOUT


@pytest.fixture(scope="session")
def codebook():
    return builtin_codebook()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion after the run."""
    rows = {}
    for outcome, ok in (("passed", True), ("failed", False), ("error", False)):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            rows[name] = ok and rows.get(name, True)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(rows):
        verdict = "PASS" if rows[name] else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")

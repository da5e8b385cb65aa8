import time

import pytest

from warppoly import run_property_suite


@pytest.fixture(scope="session")
def full_suite_report():
    """One exhaustive sweep over every code with at most 5 crossings,
    shared by the acceptance criteria that read different parts of it."""
    started = time.time()
    report = run_property_suite(5)
    print(
        f"\n[exhaustive suite] {report.diagrams_checked} codes, "
        f"{sum(report.checks().values())} checks in {time.time() - started:.1f}s"
    )
    return report

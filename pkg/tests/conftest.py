import time

import pytest

from subword_entropy.search import min_entropy_exhaustive


@pytest.fixture(scope="session")
def exhaustive_results():
    """Exhaustive results for n = 1..16 with per-length wall times."""
    results, timings = {}, {}
    for n in range(1, 17):
        t0 = time.perf_counter()
        results[n] = min_entropy_exhaustive(n)
        timings[n] = time.perf_counter() - t0
    return results, timings


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report_criterion():
    def report(label: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {label}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

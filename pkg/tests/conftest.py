from pathlib import Path

import pytest

from covrough import Universe, build_covering

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).resolve().parent / "golden"
EXAMPLE_COV = ROOT / "data" / "example.cov"

# Filled by test_acceptance; printed once at the end of the run.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def example():
    """Six elements a..f with blocks {a,b}, {a,c,d}, {a,b,c,d}, {d,e,f}."""
    u = Universe("abcdef")
    return build_covering(u, [["a", "b"], ["a", "c", "d"], ["a", "b", "c", "d"], ["d", "e", "f"]])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from suffixearley.families import worked_example  # noqa: E402
from suffixearley.grammar import parse_grammar  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def anbn():
    return parse_grammar("S -> a S b | ")


@pytest.fixture
def example():
    return worked_example()


@pytest.fixture
def report():
    """Record one pass/fail line per acceptance criterion."""
    def record(name, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

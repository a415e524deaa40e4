import numpy as np
import pytest

from utmv.domains import INT
from utmv.matrix import DenseMatrix


@pytest.fixture
def int_matrix():
    def make(rows):
        return DenseMatrix(np.array(rows, dtype=object), INT)
    return make


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report_line():
    def record(number: int, name: str, ok: bool, detail: str):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {name}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

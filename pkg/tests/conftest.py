import re

import pytest

from frobcodes.ext_field import FieldCtx
from frobcodes.formats import load_worked_example
from frobcodes.frobenius import DecompositionCtx
from frobcodes.linalg import Matrix

EXAMPLE_F = (1, 1, 2, 1, 5, 3, 2)


@pytest.fixture(scope="session")
def example():
    return load_worked_example()


@pytest.fixture(scope="session")
def field7():
    return FieldCtx(7, EXAMPLE_F)


@pytest.fixture(scope="session")
def ctx7(field7, example):
    return DecompositionCtx(field7, xi=example["xi"])


@pytest.fixture(scope="session")
def mat7():
    return lambda rows: Matrix(rows, 7)


def pytest_terminal_summary(terminalreporter):
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", getattr(rep, "nodeid", ""))
            if m and rep.when == "call":
                entry = results.setdefault(int(m.group(1)), [m.group(2), 0, 0])
                entry[1 if outcome == "passed" else 2] += 1
    if results:
        terminalreporter.section("acceptance criteria")
        for num, (name, ok, bad) in sorted(results.items()):
            verdict = "PASS" if not bad else "FAIL"
            terminalreporter.write_line(f"criterion {num:2d}  {name:<32} {verdict}  ({ok}/{ok + bad} cases)")

from __future__ import annotations

import time
from dataclasses import dataclass

import pytest

from eleven_knots.core import SchubertForm
from eleven_knots.pipeline import PipelineReport, compile_form

SWEEP_BOUNDS = (4, 4, 4, 6)

# one line per acceptance criterion, printed at the end of the run
CRITERIA: dict[int, str] = {}


def sweep_forms(r_max, s_max, t_max, rho_abs_max):
    for r in range(r_max + 1):
        for s in range(s_max + 1):
            for t in range(t_max + 1):
                for rho in range(-rho_abs_max, rho_abs_max + 1):
                    yield SchubertForm(r, s, t, rho)


@dataclass
class Sweep:
    reports: list[PipelineReport]
    seconds: float


@pytest.fixture(scope="session")
def sweep():
    """Every form with r, s, t <= 4 and |rho| <= 6, compiled with per-stage oracle checks."""
    start = time.perf_counter()
    reports = [compile_form(f, check_stages=True) for f in sweep_forms(*SWEEP_BOUNDS)]
    return Sweep(reports, time.perf_counter() - start)


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        CRITERIA[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[n])

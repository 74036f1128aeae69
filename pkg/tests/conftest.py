import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dipolariton.model import reference_params  # noqa: E402

ROOT = Path(__file__).resolve().parents[1]
ACCEPTANCE_LINES = []


@pytest.fixture
def params():
    return reference_params()


@pytest.fixture
def lossless(params):
    return params.replace(kappa=0.0, gamma_dx=0.0, gamma_ix=0.0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

from pathlib import Path

import pytest
from hypothesis import settings

from ohyper import designs
from ohyper.io import parse_ohg

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

ACCEPTANCE_LINES: list[str] = []

# first eigen solve may pay for JIT loading
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture
def p3():
    return parse_ohg((FIXTURES / "p3.ohg").read_text())


@pytest.fixture
def fano():
    return designs.fano()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from homlie import load_fixture  # noqa: E402

ACCEPTANCE_LINES: list[str] = []

ALL_FIXTURES = ("abelian_1", "abelian_2", "abelian_3", "sl2", "heis3", "hsl2", "osp12", "hosp12", "c11", "sl21")
SIMPLE_FIXTURES = ("sl2", "hsl2", "osp12", "hosp12", "c11", "sl21")


@pytest.fixture(params=ALL_FIXTURES)
def any_fixture(request):
    return load_fixture(request.param)


@pytest.fixture(params=SIMPLE_FIXTURES)
def simple_fixture(request):
    return load_fixture(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

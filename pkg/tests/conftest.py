import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from auerbach_mvse import spaces  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_acceptance(number: int, passed: bool, detail: str) -> None:
    _ACCEPTANCE[number] = (passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        passed, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def l1_3():
    return spaces.make_lp_ball(3, "1")


@pytest.fixture(scope="session")
def linf_3():
    return spaces.make_lp_ball(3, "inf")


@pytest.fixture(scope="session")
def sum_zero():
    return spaces.sum_zero_space()


@pytest.fixture(scope="session")
def hexagon():
    return spaces.rational_hexagon_space()


@pytest.fixture(scope="session")
def hex_l1_line(hexagon):
    return spaces.make_l1_sum(hexagon, spaces.make_lp_ball(1, "1"))


@pytest.fixture(scope="session")
def hex_linf_line(hexagon):
    return spaces.make_linf_sum(hexagon, spaces.make_lp_ball(1, "inf"))


@pytest.fixture(scope="session")
def case_two_space():
    """Subspace of l_inf^5 whose identity basis needs the x1 <- x1 - c x2 normalization."""
    h = Fraction(1, 2)
    return spaces.make_linf_subspace(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1], [h, 1, 1], [-h, 1, 1]], name="case II"
    )

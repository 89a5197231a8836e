import pytest

from ecseq.curves import EdwardsCurve, WeierstrassCurve
from ecseq.field import smallest_nonsquare

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def c13():
    """Edwards curve u^2 + v^2 = 1 + 2 u^2 v^2 over F_13."""
    return EdwardsCurve(13, 1, 2)


@pytest.fixture
def w13():
    """The matching Weierstrass model y^2 = x^3 + 6x^2 + x over F_13."""
    return WeierstrassCurve.edwards_model(13, 2)


def edwards_for(p, c=1):
    return EdwardsCurve(p, c, smallest_nonsquare(p))

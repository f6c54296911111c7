import mpmath
import pytest


def mp_potential(n, beta, r, theta, dps=40):
    """Direct sum in extended precision, written independently of the library."""
    # never lower the precision an enclosing mpmath.diff has raised
    with mpmath.workdps(max(dps, mpmath.mp.dps)):
        r, theta, beta = mpmath.mpf(r), mpmath.mpf(theta), mpmath.mpf(beta)
        total = mpmath.mpf(0)
        for j in range(1, n + 1):
            d = 1 + r * r - 2 * r * mpmath.cos(2 * mpmath.pi * j / n - theta)
            total += d ** (-beta)
        return total


@pytest.fixture
def mp_u():
    return mp_potential


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

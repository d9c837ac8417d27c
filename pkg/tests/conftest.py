import math

import pytest

from debye_casimir.model import PlasmaParameters

LN2M1 = 2.0 * math.log(2.0) - 1.0


@pytest.fixture
def unit():
    """kappa = 1, beta = 1 plasma."""
    return PlasmaParameters.from_kappa(1.0, 1.0)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS, _line

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(_line(n, *RESULTS[n]))

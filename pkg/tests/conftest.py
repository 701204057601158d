import mpmath
import pytest


@pytest.fixture(autouse=True)
def _mp_precision():
    with mpmath.workdps(40):
        yield


def mp_beta(s):
    return mpmath.dirichlet(s, [0, 1, 0, -1])


def mp_xi(s, J, alternating=False):
    s = mpmath.mpf(s)

    def block(m):
        m = int(m)
        return (-1) ** m * mpmath.fsum(
            ((-1) ** j if alternating else 1) * (2 * J * m + 2 * j + 1) ** (-s) for j in range(J)
        )

    return mpmath.nsum(block, [0, mpmath.inf], method="alternating")

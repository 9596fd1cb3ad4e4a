import numpy as np
import pytest

from exceptional_z3.scalar import CycScalar, root_of_unity


def rand_scalar(rng, n=36, terms=3):
    """Random element of Q(zeta_n) as a small integer combination of roots of unity."""
    out = CycScalar(0, n)
    for _ in range(terms):
        out = out + root_of_unity(int(rng.integers(n)), n, n) * int(rng.integers(-3, 4))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)

import numpy as np
import pytest

from schubert.tolerances import DEFAULT_TOL


@pytest.fixture
def tol():
    return DEFAULT_TOL


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def e(k, n):
    """Standard basis vector (1-based index)."""
    v = np.zeros(n, dtype=np.complex128)
    v[k - 1] = 1.0
    return v

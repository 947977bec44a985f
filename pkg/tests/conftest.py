import numpy as np
import pytest

from qrev.channel import KrausChannel
from qrev.qstate import PAULIS


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def random_density(rng):
    def make():
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        rho = a @ a.conj().T
        return rho / np.trace(rho).real

    return make


@pytest.fixture
def random_unitary(rng):
    def make(dim=2):
        a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        q, r = np.linalg.qr(a)
        d = np.diag(r)
        return q * (d / np.abs(d))

    return make


def depolarizing(q):
    """Pauli-mixture channel with weights ordered as (I, Z, X, Y)."""
    i, x, y, z = PAULIS
    order = (i, z, x, y)
    return KrausChannel([np.sqrt(qk) * p for qk, p in zip(q, order) if qk > 0])

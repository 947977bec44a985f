"""Backend parity: the numba kernels must match the numpy fallbacks exactly."""

import numpy as np
import pytest

from qrev import kernels


def _random_kraus(rng, n):
    ops = rng.normal(size=(n, 2, 2)) + 1j * rng.normal(size=(n, 2, 2))
    total = sum(a.conj().T @ a for a in ops)
    scale = 1.0 / np.sqrt(np.linalg.eigvalsh(total).max())
    return kernels.kraus_stack([scale * a for a in ops])


def _random_states(rng, n):
    a = rng.normal(size=(n, 2, 2)) + 1j * rng.normal(size=(n, 2, 2))
    rho = np.einsum("sab,scb->sac", a, a.conj())
    tr = np.einsum("saa->s", rho).real
    return kernels.kraus_stack(rho / tr[:, None, None])


def test_backend_value():
    assert kernels.BACKEND in ("numba", "numpy")
    if kernels.HAS_NUMBA:
        assert kernels.BACKEND == "numba"
        assert kernels.fidelity_profile is kernels.fidelity_profile_numba
    else:
        assert kernels.fidelity_profile is kernels.fidelity_profile_numpy


def test_kraus_stack_layout(rng):
    ops = [rng.normal(size=(2, 2)) for _ in range(3)]
    stack = kernels.kraus_stack(ops)
    assert stack.shape == (3, 2, 2)
    assert stack.dtype == np.complex128
    assert stack.flags["C_CONTIGUOUS"]


@pytest.mark.skipif(not kernels.HAS_NUMBA, reason="numba not importable")
def test_fidelity_profile_parity(rng):
    for _ in range(5):
        e = _random_kraus(rng, rng.integers(1, 5))
        r = _random_kraus(rng, rng.integers(1, 5))
        states = _random_states(rng, 64)
        a = kernels.fidelity_profile_numpy(e, r, states)
        b = kernels.fidelity_profile_numba(e, r, states)
        np.testing.assert_allclose(a, b, atol=1e-13)


@pytest.mark.skipif(not kernels.HAS_NUMBA, reason="numba not importable")
def test_grid_scan_parity(rng):
    n = 48
    u = 2 * np.pi * np.arange(n) / n
    v = np.pi * np.arange(n) / n
    h = rng.normal(size=(24, 3))
    g = rng.normal(size=24)
    args = (h, g, np.cos(u), np.sin(u), np.cos(v), np.sin(v))
    best_a, iu_a, iv_a = kernels.grid_scan_numpy(*args)
    best_b, iu_b, iv_b = kernels.grid_scan_numba(*args)
    np.testing.assert_allclose(best_a, best_b, atol=1e-13)
    np.testing.assert_array_equal(iu_a, iu_b)
    np.testing.assert_array_equal(iv_a, iv_b)


@pytest.mark.skipif(not kernels.HAS_NUMBA, reason="numba not importable")
def test_reversal_objective_parity(rng):
    for _ in range(50):
        x = rng.uniform(-2 * np.pi, 2 * np.pi, size=8)
        gt = rng.normal(size=(3, 3))
        tf = rng.normal(size=3)
        a = kernels.reversal_objective_numpy(x, gt, tf)
        b = kernels.reversal_objective_numba(x, gt, tf)
        assert abs(a - b) <= 1e-13


def test_grid_scan_finds_known_maximum():
    # single frame, objective = cos(u): maximum at u = 0 for any v
    n = 32
    u = 2 * np.pi * np.arange(n) / n
    v = np.pi * np.arange(n) / n
    h = np.array([[1.0, 0.0, 0.0]])
    g = np.zeros(1)
    best, iu, iv = kernels.grid_scan(h, g, np.cos(u), np.sin(u), np.cos(v), np.sin(v))
    assert abs(best[0] - 1.0) <= 1e-15
    assert iu[0] == 0


def test_fidelity_profile_identity_channels(rng):
    eye = kernels.kraus_stack([np.eye(2)])
    states = _random_states(rng, 16)
    out = kernels.fidelity_profile(eye, eye, states)
    # tr(rho^2) = 1 for pure states; these are mixed, so just compare to direct formula
    direct = np.einsum("sab,sba->s", states, states).real
    np.testing.assert_allclose(out, direct, atol=1e-13)

import numpy as np
import pytest

from qrev import qstate as qs


def test_pure_state_poles():
    np.testing.assert_allclose(qs.pure_state(0.0, 0.0), np.diag([1.0, 0.0]), atol=1e-15)
    np.testing.assert_allclose(qs.pure_state(np.pi, 0.0), np.diag([0.0, 1.0]), atol=1e-15)


def test_pure_state_equator():
    np.testing.assert_allclose(
        qs.pure_state(np.pi / 2, 0.0), (qs.I2 + qs.SX) / 2, atol=1e-15
    )
    np.testing.assert_allclose(
        qs.pure_state(np.pi / 2, np.pi / 2), (qs.I2 + qs.SY) / 2, atol=1e-15
    )


def test_pure_state_is_projector(rng):
    for _ in range(20):
        theta = rng.uniform(0.0, np.pi)
        phi = rng.uniform(0.0, 2 * np.pi)
        rho = qs.pure_state(theta, phi)
        assert np.abs(rho @ rho - rho).max() <= 1e-12
        assert abs(np.trace(rho) - 1.0) <= 1e-14


def test_angle_validation():
    for theta, phi in ((-0.1, 0.0), (np.pi + 0.1, 0.0), (1.0, -0.1), (1.0, 2 * np.pi)):
        with pytest.raises(ValueError):
            qs.pure_state(theta, phi)


def test_bloch_vector_round_trip(rng):
    theta = rng.uniform(0.0, np.pi)
    phi = rng.uniform(0.0, 2 * np.pi)
    rho = qs.pure_state(theta, phi)
    n = qs.bloch_vector(rho)
    expected = [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
    np.testing.assert_allclose(n, expected, atol=1e-14)
    np.testing.assert_allclose(qs.state_from_bloch(n), rho, atol=1e-14)


def test_bell_states_explicit():
    s = 1 / np.sqrt(2)
    np.testing.assert_allclose(qs.bell_state("phi_plus"), [s, 0, 0, s], atol=1e-15)
    np.testing.assert_allclose(qs.bell_state("phi_minus"), [s, 0, 0, -s], atol=1e-15)
    np.testing.assert_allclose(qs.bell_state("psi_plus"), [0, s, s, 0], atol=1e-15)
    np.testing.assert_allclose(qs.bell_state("psi_minus"), [0, s, -s, 0], atol=1e-15)


def test_bell_states_orthonormal():
    basis = np.stack([qs.bell_state(l) for l in qs.BELL_LABELS])
    gram = basis.conj() @ basis.T
    assert np.abs(gram - np.eye(4)).max() <= 1e-14


def test_bell_projector():
    v = qs.bell_state("psi_minus")
    np.testing.assert_allclose(qs.bell_projector("psi_minus"), np.outer(v, v.conj()), atol=1e-15)


def test_bell_diagonal_pure_and_mixed():
    np.testing.assert_allclose(
        qs.bell_diagonal([1, 0, 0, 0]), qs.bell_projector("phi_plus"), atol=1e-15
    )
    np.testing.assert_allclose(
        qs.bell_diagonal([0.25] * 4), np.eye(4) / 4, atol=1e-15
    )


def test_bell_diagonal_spectrum(rng):
    q = rng.dirichlet(np.ones(4))
    chi = qs.bell_diagonal(q)
    vals = np.sort(np.linalg.eigvalsh(chi))
    np.testing.assert_allclose(vals, np.sort(q), atol=1e-12)


def test_bell_diagonal_marginals(rng):
    from qrev.linalg import partial_trace

    chi = qs.bell_diagonal(rng.dirichlet(np.ones(4)))
    for traced in ({0}, {1}):
        np.testing.assert_allclose(partial_trace(chi, [2, 2], traced), qs.I2 / 2, atol=1e-12)


def test_bell_diagonal_validation():
    with pytest.raises(ValueError):
        qs.bell_diagonal([0.5, 0.6, 0.0, 0.0])
    with pytest.raises(ValueError):
        qs.bell_diagonal([1.2, -0.2, 0.0, 0.0])


def test_isotropic_moments():
    # cos(theta) uniform on [-1, 1]: first moment 0, second moment 1/3
    angles = qs.isotropic_samples(1_000_000, seed=7)
    c = np.cos(angles[:, 0])
    assert abs(c.mean()) <= 0.005
    assert abs((c**2).mean() - 1 / 3) <= 0.005
    assert angles[:, 0].min() >= 0.0 and angles[:, 0].max() <= np.pi
    assert angles[:, 1].min() >= 0.0 and angles[:, 1].max() < 2 * np.pi


def test_isotropic_determinism():
    a = qs.isotropic_samples(100, seed=42)
    b = qs.isotropic_samples(100, seed=42)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, qs.isotropic_samples(100, seed=43))


def test_octahedral_nodes():
    angles, weights = qs.octahedral_quadrature()
    assert angles.shape == (6, 2)
    np.testing.assert_allclose(weights, np.full(6, 1 / 6), atol=1e-15)
    states = qs.states_from_angles(angles)
    nodes = np.stack([qs.bloch_vector(rho) for rho in states])
    expected = np.array(
        [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]], dtype=float
    )
    np.testing.assert_allclose(nodes, expected, atol=1e-14)


def test_octahedral_quadrature_moments():
    angles, weights = qs.octahedral_quadrature()
    states = qs.states_from_angles(angles)
    nodes = np.stack([qs.bloch_vector(rho) for rho in states])
    # degree-1 integrals vanish, degree-2 give delta_ab / 3
    np.testing.assert_allclose(weights @ nodes, np.zeros(3), atol=1e-15)
    second = np.einsum("s,sa,sb->ab", weights, nodes, nodes)
    np.testing.assert_allclose(second, np.eye(3) / 3, atol=1e-14)


def test_states_from_angles_are_pure():
    angles, _ = qs.octahedral_quadrature()
    for rho in qs.states_from_angles(angles):
        assert np.abs(rho @ rho - rho).max() <= 1e-12

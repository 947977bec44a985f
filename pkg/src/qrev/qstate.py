"""Single-qubit states, Bell states and sphere quadrature."""

from __future__ import annotations

import numpy as np

from .linalg import is_psd

I2 = np.eye(2, dtype=np.complex128)
SX = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SY = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SZ = np.array([[1, 0], [0, -1]], dtype=np.complex128)

# Order matters: indices 1..3 are the x, y, z images used throughout.
PAULIS = (I2, SX, SY, SZ)

BELL_LABELS = ("phi_plus", "phi_minus", "psi_plus", "psi_minus")

_SQ2 = np.sqrt(2.0)
_BELL_VECTORS = {
    "phi_plus": np.array([1, 0, 0, 1], dtype=np.complex128) / _SQ2,
    "phi_minus": np.array([1, 0, 0, -1], dtype=np.complex128) / _SQ2,
    "psi_plus": np.array([0, 1, 1, 0], dtype=np.complex128) / _SQ2,
    "psi_minus": np.array([0, 1, -1, 0], dtype=np.complex128) / _SQ2,
}

STATE_TOL = 1e-12


def check_angles(theta: float, phi: float) -> tuple[float, float]:
    """Validate polar/azimuthal Bloch angles (theta in [0, pi], phi in [0, 2pi))."""
    theta = float(theta)
    phi = float(phi)
    if not 0.0 <= theta <= np.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    if not 0.0 <= phi < 2.0 * np.pi:
        raise ValueError(f"phi must lie in [0, 2*pi), got {phi}")
    return theta, phi


def pure_state(theta: float, phi: float) -> np.ndarray:
    """Density matrix of cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>."""
    theta, phi = check_angles(theta, phi)
    ket = np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)], dtype=np.complex128)
    return np.outer(ket, ket.conj())


def bloch_vector(rho: np.ndarray) -> np.ndarray:
    """Bloch components (tr(sx rho), tr(sy rho), tr(sz rho)) as a real 3-vector."""
    rho = np.asarray(rho, dtype=np.complex128)
    return np.array([np.trace(p @ rho).real for p in PAULIS[1:]])


def state_from_bloch(n: np.ndarray) -> np.ndarray:
    """Density matrix (I + n . sigma)/2 for a Bloch vector with |n| <= 1."""
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise ValueError("Bloch vector must have 3 components")
    if np.linalg.norm(n) > 1.0 + STATE_TOL:
        raise ValueError("Bloch vector lies outside the unit ball")
    return (I2 + n[0] * SX + n[1] * SY + n[2] * SZ) / 2.0


def bell_state(label: str) -> np.ndarray:
    """One of the four Bell vectors in the |00>,|01>,|10>,|11> basis."""
    if label not in _BELL_VECTORS:
        raise ValueError(f"unknown Bell label {label!r}, expected one of {BELL_LABELS}")
    return _BELL_VECTORS[label].copy()


def bell_projector(label: str) -> np.ndarray:
    v = bell_state(label)
    return np.outer(v, v.conj())


def bell_diagonal(q) -> np.ndarray:
    """Mixture sum_k q_k P_k of the four Bell projectors in label order.

    The weights must be a probability vector (each in [0, 1], summing to 1
    within 1e-12).
    """
    q = np.asarray(q, dtype=float)
    if q.shape != (4,):
        raise ValueError("need exactly 4 weights")
    if q.min() < -STATE_TOL or q.max() > 1.0 + STATE_TOL:
        raise ValueError(f"weights must lie in [0, 1], got {q}")
    if abs(q.sum() - 1.0) > STATE_TOL:
        raise ValueError(f"weights must sum to 1, got sum {float(q.sum())}")
    out = np.zeros((4, 4), dtype=np.complex128)
    for qk, label in zip(q, BELL_LABELS):
        out += qk * bell_projector(label)
    return out


def is_density_matrix(rho: np.ndarray, tol: float = 1e-10) -> bool:
    rho = np.asarray(rho)
    return is_psd(rho, tol) and abs(np.trace(rho) - 1.0) <= tol


def isotropic_samples(n: int, seed: int) -> np.ndarray:
    """Draw ``n`` Haar-uniform pure-state angles, shape (n, 2) = (theta, phi).

    cos(theta) is uniform on [-1, 1] and phi uniform on [0, 2pi); the
    generator is numpy's default PCG64 stream seeded with ``seed``, so runs
    are reproducible across platforms.
    """
    if n < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    cos_theta = rng.uniform(-1.0, 1.0, size=n)
    phi = rng.uniform(0.0, 2.0 * np.pi, size=n)
    return np.column_stack([np.arccos(cos_theta), phi])


def octahedral_quadrature() -> tuple[np.ndarray, np.ndarray]:
    """Six-point sphere rule: the +-x, +-y, +-z axis states, weight 1/6 each.

    Returns (angles, weights) with angles shaped (6, 2) as (theta, phi) rows.
    Exact for polynomials of degree <= 2 in the Bloch components, which covers
    every average-fidelity integrand in this package.
    """
    half = np.pi / 2
    angles = np.array(
        [
            [half, 0.0],        # +x
            [half, np.pi],      # -x
            [half, half],       # +y
            [half, 3 * half],   # -y
            [0.0, 0.0],         # +z
            [np.pi, 0.0],       # -z
        ]
    )
    weights = np.full(6, 1.0 / 6.0)
    return angles, weights


def states_from_angles(angles: np.ndarray) -> np.ndarray:
    """Stack of density matrices, shape (n, 2, 2), for (theta, phi) rows."""
    angles = np.atleast_2d(np.asarray(angles, dtype=float))
    theta = angles[:, 0]
    phi = angles[:, 1]
    a = np.cos(theta / 2)
    b = np.exp(1j * phi) * np.sin(theta / 2)
    kets = np.stack([a.astype(np.complex128), b], axis=1)
    return np.einsum("ni,nj->nij", kets, kets.conj())

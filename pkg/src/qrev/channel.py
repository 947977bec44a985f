"""Qubit channels in Kraus, Choi and Bloch affine form.

Channels are stored as bare Kraus lists and may be trace-decreasing: a
measurement outcome keeps its probability inside the operator sum, so
``tr(apply(ch, rho))`` is the outcome probability rather than 1. The Choi
matrix convention is unnormalized, ``sum_jk |j><k| (x) E(|j><k|)`` (trace 2
for trace-preserving channels).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import dag, hermitian_eig, is_hermitian
from .qstate import PAULIS

KRAUS_SUM_TOL = 1e-10
TRACE_PRESERVING_TOL = 1e-10
CP_TOL = 1e-12
ANNIHILATION_TOL = 1e-14


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """A completely positive, trace-nonincreasing qubit map."""

    kraus: tuple[np.ndarray, ...]

    def __init__(self, kraus) -> None:
        ops = tuple(np.asarray(a, dtype=np.complex128) for a in kraus)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        for a in ops:
            if a.shape != (2, 2):
                raise ValueError(f"Kraus operators must be 2x2, got shape {a.shape}")
        excess = float(np.linalg.eigvalsh(_kraus_sum(ops)).max()) - 1.0
        if excess > KRAUS_SUM_TOL:
            raise ValueError(f"Kraus sum exceeds identity by {excess:.3e}; map would increase trace")
        object.__setattr__(self, "kraus", ops)

    @property
    def dim(self) -> int:
        return 2

    def kraus_sum(self) -> np.ndarray:
        """The operator sum_k A_k^dag A_k (== I for trace-preserving maps)."""
        return _kraus_sum(self.kraus)

    def is_trace_preserving(self, tol: float = TRACE_PRESERVING_TOL) -> bool:
        return bool(np.abs(self.kraus_sum() - np.eye(2)).max() <= tol)

    def scaled(self, s: float) -> "KrausChannel":
        """Channel with every Kraus operator multiplied by ``s`` (|s| <= 1 grows none)."""
        return KrausChannel(tuple(s * a for a in self.kraus))


def _kraus_sum(ops) -> np.ndarray:
    out = np.zeros((2, 2), dtype=np.complex128)
    for a in ops:
        out += dag(a) @ a
    return out


def identity_channel() -> KrausChannel:
    return KrausChannel((np.eye(2, dtype=np.complex128),))


def unitary_channel(u: np.ndarray) -> KrausChannel:
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (2, 2) or np.abs(dag(u) @ u - np.eye(2)).max() > KRAUS_SUM_TOL:
        raise ValueError("not a 2x2 unitary")
    return KrausChannel((u,))


PAULI_LABELS = ("I", "X", "Y", "Z")


def pauli_channel(label: str) -> KrausChannel:
    """Unitary conjugation by I, X, Y or Z."""
    try:
        idx = PAULI_LABELS.index(label)
    except ValueError:
        raise ValueError(f"unknown Pauli label {label!r}") from None
    return KrausChannel((PAULIS[idx],))


def apply(ch: KrausChannel, rho: np.ndarray) -> np.ndarray:
    """Operator-sum action sum_k A_k rho A_k^dag (possibly trace-decreasing)."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (2, 2):
        raise ValueError(f"input state must be 2x2, got {rho.shape}")
    out = np.zeros((2, 2), dtype=np.complex128)
    for a in ch.kraus:
        out += a @ rho @ dag(a)
    return out


def apply_normalized(ch: KrausChannel, rho: np.ndarray) -> tuple[np.ndarray, float]:
    """Normalized output state and the outcome probability tr(E(rho)).

    Raises when the channel annihilates the input (probability <= 1e-14),
    since no conditional state exists in that case.
    """
    out = apply(ch, rho)
    prob = float(np.trace(out).real)
    if prob <= ANNIHILATION_TOL:
        raise ValueError(f"channel annihilates this input (probability {prob:.3e})")
    return out / prob, prob


def compose(after: KrausChannel, before: KrausChannel) -> KrausChannel:
    """The map rho -> after(before(rho)); Kraus list is all products B_n A_m."""
    ops = tuple(b @ a for b in after.kraus for a in before.kraus)
    return KrausChannel(ops)


def choi_of(ch: KrausChannel) -> np.ndarray:
    """Unnormalized Choi matrix sum_jk |j><k| (x) E(|j><k|).

    Equivalently sum_k vec(A_k) vec(A_k)^dag with column-stacking vec, so the
    matrix is PSD with rank = number of independent Kraus operators.
    """
    c = np.zeros((4, 4), dtype=np.complex128)
    for a in ch.kraus:
        v = a.T.reshape(-1)  # v[(j, out)] = A[out, j]
        c += np.outer(v, v.conj())
    return c


def kraus_from_choi(choi: np.ndarray, tol: float = CP_TOL) -> KrausChannel:
    """Extract a Kraus representation from an unnormalized Choi matrix.

    Eigenvalues in [-tol, tol] are discarded, so the result has at most 4 and
    typically fewer operators. A Hermiticity defect or an eigenvalue below
    -tol means the matrix is not a channel and raises.
    """
    c = np.asarray(choi, dtype=np.complex128)
    if c.shape != (4, 4):
        raise ValueError(f"Choi matrix must be 4x4, got {c.shape}")
    if not is_hermitian(c, tol):
        raise ValueError("Choi matrix is not Hermitian within tolerance")
    vals, vecs = hermitian_eig(c, tol)
    if float(vals.min()) < -tol:
        raise ValueError(f"Choi matrix has negative eigenvalue {vals.min():.3e}; map is not CP")
    ops = []
    for lam, v in zip(vals, vecs.T):
        if lam > tol:
            ops.append(np.sqrt(lam) * v.reshape(2, 2).T)
    if not ops:
        raise ValueError("Choi matrix is numerically zero; no channel to extract")
    return KrausChannel(tuple(ops))


@dataclass(frozen=True, eq=False)
class BlochAffineMap:
    """Affine action r -> m @ r + c of a trace-preserving qubit map."""

    m: np.ndarray
    c: np.ndarray

    def __init__(self, m, c) -> None:
        m = np.asarray(m, dtype=float)
        c = np.asarray(c, dtype=float)
        if m.shape != (3, 3) or c.shape != (3,):
            raise ValueError("affine map needs a 3x3 matrix and a 3-vector")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "c", c)

    def __call__(self, r: np.ndarray) -> np.ndarray:
        return self.m @ np.asarray(r, dtype=float) + self.c


def bloch_affine_of(ch: KrausChannel, tol: float = TRACE_PRESERVING_TOL) -> BlochAffineMap:
    """Bloch affine form of a trace-preserving channel.

    m[j, k] = tr(sigma_j E(sigma_k)) / 2 and c[j] = tr(sigma_j E(I)) / 2.
    Trace-decreasing maps have no affine form on states and raise.
    """
    if not ch.is_trace_preserving(tol):
        raise ValueError("channel is not trace preserving; Bloch affine form undefined")
    images = [apply(ch, p) for p in PAULIS]
    c = np.array([np.trace(s @ images[0]).real / 2 for s in PAULIS[1:]])
    m = np.array([[np.trace(s @ images[k + 1]).real / 2 for k in range(3)] for s in PAULIS[1:]])
    return BlochAffineMap(m, c)


def adjoint_pauli_image(ch: KrausChannel) -> list[np.ndarray]:
    """Heisenberg-picture images [sum B+ B, sum B+ sx B, sum B+ sy B, sum B+ sz B]."""
    out = []
    for p in PAULIS:
        acc = np.zeros((2, 2), dtype=np.complex128)
        for b in ch.kraus:
            acc += dag(b) @ p @ b
        out.append(acc)
    return out


def channel_distance(a: KrausChannel, b: KrausChannel) -> float:
    """Spectral norm (largest |eigenvalue|) of the Choi matrix difference.

    Zero exactly when the two Kraus sets describe the same map; insensitive
    to Kraus gauge (phases, recombinations).
    """
    diff = choi_of(a) - choi_of(b)
    return float(np.abs(np.linalg.eigvalsh(diff)).max())

"""Dense linear algebra helpers for few-qubit operators.

Everything works on plain complex ndarrays. Operator dimensions are capped at
2, 4 and 8 (one to three qubits), which is all the rest of the package needs;
the cap is enforced where operators are combined so shape bugs surface early.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

# Default tolerances. Callers can override per call; these values are pinned
# by the test suite.
HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-12
RECONSTRUCTION_TOL = 1e-10

ALLOWED_DIMS = (2, 4, 8)


def as_operator(m: np.ndarray, name: str = "operator") -> np.ndarray:
    """Coerce ``m`` to a square complex128 array of an allowed dimension."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {a.shape}")
    if a.shape[0] not in ALLOWED_DIMS:
        raise ValueError(f"{name} dimension must be one of {ALLOWED_DIMS}, got {a.shape[0]}")
    return a


def dag(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def tensor(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of square operators, left factor most significant.

    The resulting dimension must stay within the three-qubit cap of 8.
    """
    if not factors:
        raise ValueError("tensor requires at least one factor")
    mats = [as_operator(f, f"tensor factor {i}") for i, f in enumerate(factors)]
    dim = int(np.prod([m.shape[0] for m in mats]))
    if dim > 8:
        raise ValueError(f"tensor result dimension {dim} exceeds the supported maximum 8")
    out = mats[0]
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def partial_trace(
    m: np.ndarray,
    subsystem_dims: Sequence[int],
    traced: Iterable[int],
) -> np.ndarray:
    """Trace out the listed subsystem factors of ``m``.

    Parameters
    ----------
    m : square matrix on the tensor product of ``subsystem_dims`` factors.
    subsystem_dims : dimension of each factor, most significant first.
    traced : zero-based indices of the factors to trace out.

    Returns the reduced operator on the remaining factors, in their original
    order. The total trace is preserved.
    """
    a = np.asarray(m, dtype=np.complex128)
    dims = list(subsystem_dims)
    n = len(dims)
    total = int(np.prod(dims))
    if a.ndim != 2 or a.shape != (total, total):
        raise ValueError(f"matrix shape {a.shape} does not match subsystem dims {dims}")
    traced_set = set(int(i) for i in traced)
    if not traced_set:
        raise ValueError("no subsystems to trace out")
    if any(i < 0 or i >= n for i in traced_set):
        raise ValueError(f"traced indices {sorted(traced_set)} out of range for {n} subsystems")
    # tracing every factor degenerates to the scalar trace, returned as 1x1

    # Reshape to one (row, col) index pair per factor, then contract the
    # traced pairs with einsum.
    t = a.reshape(dims + dims)
    row = list(range(n))
    col = list(range(n, 2 * n))
    for i in traced_set:
        col[i] = row[i]
    kept = [i for i in range(n) if i not in traced_set]
    out_idx = [row[i] for i in kept] + [col[i] for i in kept]
    reduced = np.einsum(t, row + col, out_idx)
    d_kept = int(np.prod([dims[i] for i in kept]))
    return reduced.reshape(d_kept, d_kept)


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    a = np.asarray(m)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and np.abs(a - dag(a)).max() <= tol


def hermitian_eig(m: np.ndarray, tol: float = HERMITIAN_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(values, vectors)`` with real eigenvalues sorted in descending
    order and ``vectors[:, k]`` the eigenvector for ``values[k]``.
    """
    a = np.asarray(m, dtype=np.complex128)
    if not is_hermitian(a, tol):
        raise ValueError("matrix is not Hermitian within tolerance")
    vals, vecs = np.linalg.eigh(a)
    order = np.argsort(vals)[::-1]
    return vals[order].real, vecs[:, order]


def is_psd(m: np.ndarray, tol: float = PSD_TOL) -> bool:
    """True when ``m`` is Hermitian and its eigenvalues are >= -tol."""
    a = np.asarray(m)
    if not is_hermitian(a, max(tol, HERMITIAN_TOL)):
        return False
    return float(np.linalg.eigvalsh(a).min()) >= -tol


def psd_sqrt(m: np.ndarray, tol: float = PSD_TOL) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in [-tol, 0) are clipped to zero; anything lower is an error.
    """
    a = np.asarray(m, dtype=np.complex128)
    if not is_hermitian(a, max(tol, HERMITIAN_TOL)):
        raise ValueError("psd_sqrt needs a Hermitian matrix")
    vals, vecs = np.linalg.eigh(a)
    if float(vals.min()) < -tol:
        raise ValueError(f"matrix has negative eigenvalue {vals.min():.3e}, not PSD")
    root = np.sqrt(np.clip(vals, 0.0, None))
    return (vecs * root) @ dag(vecs)

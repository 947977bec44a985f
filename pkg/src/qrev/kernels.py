"""Hot numeric kernels, in two flavors: numba @njit and pure numpy.

The environment variable QREV_BACKEND picks the path at import time:

  auto   use numba when importable, numpy otherwise (default)
  numba  require numba, fail loudly if missing
  numpy  force the pure-numpy fallback

Both implementations are importable side by side (``*_numpy`` and ``*_numba``)
so the benchmark and the parity tests can compare them on identical inputs.
"""

from __future__ import annotations

import os

import numpy as np

_choice = os.environ.get("QREV_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(f"QREV_BACKEND must be auto, numba or numpy, got {_choice!r}")

HAS_NUMBA = False
if _choice in ("auto", "numba"):
    try:
        from numba import njit

        HAS_NUMBA = True
    except ImportError:
        if _choice == "numba":
            raise ImportError("QREV_BACKEND=numba but numba is not importable")

BACKEND = "numba" if HAS_NUMBA else "numpy"


def kraus_stack(ops) -> np.ndarray:
    """Contiguous (k, 2, 2) complex128 stack from a Kraus operator iterable."""
    return np.ascontiguousarray(np.stack([np.asarray(a, dtype=np.complex128) for a in ops]))


# --- fidelity profile: f[s] = Re tr( rho_s * R(E(rho_s)) ) --------------------

def fidelity_profile_numpy(kraus_e: np.ndarray, kraus_r: np.ndarray, states: np.ndarray) -> np.ndarray:
    x = np.einsum("kab,sbc,kdc->sad", kraus_e, states, kraus_e.conj())
    y = np.einsum("kab,sbc,kdc->sad", kraus_r, x, kraus_r.conj())
    return np.einsum("sab,sba->s", states, y).real


if HAS_NUMBA:

    @njit(cache=True)
    def _fidelity_profile_jit(kraus_e, kraus_r, states, out):  # pragma: no cover
        ne = kraus_e.shape[0]
        nr = kraus_r.shape[0]
        for s in range(states.shape[0]):
            r00 = states[s, 0, 0]
            r01 = states[s, 0, 1]
            r10 = states[s, 1, 0]
            r11 = states[s, 1, 1]
            # x = E(rho), unrolled 2x2 complex arithmetic
            x00 = 0.0 + 0.0j
            x01 = 0.0 + 0.0j
            x10 = 0.0 + 0.0j
            x11 = 0.0 + 0.0j
            for k in range(ne):
                a00 = kraus_e[k, 0, 0]
                a01 = kraus_e[k, 0, 1]
                a10 = kraus_e[k, 1, 0]
                a11 = kraus_e[k, 1, 1]
                y00 = a00 * r00 + a01 * r10
                y01 = a00 * r01 + a01 * r11
                y10 = a10 * r00 + a11 * r10
                y11 = a10 * r01 + a11 * r11
                x00 += y00 * np.conj(a00) + y01 * np.conj(a01)
                x01 += y00 * np.conj(a10) + y01 * np.conj(a11)
                x10 += y10 * np.conj(a00) + y11 * np.conj(a01)
                x11 += y10 * np.conj(a10) + y11 * np.conj(a11)
            # z = R(x)
            z00 = 0.0 + 0.0j
            z01 = 0.0 + 0.0j
            z10 = 0.0 + 0.0j
            z11 = 0.0 + 0.0j
            for k in range(nr):
                b00 = kraus_r[k, 0, 0]
                b01 = kraus_r[k, 0, 1]
                b10 = kraus_r[k, 1, 0]
                b11 = kraus_r[k, 1, 1]
                y00 = b00 * x00 + b01 * x10
                y01 = b00 * x01 + b01 * x11
                y10 = b10 * x00 + b11 * x10
                y11 = b10 * x01 + b11 * x11
                z00 += y00 * np.conj(b00) + y01 * np.conj(b01)
                z01 += y00 * np.conj(b10) + y01 * np.conj(b11)
                z10 += y10 * np.conj(b00) + y11 * np.conj(b01)
                z11 += y10 * np.conj(b10) + y11 * np.conj(b11)
            out[s] = (r00 * z00 + r01 * z10 + r10 * z01 + r11 * z11).real

    def fidelity_profile_numba(kraus_e: np.ndarray, kraus_r: np.ndarray, states: np.ndarray) -> np.ndarray:
        out = np.empty(states.shape[0])
        _fidelity_profile_jit(kraus_e, kraus_r, states, out)
        return out

else:
    fidelity_profile_numba = None


# --- extremal objective grid scan ---------------------------------------------
# objective(u, v) = h1 cos u + h2 cos v + h3 cos u cos v + g sin u sin v,
# scanned per frame; returns the best value and grid indices for each frame.

def grid_scan_numpy(h, g, cos_u, sin_u, cos_v, sin_v):
    vals = (
        h[:, 0, None, None] * cos_u[None, :, None]
        + h[:, 1, None, None] * cos_v[None, None, :]
        + h[:, 2, None, None] * (cos_u[None, :, None] * cos_v[None, None, :])
        + g[:, None, None] * (sin_u[None, :, None] * sin_v[None, None, :])
    )
    flat = vals.reshape(h.shape[0], -1)
    idx = np.argmax(flat, axis=1)
    best = flat[np.arange(h.shape[0]), idx]
    iu, iv = np.unravel_index(idx, (cos_u.size, cos_v.size))
    return best, iu.astype(np.int64), iv.astype(np.int64)


if HAS_NUMBA:

    @njit(cache=True)
    def _grid_scan_jit(h, g, cos_u, sin_u, cos_v, sin_v, best, iu, iv):  # pragma: no cover
        for f in range(h.shape[0]):
            h1 = h[f, 0]
            h2 = h[f, 1]
            h3 = h[f, 2]
            gg = g[f]
            hi = -1e300
            bi = 0
            bj = 0
            for i in range(cos_u.shape[0]):
                cu = cos_u[i]
                su = sin_u[i]
                for j in range(cos_v.shape[0]):
                    val = h1 * cu + h2 * cos_v[j] + h3 * cu * cos_v[j] + gg * su * sin_v[j]
                    if val > hi:
                        hi = val
                        bi = i
                        bj = j
            best[f] = hi
            iu[f] = bi
            iv[f] = bj

    def grid_scan_numba(h, g, cos_u, sin_u, cos_v, sin_v):
        nf = h.shape[0]
        best = np.empty(nf)
        iu = np.empty(nf, dtype=np.int64)
        iv = np.empty(nf, dtype=np.int64)
        _grid_scan_jit(h, g, cos_u, sin_u, cos_v, sin_v, best, iu, iv)
        return best, iu, iv

else:
    grid_scan_numba = None


# --- refinement objective -------------------------------------------------------
# Same objective as the grid scan but with both rotations free:
#   value(x) = sum_j d_j (E2 gt E1)_jj + (sin u sin v) * sum_a E1[a, 2] tf[a]
# with d = (cos u, cos v, cos u cos v), E1 = zyz(x[2:5]), E2 = zyz(x[5:8]),
# gt the frame-conjugated transposed coefficient matrix and tf the frame-rotated
# offset coefficients.  Negated so minimizers can consume it directly.

def _euler_rows(a, b, c):
    ca, sa = np.cos(a), np.sin(a)
    cb, sb = np.cos(b), np.sin(b)
    cc, sc = np.cos(c), np.sin(c)
    return np.array(
        [
            [ca * cb * cc - sa * sc, -ca * cb * sc - sa * cc, ca * sb],
            [sa * cb * cc + ca * sc, -sa * cb * sc + ca * cc, sa * sb],
            [-sb * cc, sb * sc, cb],
        ]
    )


def reversal_objective_numpy(x, gt, tf) -> float:
    e1 = _euler_rows(x[2], x[3], x[4])
    e2 = _euler_rows(x[5], x[6], x[7])
    hh = np.einsum("ja,ab,bj->j", e2, gt, e1)
    gg = e1[0, 2] * tf[0] + e1[1, 2] * tf[1] + e1[2, 2] * tf[2]
    cu, su = np.cos(x[0]), np.sin(x[0])
    cv, sv = np.cos(x[1]), np.sin(x[1])
    return -(hh[0] * cu + hh[1] * cv + hh[2] * cu * cv + gg * su * sv)


if HAS_NUMBA:

    @njit(cache=True)
    def _reversal_objective_jit(x, gt, tf):  # pragma: no cover
        e1 = np.empty((3, 3))
        e2 = np.empty((3, 3))
        for off, e in ((2, e1), (5, e2)):
            ca, sa = np.cos(x[off]), np.sin(x[off])
            cb, sb = np.cos(x[off + 1]), np.sin(x[off + 1])
            cc, sc = np.cos(x[off + 2]), np.sin(x[off + 2])
            e[0, 0] = ca * cb * cc - sa * sc
            e[0, 1] = -ca * cb * sc - sa * cc
            e[0, 2] = ca * sb
            e[1, 0] = sa * cb * cc + ca * sc
            e[1, 1] = -sa * cb * sc + ca * cc
            e[1, 2] = sa * sb
            e[2, 0] = -sb * cc
            e[2, 1] = sb * sc
            e[2, 2] = cb
        h0 = 0.0
        h1 = 0.0
        h2 = 0.0
        for a in range(3):
            for b in range(3):
                h0 += e2[0, a] * gt[a, b] * e1[b, 0]
                h1 += e2[1, a] * gt[a, b] * e1[b, 1]
                h2 += e2[2, a] * gt[a, b] * e1[b, 2]
        gg = e1[0, 2] * tf[0] + e1[1, 2] * tf[1] + e1[2, 2] * tf[2]
        cu, su = np.cos(x[0]), np.sin(x[0])
        cv, sv = np.cos(x[1]), np.sin(x[1])
        return -(h0 * cu + h1 * cv + h2 * cu * cv + gg * su * sv)

    def reversal_objective_numba(x, gt, tf) -> float:
        return _reversal_objective_jit(x, gt, tf)

else:
    reversal_objective_numba = None


if BACKEND == "numba":
    fidelity_profile = fidelity_profile_numba
    grid_scan = grid_scan_numba
    reversal_objective = reversal_objective_numba
else:
    fidelity_profile = fidelity_profile_numpy
    grid_scan = grid_scan_numpy
    reversal_objective = reversal_objective_numpy

"""Teleportation schemes on three qubits and the channels they induce.

Wire layout: the unknown input state sits on wire 3, the two-qubit resource
state chi on wires 2 and 3 of the receiving side, and the sender measures
wires 1 and 2. Basis order is |abc> with wire 1 most significant. The channel
seen by the receiver for measurement outcome i is computed from the swap
identity: conjugating (counterpart of chi on wires 1,2) (x) (input on wire 3)
by the 1<->3 swap reproduces (input on wire 1) (x) (chi on wires 2,3), which
turns the outcome-i measurement sandwich into an operator sum on wire 3 alone.

Induced channels are stored trace-decreasing: tr(E_i(rho)) is the probability
of outcome i for input rho. Outcomes are numbered from 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import dag, hermitian_eig, is_psd, partial_trace, psd_sqrt, tensor
from .qstate import I2, PAULIS, BELL_LABELS, bell_projector, bell_diagonal, bell_state
from .channel import KrausChannel

POVM_COMPLETENESS_TOL = 1e-10
EIGENVALUE_CUTOFF = 1e-12
KRAUS_NORM_CUTOFF = 1e-12
BASIS_TOL = 1e-12

_SWAP2 = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128
)


def swap_13() -> np.ndarray:
    """The 8x8 permutation |abc> -> |cba> exchanging wires 1 and 3."""
    u = np.zeros((8, 8), dtype=np.complex128)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                u[4 * c + 2 * b + a, 4 * a + 2 * b + c] = 1.0
    return u


def counterpart_12(chi23: np.ndarray) -> np.ndarray:
    """Reindex a two-qubit operator from wires (2,3) to wires (1,2).

    Under the 1<->3 swap the factor order reverses, so the counterpart is the
    swap-conjugated matrix. For swap-symmetric states (Bell mixtures, the
    singlet) this is numerically the input itself.
    """
    chi = np.asarray(chi23, dtype=np.complex128)
    if chi.shape != (4, 4):
        raise ValueError(f"resource operator must be 4x4, got {chi.shape}")
    return _SWAP2 @ chi @ _SWAP2


@dataclass(frozen=True, eq=False)
class TeleportScheme:
    """Resource state, sender POVM and the trace basis used for extraction.

    povm[i][j] is the j-th sub-operator of outcome i (operators Pi with
    sum_ij Pi^dag Pi = I on wires 1,2). ``trace_basis`` holds four orthonormal
    row vectors; the induced Kraus operators are matrix elements against them,
    and any orthonormal choice yields the same channel.
    """

    chi23: np.ndarray
    povm: tuple[tuple[np.ndarray, ...], ...]
    trace_basis: np.ndarray

    def __init__(self, chi23, povm, trace_basis) -> None:
        chi = np.asarray(chi23, dtype=np.complex128)
        if chi.shape != (4, 4) or not is_psd(chi, 1e-10) or abs(np.trace(chi).real - 1.0) > 1e-10:
            raise ValueError("resource state must be a 4x4 density matrix")
        ops = tuple(
            tuple(np.asarray(p, dtype=np.complex128) for p in outcome) for outcome in povm
        )
        if not ops or any(not outcome for outcome in ops):
            raise ValueError("each POVM outcome needs at least one operator")
        total = np.zeros((4, 4), dtype=np.complex128)
        for outcome in ops:
            for p in outcome:
                if p.shape != (4, 4):
                    raise ValueError("POVM operators must be 4x4")
                total += dag(p) @ p
        if np.abs(total - np.eye(4)).max() > POVM_COMPLETENESS_TOL:
            raise ValueError("POVM is not complete: sum Pi^dag Pi != I")
        basis = np.asarray(trace_basis, dtype=np.complex128)
        if basis.shape != (4, 4):
            raise ValueError("trace basis must be 4 row vectors of length 4")
        gram = basis @ dag(basis)
        if np.abs(gram - np.eye(4)).max() > BASIS_TOL:
            raise ValueError("trace basis rows are not orthonormal")
        object.__setattr__(self, "chi23", chi)
        object.__setattr__(self, "povm", ops)
        object.__setattr__(self, "trace_basis", basis)

    @property
    def n_outcomes(self) -> int:
        return len(self.povm)


@dataclass(frozen=True, eq=False)
class InducedChannel:
    """Outcome-conditioned channel plus its input-averaged probability."""

    outcome: int
    channel: KrausChannel
    mean_outcome_probability: float


def bell_scheme(q) -> TeleportScheme:
    """Bell measurement with a Bell-diagonal resource of weights ``q``.

    Outcome i projects onto the i-th Bell state (label order phi+, phi-,
    psi+, psi-); the trace basis is the Bell basis.
    """
    chi = bell_diagonal(q)
    povm = tuple((bell_projector(label),) for label in BELL_LABELS)
    basis = np.stack([bell_state(label) for label in BELL_LABELS])
    return TeleportScheme(chi, povm, basis)


def imperfect_scheme(mu: float) -> TeleportScheme:
    """Singlet resource with a two-operator imperfect first outcome.

    The sender's outcome-1 operators interpolate with the control angle mu in
    [0, pi/2]: one is (sin mu/sqrt2)|11><11|, the other projects onto
    (cos mu |01> - |10>) with the matching normalization. Outcome 2 is the
    completeness remainder (I - sum Pi^dag Pi)^(1/2). The trace basis rotates
    with mu so the outcome-1 Kraus operators stay sparse.
    """
    mu = float(mu)
    if not 0.0 <= mu <= np.pi / 2:
        raise ValueError(f"mu must lie in [0, pi/2], got {mu}")
    chi = bell_projector("psi_minus")
    c = np.cos(mu)
    s = np.sin(mu)
    norm = np.sqrt(1.0 + c * c)

    e01 = np.zeros(4, dtype=np.complex128)
    e01[1] = 1.0
    e10 = np.zeros(4, dtype=np.complex128)
    e10[2] = 1.0
    e00 = np.zeros(4, dtype=np.complex128)
    e00[0] = 1.0
    e11 = np.zeros(4, dtype=np.complex128)
    e11[3] = 1.0

    w = c * e01 - e10
    pi_11 = (s / np.sqrt(2.0)) * np.outer(e11, e11.conj())
    pi_12 = np.outer(w, w.conj()) / (np.sqrt(2.0) * norm)
    outcome1 = (pi_11, pi_12)

    partial = sum(dag(p) @ p for p in outcome1)
    rest = psd_sqrt(np.eye(4, dtype=np.complex128) - partial)
    outcome2 = (rest,)

    basis = np.stack([e00, (e01 + c * e10) / norm, (c * e01 - e10) / norm, e11])
    return TeleportScheme(chi, (outcome1, outcome2), basis)


def _check_outcome(scheme: TeleportScheme, outcome: int) -> int:
    outcome = int(outcome)
    if not 1 <= outcome <= scheme.n_outcomes:
        raise ValueError(f"outcome must be in 1..{scheme.n_outcomes}, got {outcome}")
    return outcome


def induced_channel(
    scheme: TeleportScheme,
    outcome: int,
    cutoff: float = EIGENVALUE_CUTOFF,
) -> InducedChannel:
    """Kraus operators of the receiver's channel for one measurement outcome.

    Each operator is sqrt(q_k) <P_l| (Pi_j (x) I) U |s_k> as a 2x2 matrix on
    wire 3, where (q_k, s_k) eigendecomposes the resource counterpart on wires
    1,2, P_l runs over the trace basis, and U is the 1<->3 swap. Eigenvalues
    below ``cutoff`` are skipped and operators with Frobenius norm below
    1e-12 are dropped. The stored channel keeps the outcome probability in
    its trace; the input-averaged probability is tr(sum A^dag A)/2.
    """
    outcome = _check_outcome(scheme, outcome)
    vals, vecs = hermitian_eig(counterpart_12(scheme.chi23))
    u = swap_13()
    ops = []
    for p in scheme.povm[outcome - 1]:
        w4 = (tensor(p, I2) @ u).reshape(4, 2, 4, 2)
        for qk, sk in zip(vals, vecs.T):
            if qk <= cutoff:
                continue
            root = np.sqrt(qk)
            for pl in scheme.trace_basis:
                a = root * np.einsum("p,paqb,q->ab", pl.conj(), w4, sk)
                if np.linalg.norm(a) >= KRAUS_NORM_CUTOFF:
                    ops.append(a)
    if not ops:
        raise ValueError(f"outcome {outcome} induces the zero map")
    ch = KrausChannel(tuple(ops))
    weight = float(np.trace(ch.kraus_sum()).real) / 2.0
    return InducedChannel(outcome, ch, weight)


def t_operators(scheme: TeleportScheme, outcome: int) -> list[np.ndarray]:
    """Wire-3 operators [T0, Tx, Ty, Tz] carrying the outcome's statistics.

    T_a traces the outcome's measurement weight sum_j Pi_j^dag Pi_j (on wires
    1,2, padded on wire 3) against sigma_a on wire 1 tensored with the
    resource on wires 2,3; T0 uses the identity instead of sigma_a. These are
    exactly the Heisenberg data of the induced channel: T0 = E_i(I) and
    T_a = E_i(sigma_a), and tr(T0) = 2 * mean outcome probability.
    """
    outcome = _check_outcome(scheme, outcome)
    g = np.zeros((4, 4), dtype=np.complex128)
    for p in scheme.povm[outcome - 1]:
        g += dag(p) @ p
    g_padded = tensor(g, I2)
    out = []
    for sigma in PAULIS:
        full = g_padded @ tensor(sigma, scheme.chi23)
        out.append(partial_trace(full, [2, 2, 2], {0, 1}))
    return out


CANNED_SCHEMES = ("bell", "imperfect")


def canned_scheme(name: str, q=None, mu=None) -> TeleportScheme:
    """Build one of the named schemes; ``bell`` needs weights, ``imperfect`` mu."""
    if name == "bell":
        if q is None:
            raise ValueError("scheme 'bell' requires the four Bell weights q")
        return bell_scheme(q)
    if name == "imperfect":
        if mu is None:
            raise ValueError("scheme 'imperfect' requires the control angle mu")
        return imperfect_scheme(mu)
    raise ValueError(f"unknown scheme {name!r}, expected one of {CANNED_SCHEMES}")

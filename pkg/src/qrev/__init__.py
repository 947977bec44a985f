"""Teleportation-induced qubit channels and their optimal approximate reversal."""

from .channel import (
    BlochAffineMap,
    KrausChannel,
    adjoint_pauli_image,
    apply,
    apply_normalized,
    bloch_affine_of,
    channel_distance,
    choi_of,
    compose,
    identity_channel,
    kraus_from_choi,
    pauli_channel,
    unitary_channel,
)
from .kernels import BACKEND
from .linalg import hermitian_eig, is_psd, partial_trace, tensor
from .qstate import (
    bell_diagonal,
    bell_state,
    isotropic_samples,
    octahedral_quadrature,
    pure_state,
)
from .reversal import (
    ExtremalParams,
    ReversalResult,
    StationaryPoint,
    avg_fidelity_analytic,
    avg_fidelity_closed_form,
    avg_fidelity_mc,
    avg_fidelity_quadrature,
    channel_from_affine,
    extremal_channel,
    optimal_unitary,
    optimize_reversal,
    stationary_nonunitary,
    t_operators_of_channel,
    t_vector,
    weights_from_t,
)
from .teleport import (
    InducedChannel,
    TeleportScheme,
    bell_scheme,
    counterpart_12,
    imperfect_scheme,
    induced_channel,
    swap_13,
    t_operators,
)

__version__ = "0.1.0"

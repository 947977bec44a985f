"""Compare the numba and numpy kernel backends on representative workloads.

Run with ``python3 benchmarks/bench_kernels.py``. Workload sizes mirror how
the package actually calls each kernel: the 6-state quadrature profile is
invoked hundreds of thousands of times by grid comparisons, the large-state
profile once per Monte Carlo estimate, the grid scan and the refinement
objective many times per optimizer call.
"""

import argparse
import time

import numpy as np

from qrev import kernels
from qrev.qstate import isotropic_samples, octahedral_quadrature, states_from_angles
from qrev.reversal import (
    ExtremalParams,
    extremal_channel,
    fidelity_coefficients,
    signed_permutation_rotations,
)
from qrev.teleport import bell_scheme, induced_channel, t_operators


def _workloads(mc_states: int):
    q = np.array([0.55, 0.2, 0.15, 0.1])
    scheme = bell_scheme(q)
    ke = kernels.kraus_stack(induced_channel(scheme, 1).channel.kraus)
    kr = kernels.kraus_stack(extremal_channel(ExtremalParams(0.7, 1.1)).kraus)
    quad_states = states_from_angles(octahedral_quadrature()[0])
    mc = states_from_angles(isotropic_samples(mc_states, seed=3))

    # the same per-frame coefficient fold the optimizer performs
    _, tau, g = fidelity_coefficients(t_operators(scheme, 1))
    frames = signed_permutation_rotations()
    h = np.stack([np.diag(p.T @ g.T @ p) for p in frames])
    gc = np.array([(p.T @ tau)[2] for p in frames])
    u_grid = 2.0 * np.pi * np.arange(32) / 32
    v_grid = np.pi * np.arange(32) / 32
    x = np.array([0.7, 1.1, 0.3, -0.4, 0.9, 0.2, -1.3, 0.5])
    gt = np.ascontiguousarray(g.T)

    return [
        ("fidelity profile, 6 states", (ke, kr, quad_states), 20000),
        (f"fidelity profile, {mc_states} states", (ke, kr, mc), 20),
        (
            "grid scan, 24 frames x 32x32",
            (h, gc, np.cos(u_grid), np.sin(u_grid), np.cos(v_grid), np.sin(v_grid)),
            2000,
        ),
        ("refinement objective", (x, gt, tau), 20000),
    ]


def _time_per_call(fn, args, repeats: int) -> float:
    fn(*args)  # warm up (jit compile on the numba side)
    start = time.perf_counter()
    for _ in range(repeats):
        fn(*args)
    return (time.perf_counter() - start) / repeats


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mc-states", type=int, default=100000, help="states in the large profile case")
    ap.add_argument("--scale", type=float, default=1.0, help="multiply every repeat count")
    args = ap.parse_args()

    pairs = [
        (kernels.fidelity_profile_numpy, kernels.fidelity_profile_numba),
        (kernels.fidelity_profile_numpy, kernels.fidelity_profile_numba),
        (kernels.grid_scan_numpy, kernels.grid_scan_numba),
        (kernels.reversal_objective_numpy, kernels.reversal_objective_numba),
    ]

    print(f"installed backend: {kernels.BACKEND}")
    header = f"{'workload':<34}{'numpy':>12}{'numba':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for (name, call_args, repeats), (f_np, f_nb) in zip(_workloads(args.mc_states), pairs):
        repeats = max(1, int(repeats * args.scale))
        t_np = _time_per_call(f_np, call_args, repeats)
        if f_nb is None:
            print(f"{name:<34}{t_np * 1e6:>10.1f} us{'n/a':>12}{'':>10}")
            continue
        t_nb = _time_per_call(f_nb, call_args, repeats)
        print(f"{name:<34}{t_np * 1e6:>10.1f} us{t_nb * 1e6:>10.1f} us{t_np / t_nb:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

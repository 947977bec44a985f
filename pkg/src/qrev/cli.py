"""Command line interface.

Subcommands: teleport (build an induced channel), reverse (optimize a
reversal), fidelity (evaluate a channel/reversal pair), sweep-mu (CSV sweep of
the imperfect scheme), channel-info (inspect a channel file). Scheme inputs
are either a canned name with parameters (--scheme bell --q ... or --scheme
imperfect --mu ...) or a scheme file; giving both is an error. Random seeds
default to the QREV_SEED environment variable (0 when unset); --seed wins.
All commands are deterministic for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import serialize
from .channel import KrausChannel, bloch_affine_of, choi_of
from .reversal import (
    avg_fidelity_mc,
    avg_fidelity_quadrature,
    best_unitary_rotation,
    fidelity_coefficients,
    fidelity_contribution,
    optimize_reversal,
    t_operators_of_channel,
)
from .teleport import canned_scheme, induced_channel, t_operators


def _parse_floats(text: str, n: int, what: str) -> tuple[float, ...]:
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != n:
        raise ValueError(f"{what} needs {n} comma-separated numbers, got {text!r}")
    return tuple(float(p) for p in parts)


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    return int(os.environ.get("QREV_SEED", "0"))


def _load_scheme(args):
    named = args.scheme is not None
    if named and args.scheme_file:
        raise ValueError("give either --scheme or --scheme-file, not both")
    if args.scheme_file:
        return serialize.load_scheme(args.scheme_file)
    if not named:
        raise ValueError("no scheme given; use --scheme or --scheme-file")
    q = _parse_floats(args.q, 4, "--q") if args.q else None
    return canned_scheme(args.scheme, q=q, mu=args.mu)


def _emit(data: dict, path) -> None:
    if path:
        serialize.save_json(path, data)
    else:
        json.dump(data, sys.stdout, indent=2)
        sys.stdout.write("\n")


def _add_scheme_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scheme", choices=("bell", "imperfect"), help="canned scheme name")
    p.add_argument("--q", help="four Bell weights for --scheme bell, e.g. 0.7,0.1,0.1,0.1")
    p.add_argument("--mu", type=float, help="control angle for --scheme imperfect")
    p.add_argument("--scheme-file", help="scheme JSON file (exclusive with --scheme)")


def cmd_teleport(args) -> int:
    scheme = _load_scheme(args)
    ind = induced_channel(scheme, args.outcome)
    _emit(serialize.induced_to_dict(ind), args.out)
    return 0


def cmd_reverse(args) -> int:
    if args.channel_file and (args.scheme or args.scheme_file):
        raise ValueError("give either a scheme or --channel-file, not both")
    if args.channel_file:
        ch = serialize.load_channel(args.channel_file)
        ops = t_operators_of_channel(ch)
        t_ops = [ops]
        all_outcomes = 1
    else:
        scheme = _load_scheme(args)
        t_ops = [t_operators(scheme, i + 1) for i in range(scheme.n_outcomes)]
        all_outcomes = scheme.n_outcomes
    if args.objective == "total":
        objective = "total"
    else:
        if args.outcome < 1 or args.outcome > all_outcomes:
            raise ValueError(f"--outcome must be in 1..{all_outcomes}")
        objective = args.outcome
    result = optimize_reversal(
        t_ops,
        objective=objective,
        grid_n=args.grid_n,
        restarts=args.restarts,
        seed=_resolve_seed(args),
    )
    print(f"{result.avg_fidelity:.12f}")
    if args.out:
        serialize.save_json(args.out, serialize.result_to_dict(result))
    return 0


def cmd_fidelity(args) -> int:
    ch = serialize.load_channel(args.channel_file)
    rev = serialize.load_channel(args.reversal_file)
    if args.oracle == "analytic":
        value = fidelity_contribution(t_operators_of_channel(ch), bloch_affine_of(rev))
        print(f"{value:.12f}")
    elif args.oracle == "quadrature":
        value = avg_fidelity_quadrature([ch], [rev])
        print(f"{value:.12f}")
    else:
        value, se = avg_fidelity_mc([ch], [rev], args.samples, _resolve_seed(args))
        print(f"{value:.12f} +- {se:.6e}")
    return 0


def cmd_sweep_mu(args) -> int:
    from .teleport import imperfect_scheme

    if args.steps < 2:
        raise ValueError("--steps must be at least 2")
    if not (0.0 <= args.mu_from < args.mu_to <= np.pi / 2.0 + 1e-12):
        raise ValueError("sweep range must satisfy 0 <= from < to <= pi/2")
    mus = np.linspace(args.mu_from, args.mu_to, args.steps)
    seed = _resolve_seed(args)
    lines = ["mu,w1,f_unitary,f_extremal,gap"]
    for mu in mus:
        scheme = imperfect_scheme(float(mu))
        ops = t_operators(scheme, 1)
        w, tau, g = fidelity_coefficients(ops)
        if w <= 1e-14:
            raise ValueError(f"outcome 1 has vanishing probability at mu={mu}")
        _, unitary_value = best_unitary_rotation(g)
        f_unitary = (w / 2.0 + unitary_value / 12.0) / w
        result = optimize_reversal(
            [ops], objective=1, grid_n=args.grid_n, restarts=args.restarts, seed=seed
        )
        f_extremal = result.avg_fidelity
        gap = f_extremal - f_unitary
        lines.append(f"{mu:.12g},{w:.12g},{f_unitary:.12g},{f_extremal:.12g},{gap:.12g}")
    text = "\n".join(lines) + "\n"
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_channel_info(args) -> int:
    if args.channel_file and (args.scheme or args.scheme_file):
        raise ValueError("give either a scheme or --channel-file, not both")
    if args.channel_file:
        ch = serialize.load_channel(args.channel_file)
    else:
        scheme = _load_scheme(args)
        ch = induced_channel(scheme, args.outcome).channel
    choi = choi_of(ch)
    eigs = np.sort(np.linalg.eigvalsh(choi))[::-1]
    ksum = ch.kraus_sum()
    tp_dev = float(np.abs(ksum - np.eye(2)).max())
    print(f"dim: {ch.dim}")
    print(f"kraus operators: {len(ch.kraus)}")
    print(f"trace preserving: {'yes' if ch.is_trace_preserving() else 'no'} (deviation {tp_dev:.3e})")
    print(f"completely positive: yes (min Choi eigenvalue {eigs[-1]:.3e})")
    print("choi eigenvalues: " + ", ".join(f"{v:.12g}" for v in eigs))
    print(f"mean outcome probability: {np.trace(ksum).real / 2.0:.12g}")
    if ch.is_trace_preserving():
        aff = bloch_affine_of(ch)
        for i, row in enumerate(aff.m):
            print("bloch matrix:  " if i == 0 else "               ", end="")
            print(" ".join(f"{v: .12g}" for v in row))
        print("bloch offset:   " + " ".join(f"{v: .12g}" for v in aff.c))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrev",
        description="Teleportation-induced qubit channels and optimal approximate reversal.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("teleport", help="build the induced channel for one outcome")
    _add_scheme_arguments(p)
    p.add_argument("--outcome", type=int, default=1, help="1-based outcome index (default 1)")
    p.add_argument("--out", help="write channel JSON here instead of stdout")
    p.set_defaults(func=cmd_teleport)

    p = sub.add_parser("reverse", help="optimize a reversal channel")
    _add_scheme_arguments(p)
    p.add_argument("--channel-file", help="channel JSON input (exclusive with scheme)")
    p.add_argument("--outcome", type=int, default=1, help="outcome to reverse (default 1)")
    p.add_argument(
        "--objective",
        choices=("conditional", "total"),
        default="conditional",
        help="conditional: the chosen outcome, probability-normalized; total: sum over outcomes",
    )
    p.add_argument("--grid-n", type=int, default=32, help="grid points per angle (default 32)")
    p.add_argument("--restarts", type=int, default=8, help="local refinements (default 8)")
    p.add_argument("--seed", type=int, help="override QREV_SEED")
    p.add_argument("--out", help="write the result JSON here")
    p.set_defaults(func=cmd_reverse)

    p = sub.add_parser("fidelity", help="average fidelity of a channel/reversal pair")
    p.add_argument("--channel-file", required=True)
    p.add_argument("--reversal-file", required=True)
    p.add_argument("--oracle", choices=("analytic", "quadrature", "mc"), default="analytic")
    p.add_argument("--samples", type=int, default=100000, help="Monte Carlo samples")
    p.add_argument("--seed", type=int, help="override QREV_SEED")
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser("sweep-mu", help="sweep the imperfect scheme's control angle")
    p.add_argument("--from", dest="mu_from", type=float, required=True)
    p.add_argument("--to", dest="mu_to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.add_argument("--grid-n", type=int, default=32)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--seed", type=int, help="override QREV_SEED")
    p.set_defaults(func=cmd_sweep_mu)

    p = sub.add_parser("channel-info", help="inspect a channel")
    _add_scheme_arguments(p)
    p.add_argument("--channel-file")
    p.add_argument("--outcome", type=int, default=1)
    p.set_defaults(func=cmd_channel_info)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

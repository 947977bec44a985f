"""JSON encodings for channels, schemes and reversal results.

Complex matrices are nested lists of [re, im] pairs, row by row. Floats keep
full repr precision (17 significant digits), so round trips are lossless.
"""

from __future__ import annotations

import json
from typing import Union

import numpy as np

from .channel import KrausChannel
from .reversal import ReversalResult
from .teleport import InducedChannel, TeleportScheme


def complex_to_pairs(m: np.ndarray) -> list:
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim == 1:
        return [[float(z.real), float(z.imag)] for z in m]
    return [complex_to_pairs(row) for row in m]


def pairs_to_complex(data) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.ndim < 2 or arr.shape[-1] != 2:
        raise ValueError("complex data must be nested [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def channel_to_dict(ch: KrausChannel, **extra) -> dict:
    out = {
        "dim": 2,
        "trace_preserving": bool(ch.is_trace_preserving()),
        "kraus": [complex_to_pairs(a) for a in ch.kraus],
    }
    out.update(extra)
    return out


def channel_from_dict(d: dict) -> KrausChannel:
    if int(d.get("dim", 2)) != 2:
        raise ValueError(f"unsupported channel dimension {d.get('dim')}")
    kraus = d.get("kraus")
    if not kraus:
        raise ValueError("channel data has no Kraus operators")
    return KrausChannel(tuple(pairs_to_complex(a) for a in kraus))


def scheme_to_dict(s: TeleportScheme) -> dict:
    return {
        "chi23": complex_to_pairs(s.chi23),
        "povm": [[complex_to_pairs(p) for p in outcome] for outcome in s.povm],
        "trace_basis": complex_to_pairs(s.trace_basis),
    }


def scheme_from_dict(d: dict) -> TeleportScheme:
    try:
        chi = pairs_to_complex(d["chi23"])
        povm = tuple(tuple(pairs_to_complex(p) for p in outcome) for outcome in d["povm"])
        basis = pairs_to_complex(d["trace_basis"])
    except KeyError as e:
        raise ValueError(f"scheme data is missing field {e}") from None
    return TeleportScheme(chi, povm, basis)


def induced_to_dict(ind: InducedChannel) -> dict:
    return channel_to_dict(
        ind.channel,
        outcome=ind.outcome,
        mean_outcome_probability=ind.mean_outcome_probability,
    )


def result_to_dict(res: ReversalResult) -> dict:
    out = {
        "method": res.method,
        "objective": res.objective,
        "avg_fidelity": res.avg_fidelity,
    }
    if len(res.channels) == 1:
        out["params"] = res.params[0].to_dict()
        out["channel"] = channel_to_dict(res.channels[0])
    else:
        out["params"] = [p.to_dict() for p in res.params]
        out["channels"] = [channel_to_dict(c) for c in res.channels]
    return out


def save_json(path: str, data: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def load_json(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def save_channel(path: str, ch: Union[KrausChannel, InducedChannel]) -> None:
    data = induced_to_dict(ch) if isinstance(ch, InducedChannel) else channel_to_dict(ch)
    save_json(path, data)


def load_channel(path: str) -> KrausChannel:
    return channel_from_dict(load_json(path))


def save_scheme(path: str, s: TeleportScheme) -> None:
    save_json(path, scheme_to_dict(s))


def load_scheme(path: str) -> TeleportScheme:
    return scheme_from_dict(load_json(path))

import json

import numpy as np

from conftest import depolarizing
from qrev import serialize as sz
from qrev.channel import channel_distance, identity_channel
from qrev.reversal import optimize_reversal
from qrev.teleport import bell_scheme, imperfect_scheme, induced_channel, t_operators


def test_complex_pairs_round_trip(rng):
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    back = sz.pairs_to_complex(sz.complex_to_pairs(m))
    np.testing.assert_array_equal(back, m)


def test_channel_file_round_trip(tmp_path, rng):
    e = depolarizing(rng.dirichlet(np.ones(4)))
    path = tmp_path / "channel.json"
    sz.save_channel(path, e)
    back = sz.load_channel(path)
    assert back.dim == 2
    assert len(back.kraus) == len(e.kraus)
    for a, b in zip(back.kraus, e.kraus):
        np.testing.assert_array_equal(a, b)  # bit-exact through JSON


def test_channel_dict_fields():
    d = sz.channel_to_dict(identity_channel())
    assert d["dim"] == 2
    assert d["trace_preserving"] is True
    assert len(d["kraus"]) == 1
    # each entry is a [re, im] pair
    assert d["kraus"][0][0][0] == [1.0, 0.0]


def test_channel_json_full_precision(tmp_path):
    from qrev.channel import KrausChannel

    x = float(np.cos(np.pi / 7))
    e = KrausChannel([np.array([[x, 0], [0, x]], dtype=complex)])
    path = tmp_path / "c.json"
    sz.save_channel(path, e)
    text = path.read_text()
    # repr round trip keeps >= 15 significant digits
    assert repr(x) in text
    assert channel_distance(sz.load_channel(path), e) == 0.0


def test_induced_dict_fields():
    ind = induced_channel(bell_scheme([0.7, 0.1, 0.1, 0.1]), 2)
    d = sz.induced_to_dict(ind)
    assert d["outcome"] == 2
    assert abs(d["mean_outcome_probability"] - 0.25) <= 1e-12
    assert d["trace_preserving"] is False


def test_scheme_file_round_trip(tmp_path, rng):
    for s in (bell_scheme(rng.dirichlet(np.ones(4))), imperfect_scheme(0.8)):
        path = tmp_path / "scheme.json"
        sz.save_scheme(path, s)
        back = sz.load_scheme(path)
        np.testing.assert_array_equal(back.chi23, s.chi23)
        assert len(back.povm) == len(s.povm)
        for ops_a, ops_b in zip(back.povm, s.povm):
            for a, b in zip(ops_a, ops_b):
                np.testing.assert_array_equal(a, b)
        np.testing.assert_array_equal(back.trace_basis, s.trace_basis)
        # identical induced channels after the round trip
        d = channel_distance(
            induced_channel(back, 1).channel, induced_channel(s, 1).channel
        )
        assert d == 0.0


def test_result_dict_single_outcome():
    res = optimize_reversal([t_operators(bell_scheme([0.7, 0.1, 0.1, 0.1]), 1)], objective=1)
    d = sz.result_to_dict(res)
    assert d["objective"] == "per_outcome(1)"
    assert d["method"] in ("analytic", "grid", "multistart")
    assert abs(d["avg_fidelity"] - 0.8) <= 1e-9
    assert d["params"]["kind"] == "unitary"
    assert d["channel"]["trace_preserving"] is True


def test_result_dict_multi_outcome():
    ops = [t_operators(bell_scheme([0.7, 0.1, 0.1, 0.1]), i) for i in range(1, 5)]
    d = sz.result_to_dict(optimize_reversal(ops))
    assert d["objective"] == "total"
    assert len(d["params"]) == 4
    assert len(d["channels"]) == 4


def test_save_json_is_valid_json(tmp_path):
    path = tmp_path / "x.json"
    sz.save_json(path, {"a": 1.5})
    loaded = json.loads(path.read_text())
    assert loaded == {"a": 1.5}

"""End-to-end command tests through main(argv)."""

import json

import numpy as np
import pytest

from qrev import serialize as sz
from qrev.channel import channel_distance, identity_channel
from qrev.cli import main
from qrev.teleport import bell_scheme


def test_teleport_stdout_json(capsys):
    assert main(["teleport", "--scheme", "bell", "--q", "1,0,0,0", "--outcome", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["outcome"] == 1
    assert abs(data["mean_outcome_probability"] - 0.25) <= 1e-12
    # unnormalized: single Kraus I/2
    assert data["trace_preserving"] is False


def test_teleport_reverse_pipeline(tmp_path, capsys):
    ch_path = str(tmp_path / "e.json")
    assert main(["teleport", "--scheme", "bell", "--q", "0.7,0.1,0.1,0.1",
                 "--outcome", "1", "--out", ch_path]) == 0
    out_path = str(tmp_path / "r.json")
    assert main(["reverse", "--channel-file", ch_path, "--out", out_path]) == 0
    assert capsys.readouterr().out.strip() == "0.800000000000"
    result = sz.load_json(out_path)
    assert result["params"]["kind"] == "unitary"


def test_reverse_scheme_conditional_and_total(capsys):
    assert main(["reverse", "--scheme", "bell", "--q", "0,1,0,0"]) == 0
    assert capsys.readouterr().out.strip() == "1.000000000000"
    assert main(["reverse", "--scheme", "bell", "--q", "0.25,0.25,0.25,0.25",
                 "--objective", "total"]) == 0
    assert capsys.readouterr().out.strip() == "0.500000000000"


def test_reverse_rejects_ambiguous_input(tmp_path, capsys):
    ch_path = str(tmp_path / "e.json")
    sz.save_channel(ch_path, identity_channel())
    code = main(["reverse", "--scheme", "bell", "--q", "1,0,0,0", "--channel-file", ch_path])
    assert code == 2
    assert capsys.readouterr().err.startswith("error:")


def test_reverse_requires_some_input(capsys):
    assert main(["reverse"]) == 2
    assert "error:" in capsys.readouterr().err


def test_fidelity_identity_all_oracles(tmp_path, capsys):
    ch_path = str(tmp_path / "id.json")
    sz.save_channel(ch_path, identity_channel())
    for oracle in ("analytic", "quadrature"):
        assert main(["fidelity", "--channel-file", ch_path, "--reversal-file", ch_path,
                     "--oracle", oracle]) == 0
        assert capsys.readouterr().out.strip() == "1.000000000000"
    assert main(["fidelity", "--channel-file", ch_path, "--reversal-file", ch_path,
                 "--oracle", "mc", "--samples", "1000", "--seed", "42"]) == 0
    line = capsys.readouterr().out.strip()
    value, _, se = line.partition(" +- ")
    assert abs(float(value) - 1.0) <= 1e-12
    assert float(se) <= 1e-12  # integrand is constant for the identity pair


def test_fidelity_analytic_matches_quadrature(tmp_path, capsys, rng):
    from qrev.teleport import induced_channel

    q = rng.dirichlet(np.ones(4))
    ch_path = str(tmp_path / "e.json")
    sz.save_channel(ch_path, induced_channel(bell_scheme(q), 1))
    rev_path = str(tmp_path / "rev.json")
    sz.save_channel(rev_path, identity_channel())
    values = []
    for oracle in ("analytic", "quadrature"):
        main(["fidelity", "--channel-file", ch_path, "--reversal-file", rev_path,
              "--oracle", oracle])
        values.append(float(capsys.readouterr().out))
    assert abs(values[0] - values[1]) <= 1e-10


def test_fidelity_mc_deterministic(tmp_path, capsys):
    ch_path = str(tmp_path / "e.json")
    sz.save_channel(ch_path, identity_channel())
    outs = []
    for _ in range(2):
        main(["fidelity", "--channel-file", ch_path, "--reversal-file", ch_path,
              "--oracle", "mc", "--samples", "2000", "--seed", "42"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_sweep_csv_contract(tmp_path):
    csv_path = str(tmp_path / "sweep.csv")
    assert main(["sweep-mu", "--from", "0", "--to", "1.5707963267948966",
                 "--steps", "5", "--csv", csv_path]) == 0
    lines = open(csv_path).read().strip().split("\n")
    assert lines[0] == "mu,w1,f_unitary,f_extremal,gap"
    assert len(lines) == 6
    rows = [list(map(float, l.split(","))) for l in lines[1:]]
    mus = [r[0] for r in rows]
    assert mus == sorted(mus)
    for r in rows:
        assert abs(r[1] - 0.25) <= 1e-12  # w1 is mu-independent
        assert r[4] >= -1e-10
        assert abs(r[4] - (r[3] - r[2])) <= 1e-9
    assert rows[0][4] <= 1e-9  # no gap at mu = 0


def test_sweep_rejects_bad_range(capsys):
    assert main(["sweep-mu", "--from", "0.5", "--to", "0.1", "--steps", "4"]) == 2
    capsys.readouterr()
    assert main(["sweep-mu", "--from", "0", "--to", "1.0", "--steps", "1"]) == 2
    capsys.readouterr()
    assert main(["sweep-mu", "--from", "0", "--to", "2.0", "--steps", "3"]) == 2
    capsys.readouterr()


def test_channel_info_reports_tp_and_bloch(capsys):
    assert main(["channel-info", "--scheme", "bell", "--q", "1,0,0,0"]) == 0
    out = capsys.readouterr().out
    assert "trace preserving: no" in out
    assert "mean outcome probability: 0.25" in out

    assert main(["channel-info", "--scheme", "imperfect", "--mu", "0.7854"]) == 0
    out = capsys.readouterr().out
    assert "completely positive: yes" in out
    assert "choi eigenvalues:" in out


def test_channel_info_tp_channel_shows_affine(tmp_path, capsys):
    ch_path = str(tmp_path / "id.json")
    sz.save_channel(ch_path, identity_channel())
    assert main(["channel-info", "--channel-file", ch_path]) == 0
    out = capsys.readouterr().out
    assert "trace preserving: yes" in out
    assert "bloch matrix:" in out
    assert "bloch offset:" in out


def test_teleport_rejects_bad_weights(capsys):
    assert main(["teleport", "--scheme", "bell", "--q", "0.5,0.6,0,0"]) == 2
    assert capsys.readouterr().err.startswith("error:")
    assert main(["teleport", "--scheme", "bell", "--q", "1,0,0"]) == 2
    capsys.readouterr()


def test_scheme_file_round_trip_through_cli(tmp_path, capsys):
    scheme_path = str(tmp_path / "scheme.json")
    sz.save_scheme(scheme_path, bell_scheme([0.7, 0.1, 0.1, 0.1]))
    assert main(["reverse", "--scheme-file", scheme_path]) == 0
    assert capsys.readouterr().out.strip() == "0.800000000000"


def test_seed_env_fallback(tmp_path, capsys, monkeypatch):
    ch_path = str(tmp_path / "id.json")
    sz.save_channel(ch_path, identity_channel())
    monkeypatch.setenv("QREV_SEED", "7")
    main(["fidelity", "--channel-file", ch_path, "--reversal-file", ch_path,
          "--oracle", "mc", "--samples", "500"])
    env_out = capsys.readouterr().out
    main(["fidelity", "--channel-file", ch_path, "--reversal-file", ch_path,
          "--oracle", "mc", "--samples", "500", "--seed", "7"])
    assert capsys.readouterr().out == env_out


def test_reverse_deterministic_output_files(tmp_path, capsys):
    paths = [str(tmp_path / f"r{i}.json") for i in (0, 1)]
    for p in paths:
        main(["reverse", "--scheme", "imperfect", "--mu", "1.3", "--out", p, "--seed", "5"])
        capsys.readouterr()
    assert open(paths[0]).read() == open(paths[1]).read()

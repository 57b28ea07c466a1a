"""Command-line interface: subcommands, exit codes, artifacts on disk."""

import json

import pytest

from ruinfair.cli import main

SMALL_SCENARIO = {
    "topology": {"ue_count": 4},
    "seeds": {"replications": 10},
    "sweeps": {
        "wst": {"variable": "wst_count", "values": [5, 10]},
        "psi": {"variable": "psi", "values": [0.0, 0.5, 1.0]},
    },
}


@pytest.fixture()
def config_file(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(SMALL_SCENARIO))
    return path


def test_validate_ok(config_file, capsys):
    assert main(["validate", "--config", str(config_file)]) == 0
    out = capsys.readouterr().out
    assert "OK" in out and "psi" in out and "wst" in out


def test_validate_rejects_bad_config(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"traffic": {"mu": -5}}')
    assert main(["validate", "--config", str(path)]) == 2
    assert "traffic.mu" in capsys.readouterr().err


def test_validate_missing_file_exits_2(tmp_path, capsys):
    assert main(["validate", "--config", str(tmp_path / "absent.json")]) == 2
    assert "config error" in capsys.readouterr().err


def test_run_single_sweep_writes_artifacts(config_file, tmp_path):
    out = tmp_path / "out"
    assert main(["run", "--config", str(config_file), "--sweep", "psi", "--out", str(out)]) == 0
    assert (out / "sweep_psi.csv").is_file()
    assert (out / "manifest_psi.json").is_file()
    assert not (out / "sweep_wst.csv").exists()


def test_run_all_sweeps_by_default(config_file, tmp_path):
    out = tmp_path / "all"
    assert main(["run", "--config", str(config_file), "--out", str(out)]) == 0
    for name in ("psi", "wst"):
        assert (out / f"sweep_{name}.csv").is_file()
        assert (out / f"manifest_{name}.json").is_file()


def test_run_unknown_sweep_exits_2(config_file, tmp_path, capsys):
    code = main(
        ["run", "--config", str(config_file), "--sweep", "ghost", "--out", str(tmp_path)]
    )
    assert code == 2
    assert "ghost" in capsys.readouterr().err


def test_run_twice_is_byte_identical(config_file, tmp_path):
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    assert main(["run", "--config", str(config_file), "--out", str(out_a)]) == 0
    assert main(["run", "--config", str(config_file), "--out", str(out_b)]) == 0
    for name in ("sweep_psi.csv", "sweep_wst.csv", "manifest_psi.json", "manifest_wst.json"):
        assert (out_a / name).read_bytes() == (out_b / name).read_bytes()


def test_run_output_collision_exits_1(config_file, tmp_path, capsys):
    blocker = tmp_path / "blocked"
    blocker.write_text("a file, not a directory")
    code = main(["run", "--config", str(config_file), "--out", str(blocker)])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_manifest_replay_matches_cli_output(config_file, tmp_path):
    out = tmp_path / "first"
    assert main(["run", "--config", str(config_file), "--sweep", "wst", "--out", str(out)]) == 0
    manifest = json.loads((out / "manifest_wst.json").read_text())

    replay_config = tmp_path / "replay.json"
    replay_config.write_text(json.dumps(manifest["scenario"]))
    replay_out = tmp_path / "second"
    assert main(["run", "--config", str(replay_config), "--sweep", "wst", "--out", str(replay_out)]) == 0
    assert (out / "sweep_wst.csv").read_bytes() == (replay_out / "sweep_wst.csv").read_bytes()

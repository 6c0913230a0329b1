import json
import math
import re
import shutil
import subprocess
import sys

import numpy as np
import pytest

from wavequbit import load_csv, synth_burst
from wavequbit.cli import RunConfig, load_config, main
from wavequbit.errors import UsageError
from wavequbit.wavelet_engine import load_map_csv

from conftest import BURST, GRID

GRID_ARG = "0,{!r},2048".format(GRID[1])
BURST_ARG = "5,10,0.5"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def burst_csv(tmp_path, capsys):
    code, _, _ = run(capsys, "synth", "--burst", BURST_ARG, "--grid", GRID_ARG, "--out", tmp_path / "burst.csv")
    assert code == 0
    return tmp_path / "burst.csv"


@pytest.fixture
def burst_map(tmp_path, capsys, burst_csv):
    code, _, _ = run(capsys, "transform", burst_csv, "--out", tmp_path / "map.csv")
    assert code == 0
    return tmp_path / "map.csv"


# ---- synth -------------------------------------------------------------------


def test_synth_matches_library(burst_csv, capsys):
    expected = synth_burst(BURST, GRID)
    got = load_csv(burst_csv, dt=GRID[1])
    np.testing.assert_array_equal(got.samples, expected.samples)


def test_synth_three_bursts(tmp_path, capsys):
    code, out, _ = run(
        capsys, "synth", "--burst", "3,8,0.8", "--burst", "3,20,0.8,1.25", "--burst", "7,8,0.8",
        "--grid", GRID_ARG, "--out", tmp_path / "three.csv",
    )
    assert code == 0
    assert "2048 samples" in out and "3 burst(s)" in out


def test_synth_without_bursts_is_usage_error(tmp_path, capsys):
    code, _, err = run(capsys, "synth", "--grid", GRID_ARG, "--out", tmp_path / "x.csv")
    assert code == 1 and "burst" in err


def test_synth_bad_burst_is_domain_error(tmp_path, capsys):
    code, _, _ = run(capsys, "synth", "--burst", "5,-1,0.5", "--grid", GRID_ARG, "--out", tmp_path / "x.csv")
    assert code == 2


def test_unwritable_output(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _, _ = run(capsys, "synth", "--burst", BURST_ARG, "--grid", GRID_ARG, "--out", blocker / "x.csv")
    assert code == 1


# ---- transform ---------------------------------------------------------------


def test_transform_reports_argmax(tmp_path, capsys, burst_csv):
    code, out, err = run(capsys, "transform", burst_csv, "--out", tmp_path / "map.csv", "--pgm", tmp_path / "map.pgm")
    assert code == 0 and err == ""
    assert "96 x 513" in out
    omega, t = map(float, re.search(r"omega = (\S+) rad/s, T = (\S+) s", out).groups())
    # forward-transform oracle: Mexican hat maximum sits at (6.3612, 5.0024)
    assert omega == pytest.approx(6.36121, rel=1e-5) and t == pytest.approx(5.00244, rel=1e-5)
    assert (tmp_path / "map.pgm").read_bytes().startswith(b"P5\n513 96\n255\n")


def test_transform_zero_signal(tmp_path, capsys):
    path = tmp_path / "zero.csv"
    path.write_text("t,f\n" + "".join(f"{0.01 * k!r},0\n" for k in range(300)))
    code, _, _ = run(capsys, "transform", path, "--out", tmp_path / "map.csv")
    assert code == 0
    assert not load_map_csv(tmp_path / "map.csv").coeffs.any()


def test_transform_out_of_band_warns(tmp_path, capsys, burst_csv):
    code, out, err = run(
        capsys, "transform", burst_csv, "--omega-min", "30", "--omega-max", "80", "--out", tmp_path / "map.csv"
    )
    assert code == 0
    assert "warning" in err and "lower edge" in err


def test_transform_parse_error_has_line(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("0,1\n0.1,2\n0.2,oops\n")
    code, _, err = run(capsys, "transform", path, "--out", tmp_path / "map.csv")
    assert code == 1 and "line 3" in err


def test_transform_single_column_needs_dt(tmp_path, capsys):
    path = tmp_path / "col.csv"
    path.write_text("".join(f"{math.sin(k / 7)!r}\n" for k in range(200)))
    assert run(capsys, "transform", path, "--out", tmp_path / "m.csv")[0] == 1
    assert run(capsys, "transform", path, "--dt", "0.05", "--out", tmp_path / "m.csv")[0] == 0


# ---- reconstruct -------------------------------------------------------------


def test_reconstruct_round_trip_identity_exponent(tmp_path, capsys, burst_csv, burst_map):
    code, out, _ = run(
        capsys, "reconstruct", burst_map, "--reference", burst_csv, "--omega-power", "0.5", "--out", tmp_path / "r.csv"
    )
    assert code == 0
    error = float(re.search(r"relative L2 error = (\S+)", out).group(1))
    assert error <= 0.05


def test_reconstruct_default_exponent_reports_error(tmp_path, capsys, burst_csv, burst_map):
    code, out, _ = run(capsys, "reconstruct", burst_map, "--reference", burst_csv, "--out", tmp_path / "r.csv")
    assert code == 0
    # omega**1 weighting amplifies by roughly sqrt(omega): far from the input
    assert float(re.search(r"relative L2 error = (\S+)", out).group(1)) > 1.0


def test_reconstruct_zero_map(tmp_path, capsys):
    path = tmp_path / "zero.csv"
    path.write_text("t,f\n" + "".join(f"{0.01 * k!r},0\n" for k in range(300)))
    run(capsys, "transform", path, "--out", tmp_path / "map.csv")
    code, out, _ = run(capsys, "reconstruct", tmp_path / "map.csv", "--out", tmp_path / "r.csv")
    assert code == 0
    signal = load_csv(tmp_path / "r.csv", dt=0.01)
    assert not signal.samples.any()


def test_reconstruct_mismatched_reference(tmp_path, capsys, burst_map):
    short = tmp_path / "short.csv"
    short.write_text("".join(f"{0.01 * k!r},0\n" for k in range(100)))
    code, _, _ = run(capsys, "reconstruct", burst_map, "--reference", short, "--grid", GRID_ARG, "--out", tmp_path / "r.csv")
    assert code == 1


def test_reconstruct_extent_error(tmp_path, capsys, burst_map):
    code, _, err = run(capsys, "reconstruct", burst_map, "--grid=-1,0.01,100", "--out", tmp_path / "r.csv")
    assert code == 3 and "extent" in err


# ---- encode and relate -------------------------------------------------------


def test_encode_explicit_points(tmp_path, capsys, burst_map):
    code, _, _ = run(capsys, "encode", burst_map, "--point", "32,256", "--point", "10,100", "--out", tmp_path / "q.json")
    assert code == 0
    data = json.loads((tmp_path / "q.json").read_text())
    wmap = load_map_csv(burst_map)
    assert data["point_m"]["W"] == wmap.coeffs[32, 256]
    assert data["point_n"]["W"] == wmap.coeffs[10, 100]
    assert data["normalized"] is False


def test_encode_auto(tmp_path, capsys):
    run(capsys, "synth", "--burst", "3,8,0.8", "--burst", "3,20,0.8,1.25", "--burst", "7,8,0.8",
        "--grid", GRID_ARG, "--out", tmp_path / "three.csv")
    run(capsys, "--wavelet", "morlet-real", "transform", tmp_path / "three.csv", "--out", tmp_path / "map.csv")
    code, _, _ = run(capsys, "encode", tmp_path / "map.csv", "--wavelet", "morlet-real", "--auto", "2",
                     "--normalize", "--out", tmp_path / "q.json")
    assert code == 0
    data = json.loads((tmp_path / "q.json").read_text())
    assert data["wavelet_kind"] == "morlet-real" and data["normalized"] is True
    assert math.hypot(data["point_m"]["W"], data["point_n"]["W"]) == pytest.approx(1.0, abs=1e-12)
    assert abs(data["point_m"]["W"]) >= abs(data["point_n"]["W"])


@pytest.mark.parametrize(
    "extra, code",
    [
        (["--point", "1,1", "--point", "1,1"], 2),
        (["--point", "1,1", "--point", "999,1"], 2),
        (["--point", "1,1"], 1),
        (["--auto", "1"], 1),
        (["--auto", "2", "--point", "1,1"], 1),
    ],
)
def test_encode_errors(tmp_path, capsys, burst_map, extra, code):
    assert run(capsys, "encode", burst_map, *extra, "--out", tmp_path / "q.json")[0] == code


def test_encode_auto_on_zero_map(tmp_path, capsys):
    path = tmp_path / "zero.csv"
    path.write_text("".join(f"{0.01 * k!r},0\n" for k in range(300)))
    run(capsys, "transform", path, "--out", tmp_path / "map.csv")
    code, _, err = run(capsys, "encode", tmp_path / "map.csv", "--auto", "2", "--out", tmp_path / "q.json")
    assert code == 2 and "found 0" in err


def write_qubit(path, a, b):
    path.write_text(json.dumps({
        "point_m": {"omega": 5.0, "T": 1.0, "W": a, "freq_index": 3, "time_index": 7},
        "point_n": {"omega": 9.0, "T": 2.0, "W": b, "freq_index": 8, "time_index": 12},
        "wavelet_kind": "mexican-hat",
        "admissibility": math.pi,
        "normalized": False,
    }))
    return path


@pytest.mark.parametrize(
    "q1, q2, u, matched",
    [
        ((1.0, 0.0), (1.0, 0.0), [1.0, 0.0, 0.0, 0.0], ["C", "D"]),
        ((2**-0.5, 2**-0.5), (2**-0.5, 2**-0.5), [0.5, 0.5, 0.5, 0.5], []),
        ((0.3, -1.7), (2.2, 0.4), [0.66, 0.12, -3.74, -0.68], []),
    ],
)
def test_relate(tmp_path, capsys, q1, q2, u, matched):
    code, out, _ = run(
        capsys, "relate", write_qubit(tmp_path / "a.json", *q1), write_qubit(tmp_path / "b.json", *q2),
        "--out", tmp_path / "rel.json",
    )
    assert code == 0
    data = json.loads((tmp_path / "rel.json").read_text())
    assert data["U"] == pytest.approx(u, rel=1e-15, abs=1e-15)
    assert data["bell_matched"] == matched
    assert data["separated"] is True
    assert abs(data["determinant"]) <= 1e-15
    assert data["provenance"] == ["a.json", "b.json"]


def test_relate_malformed_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    good = write_qubit(tmp_path / "a.json", 1.0, 0.0)
    assert run(capsys, "relate", bad, good, "--out", tmp_path / "rel.json")[0] == 1


# ---- config and metadata -----------------------------------------------------


def test_config_file_and_flag_precedence(tmp_path, capsys, burst_csv):
    cfg = tmp_path / "run.toml"
    cfg.write_text('omega-count = 12\nomega_max = 30.0\nwavelet = "mexican-hat"\n')
    code, out, _ = run(capsys, "--config", cfg, "transform", burst_csv, "--omega-count", "16", "--out", tmp_path / "m.csv")
    assert code == 0
    assert "map 16 x 513" in out
    meta = (tmp_path / "run.meta").read_text()
    assert "[transform]" in meta and "omega_count = 16" in meta and "omega_max = 30" in meta


@pytest.mark.parametrize(
    "text",
    ["omega_count = 'many'\n", "unknown = 1\n", "[table]\nx = 1\n", "omega_count = \n"],
)
def test_bad_config(tmp_path, text):
    cfg = tmp_path / "bad.toml"
    cfg.write_text(text)
    with pytest.raises(UsageError):
        load_config(cfg)


@pytest.mark.parametrize(
    "changes",
    [{"omega_min": 5.0, "omega_max": 4.0}, {"omega_count": 7}, {"stride": 0}, {"tol_bell": -1.0}, {"wavelet": "haar"}],
)
def test_run_config_validation(changes):
    with pytest.raises(UsageError):
        RunConfig(**changes).validate()


def test_usage_errors(capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "nope")[0] == 1
    assert run(capsys, "--omega-count", "4", "synth", "--burst", BURST_ARG, "--grid", GRID_ARG, "--out", "x")[0] == 1


def test_out_dir_and_meta_sections(tmp_path, capsys):
    out_dir = tmp_path / "runs"
    run(capsys, "--out-dir", out_dir, "synth", "--burst", BURST_ARG, "--grid", GRID_ARG, "--out", "s.csv")
    run(capsys, "transform", out_dir / "s.csv", "--out-dir", out_dir, "--out", "m.csv", "--omega-count", "8")
    meta = (out_dir / "run.meta").read_text()
    assert meta.index("[synth]") < meta.index("[transform]")
    assert (out_dir / "s.csv").exists() and (out_dir / "m.csv").exists()


def pipeline(capsys, directory):
    directory.mkdir()
    steps = [
        ["synth", "--burst", BURST_ARG, "--grid", GRID_ARG, "--out", "signal.csv"],
        ["transform", directory / "signal.csv", "--out", "map.csv", "--pgm", "map.pgm"],
        ["reconstruct", directory / "map.csv", "--reference", directory / "signal.csv", "--out", "recon.csv"],
        ["encode", directory / "map.csv", "--auto", "2", "--out", "q1.json"],
        ["encode", directory / "map.csv", "--point", "32,256", "--point", "40,300", "--normalize", "--out", "q2.json"],
        ["relate", directory / "q1.json", directory / "q2.json", "--out", "relation.json"],
    ]
    for step in steps:
        assert run(capsys, "--out-dir", directory, *step)[0] == 0
    return {p.name: p.read_bytes() for p in sorted(directory.iterdir())}


def test_pipeline_is_deterministic(tmp_path, capsys):
    first = pipeline(capsys, tmp_path / "a")
    second = pipeline(capsys, tmp_path / "b")
    assert set(first) == {"signal.csv", "map.csv", "map.pgm", "recon.csv", "q1.json", "q2.json", "relation.json", "run.meta"}
    for name in first:
        if name != "run.meta":  # records the differing paths
            assert first[name] == second[name], name


@pytest.mark.skipif(shutil.which("wavequbit") is None, reason="console script not installed")
def test_console_script(tmp_path):
    result = subprocess.run(
        ["wavequbit", "synth", "--burst", BURST_ARG, "--grid", "0,0.01,100", "--out", str(tmp_path / "s.csv")],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    result = subprocess.run([sys.executable, "-m", "wavequbit.cli", "relate"], capture_output=True, text=True)
    assert result.returncode == 1

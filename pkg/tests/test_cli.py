import json
import subprocess
import sys
from fractions import Fraction as Q
from pathlib import Path

import pytest

from extremal_sasaki import AdmissibleData, BaseFactor
from extremal_sasaki.cli import run
from extremal_sasaki.report import (ScanRow, emit_scan, grid, render_svg,
                                    scan)
from extremal_sasaki.solver import solution_from_json

CONFIGS = Path(__file__).resolve().parent.parent / "configs"
FS_CFG = {"factors": [], "weight": {"a": "0", "b": "1"}, "extended": False}


def write(tmp_path, obj, name="cfg.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_exists_fubini_study(tmp_path, capsys):
    code, out, _ = call(capsys, "exists", write(tmp_path, FS_CFG))
    rep = json.loads(out)
    assert code == 0 and rep["exists"] is True and rep["A"] == "0" and rep["B"] == "2"


def test_exists_not(tmp_path, capsys):
    cfg = {"factors": [{"dim": 1, "scal": "-57", "p": -2, "c": "17/8"}],
           "weight": {"a": "-2/5", "b": "1"}}
    code, out, _ = call(capsys, "exists", write(tmp_path, cfg))
    rep = json.loads(out)
    assert code == 3 and rep["exists"] is False and rep["witness"] is not None


def test_validation_error_names_constraint(tmp_path, capsys):
    cfg = {"factors": [{"dim": 1, "scal": "1", "p": 1, "c": "1"}], "weight": {"a": "0", "b": "1"}}
    code, out, err = call(capsys, "exists", write(tmp_path, cfg))
    assert code == 1 and out == ""
    assert "c_j > |p_j|" in json.loads(err)["error"]


@pytest.mark.parametrize("text", ["{", "[]", '{"factors": 3}', '{"weight": {"a": 0.5, "b": "1"}}',
                                  '{"factors": [], "weight": {"a": "0", "b": "1"}, "extended": "yes"}',
                                  '{"factors": [{"dim": 0, "scal": "1", "p": 0, "c": "1"}], '
                                  '"weight": {"a": "0", "b": "1"}}'])
def test_malformed_input(tmp_path, capsys, text):
    for cmd in ("solve", "exists", "futaki"):
        code, _, err = call(capsys, cmd, write(tmp_path, text))
        assert code == 1
        assert "error" in json.loads(err)


def test_missing_file_and_bad_args(tmp_path, capsys):
    assert call(capsys, "solve", str(tmp_path / "nope.json"))[0] == 1
    assert call(capsys, "bogus")[0] == 1
    assert call(capsys, "perturb", write(tmp_path, FS_CFG), "--t", "x")[0] == 1
    assert call(capsys, "--precision", "10", "exists", write(tmp_path, FS_CFG))[0] == 1


def test_solver_error_exit(tmp_path, capsys):
    cfg = dict(FS_CFG, v=["0", "1"])
    code, _, err = call(capsys, "perturb", write(tmp_path, cfg), "--t", "1")
    assert code == 2 and "NonPositiveWeight" in json.loads(err)["error"]


def test_solve_round_trip(tmp_path, capsys):
    for name in ("fubini_study", "ruled_surface", "two_factors", "anchor_a_eq_b"):
        code, out, _ = call(capsys, "solve", str(CONFIGS / f"{name}.json"))
        assert code == 0
        obj = json.loads(out)
        sol = solution_from_json(json.loads(json.dumps(obj)))
        assert sol.F.to_strings() == obj["F"]
        assert (str(sol.A), str(sol.B)) == (obj["A"], obj["B"])


def test_anchor_config(capsys):
    code, out, _ = call(capsys, "solve", str(CONFIGS / "anchor_a_eq_b.json"))
    obj = json.loads(out)
    assert obj["A"] == obj["B"] == "-24" and obj["warnings"] == ["ExtendedDomain"]


def test_futaki_output(capsys):
    code, out, _ = call(capsys, "futaki", str(CONFIGS / "fubini_study.json"), "--ellz", "1,0")
    obj = json.loads(out)
    assert code == 0
    assert obj["csc_type"] == "scalar-flat cone"
    assert obj["futaki"]["sign"] == "0"
    assert abs(obj["cK"]["float"] - 2) < 1e-15
    assert obj["df_indicator"] == "3/4"
    assert [r["a"] for r in obj["csc_rays"]] == ["0"]
    code, out, _ = call(capsys, "futaki", str(CONFIGS / "ruled_surface.json"), "--ellz", "1/2,-1")
    assert code == 0 and json.loads(out)["futaki"]["sign"] in "+-"
    flipped = json.loads(out)["futaki"]["sign"]
    code, out, _ = call(capsys, "futaki", str(CONFIGS / "ruled_surface.json"), "--ellz", "-1/2,1")
    assert code == 0 and json.loads(out)["futaki"]["sign"] == {"+": "-", "-": "+"}[flipped]


def test_csc_command(tmp_path, capsys):
    cfg = {"factors": [{"dim": 1, "scal": "4", "p": 0, "c": "1"}], "weight": {"a": "0", "b": "1"}}
    code, out, _ = call(capsys, "csc", write(tmp_path, cfg), "--b", "1", "--search", "-1/2,1/2")
    obj = json.loads(out)
    assert code == 0 and any(r["a"] == "0" for r in obj["csc_rays"])


def test_perturb_command(tmp_path, capsys):
    code, out, _ = call(capsys, "perturb", write(tmp_path, FS_CFG), "--t", "1/40")
    obj = json.loads(out)
    assert code == 0 and obj["identity"] is True and (obj["A"], obj["B"]) == ("0", "2")


def test_scan_grid_three(tmp_path, capsys):
    code, out, _ = call(capsys, "scan", write(tmp_path, FS_CFG), "--b", "1", "--grid", "3")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "a,b,exists,A,B,min_theta,csc"
    assert [l.split(",")[:2] for l in lines[1:]] == [["-1/2", "1"], ["0", "1"], ["1/2", "1"]]


def test_scan_files_and_band(tmp_path, capsys):
    csv_path, svg_path = tmp_path / "s.csv", tmp_path / "s.svg"
    code, out, _ = call(capsys, "scan", write(tmp_path, FS_CFG), "--grid", "5",
                        "--csv", str(csv_path), "--svg", str(svg_path))
    assert code == 0 and out == ""
    assert len(csv_path.read_text().splitlines()) == 6
    svg = svg_path.read_text()
    assert svg.startswith("<svg") and svg.count('class="exists-band"') == 1


def test_scan_bands_split():
    rows = [ScanRow(Q(a), Q(1), e, Q(0), Q(0), 0.1 if e else -0.1, False, Q(0), Q(0))
            for a, e in zip((-0.5, 0, 0.5), (True, False, True))]
    assert render_svg(rows).count('class="exists-band"') == 2


def test_emit_scan_one_row_and_empty(tmp_path):
    row = ScanRow(Q(0), Q(1), True, Q(0), Q(2), 0.5, True, Q(0), Q(0))
    emit_scan([row], csv_path=str(tmp_path / "one.csv"))
    assert len((tmp_path / "one.csv").read_text().splitlines()) == 2
    with pytest.raises(ValueError):
        emit_scan([], str(tmp_path / "e.svg"), str(tmp_path / "e.csv"))
    assert not (tmp_path / "e.svg").exists() and not (tmp_path / "e.csv").exists()


def test_scan_parallel_is_ordered():
    data = AdmissibleData((BaseFactor(1, Q(2), 1, 2),))
    serial = scan(data, 1, 7)
    parallel = scan(data, 1, 7, jobs=3)
    assert serial == parallel
    assert [r.a for r in serial] == grid(Q(1), 7) == sorted(grid(Q(1), 7))


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "extremal_sasaki", "exists",
                           write(tmp_path, FS_CFG)], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["exists"] is True

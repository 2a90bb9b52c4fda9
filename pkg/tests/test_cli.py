import json

import pytest

from tetramer.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_point_json(capsys):
    code, out, _ = run(capsys, "point", "--J", "1", "--J1", "2", "--h", "0")
    assert code == 0
    assert json.loads(out)["negativities"]["mu1S1"] == pytest.approx(1.5)


def test_point_temp(capsys):
    code, out, _ = run(capsys, "point", "--J", "1", "--J1", "2", "--h", "0", "--temp", "0.5")
    assert code == 0 and json.loads(out)["params"]["beta"] == 2.0


def test_point_missing(capsys):
    code, _, err = run(capsys, "point", "--J", "1")
    assert code == 2 and "--J1" in err


def test_beta_temp_exclusive(capsys):
    with pytest.raises(SystemExit):
        main(["point", "--J", "1", "--J1", "1", "--h", "0", "--beta", "1", "--temp", "1"])


def test_gs_map_csv_env(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("TETRAMER_OUT_DIR", str(tmp_path))
    code, out, _ = run(capsys, "gs-map", "--grid", "J1_over_absJ:0:1:3,h_over_absJ:0:1:2", "--quantity", "N_mu1",
                       "--out", "g.csv")
    assert code == 0
    rows = (tmp_path / "g.csv").read_text().splitlines()
    assert len(rows) == 3 and rows[0].split(",")[1:] == ["0.0", "0.5", "1.0"]
    meta = json.loads((tmp_path / "g.csv.meta.json").read_text())
    assert meta["provenance"]["mode"] == "gs-map"


def test_thermal_map_json(capsys, tmp_path):
    out = tmp_path / "t.json"
    code, _, _ = run(capsys, "thermal-map", "--J1", "2", "--grid", "kT_over_J:0:1:3,h_over_absJ:0:1:2",
                     "--format", "json", "--out", str(out), "--isovalues")
    doc = json.loads(out.read_text())
    assert code == 0 and doc["provenance"]["params"]["J1_over_J"] == 2.0 and "isovalues" in doc


def test_material_map(capsys, tmp_path):
    code, _, err = run(capsys, "material-map", "--preset", "c", "--grid", "T_kelvin:0:80:5,B_tesla:0:100:3",
                       "--out", str(tmp_path / "m.csv"), "--jobs", "2")
    assert code == 0 and "T_threshold_K" in err


def test_monogamy_csv(capsys, tmp_path):
    code, _, _ = run(capsys, "monogamy", "--state", "0,1/2,1/2", "--format", "csv", "--out", str(tmp_path / "m.csv"))
    lines = (tmp_path / "m.csv").read_text().splitlines()
    assert code == 0 and lines[0] == "id,lhs,rhs,slack" and len(lines) == 7


def test_point_csv_rejected(capsys):
    code, _, err = run(capsys, "point", "--J", "1", "--J1", "1", "--h", "0", "--format", "csv", "--out", "x.csv")
    assert code == 2


def test_bad_grid(capsys):
    code, _, err = run(capsys, "gs-map", "--grid", "nope")
    assert code == 2 and "error" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--points", "5")
    assert code == 0 and json.loads(out)["passed"]

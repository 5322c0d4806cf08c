import json
import subprocess
import sys

import pytest

from dtcurves import io
from dtcurves.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, EXIT_RESOURCE, main
from dtcurves.config import RunConfig


def run(*argv):
    return main([str(a) for a in argv])


def test_datum_gen_is_byte_stable(tmp_path, monkeypatch):
    monkeypatch.delenv("DTCURVES_OUT", raising=False)
    assert run("datum", "gen", "--genus", 2, "--style", "chain", "-o", "a.json", "--out", tmp_path) == EXIT_OK
    assert run("datum", "gen", "--genus", 2, "--style", "chain", "-o", "b.json", "--out", tmp_path) == EXIT_OK
    a, b = (tmp_path / "a.json").read_bytes(), (tmp_path / "b.json").read_bytes()
    assert a == b
    o = json.loads(a)
    assert o["schema"] == "dtcurves.datum/1" and len(o["pants"]) == 2


def test_genus_one_is_input_error(capsys):
    assert run("datum", "gen", "--genus", 1) == EXIT_INPUT
    assert "UnsupportedGenus" in capsys.readouterr().err


def test_embed_invert_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("DTCURVES_OUT", str(tmp_path))
    vec = tmp_path / "v.json"
    vec.write_text(json.dumps({"schema": "dtcurves.dt/1", "n": [2, 1, 1], "t": [1, 0, -1]}))
    assert run("embed", "--vector", vec, "-o", "w.json") == EXIT_OK
    assert run("invert", "--iota", tmp_path / "w.json", "-o", "back.json") == EXIT_OK
    back = json.loads((tmp_path / "back.json").read_text())
    assert (back["n"], back["t"]) == ([2, 1, 1], [1, 0, -1])


def test_unknown_schema_rejected(capsys):
    bad = '{"schema": "dtcurves.dt/7", "n": [0, 0, 0], "t": [0, 0, 0]}'
    assert run("embed", "--vector", bad) == EXIT_INPUT
    assert "unknown schema" in capsys.readouterr().err


def test_missing_schema_accepted(capsys):
    assert run("embed", "--vector", '{"n": [0, 0, 0], "t": [1, 0, 0]}') == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["nprime"] == [2, 0, 0]


def test_non_image_is_input_error():
    assert run("invert", "--iota", '{"n": [0, 0, 0], "nprime": [2, 0, 0], "ndprime": [4, 0, 0]}') == EXIT_INPUT


def test_oracle_point_and_verify(tmp_path, capsys):
    assert run("oracle", "point", "--case", 1, "--n", 3, "--t", 1, "--ni", 1, 1, 0, 2) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["oracle"] == 4
    assert run("oracle", "verify", "--case", 2, "--max", 5, "--out", tmp_path) == EXIT_OK
    rep = json.loads((tmp_path / "report.json").read_text())
    assert rep["passed"] and rep["schema"] == io.REPORT_SCHEMA


def test_census_csv_and_limit(capsys):
    assert run("census", "--degree", 4) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["degree,count", "0,1", "1,1", "2,1", "3,1", "4,4"]
    assert run("census", "--degree", 6, "--max-n-vectors", 1) == EXIT_RESOURCE


def test_large_genus_gated():
    assert run("cones", "enumerate", "--datum", "chain:3") == EXIT_RESOURCE


def test_config_rejects_unknown_keys(tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps({"genus": 2, "bogus": 1}))
    with pytest.raises(ValueError):
        RunConfig.from_file(p)


def test_console_script_help():
    r = subprocess.run([sys.executable, "-m", "dtcurves.cli", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "oracle" in r.stdout


@pytest.mark.slow
def test_cones_enumerate_check_export(tmp_path, monkeypatch):
    monkeypatch.setenv("DTCURVES_OUT", str(tmp_path))
    assert run("cones", "enumerate", "--genus2-chain", "-o", "cones.json") == EXIT_OK
    cones = tmp_path / "cones.json"
    assert run("cones", "check", "--cones", cones, "--samples", 200, "--per-cone", 5, "--pairs", 100,
               "-o", "check.json") == EXIT_OK
    assert json.loads((tmp_path / "check.json").read_text())["passed"]
    assert run("cones", "export", "--cones", cones, "--format", "csv", "-o", "p.csv") == EXIT_OK
    assert (tmp_path / "p.csv").read_text().startswith("cell,dim,face\n")
    assert run("product", "--cones", cones, "--left", '{"n": [2, 0, 0], "t": [0, 0, 0]}',
               "--right", '{"n": [0, 1, 1], "t": [0, 0, 0]}', "-o", "prod.json") == EXIT_OK
    assert json.loads((tmp_path / "prod.json").read_text())["zero"] is True

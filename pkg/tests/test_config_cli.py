import json
import re
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

import projcoh.cli as cli
from projcoh.cli import RunOptions, exit_code, format_report, main, report_digest, run
from projcoh.config import (
    PRESET_NAMES,
    ConfigError,
    dump_config,
    list_presets,
    load_config,
    load_preset,
    loads_config,
)

from conftest import preset_report

ROOT = Path(__file__).resolve().parent.parent

IDENTITY = [[int(i == j) for j in range(6)] for i in range(6)]

INDETERMINATE_YAML = """
name: undecided
lattice_type: custom
symmetry_generators: [%s]
seed_tori:
  - stabilizer: [[1, 0, 0, 0, 5, 0], [0, 1, 0, 0, 4, -1], [0, 0, 1, 0, 2, -1], [0, 0, 0, 0, 6, -1]]
  - stabilizer: [[1, 0, 0, 1, 3, 3], [0, 1, 0, 1, 2, 1], [0, 0, 1, 2, 2, 3], [0, 0, 0, 3, 4, 5]]
  - stabilizer: [[0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, -1], [0, 0, 0, 0, 1, 0]]
  - stabilizer: [[1, 1, 0, 0, 1, 0], [0, 2, 0, 0, 1, 2], [0, 0, 1, 0, 0, -1], [0, 0, 0, 1, -1, 0]]
""" % json.dumps(IDENTITY)


def write(tmp_path, text, name="cfg.yaml"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_danzer_preset_parses():
    cfg = load_preset("danzer")
    assert cfg.lattice_type == "F"
    assert all(len(s.stabilizer) == 4 for s in cfg.seed_tori)
    assert len(cfg.symmetry_generators) >= 1


def test_offsets_are_exact(tmp_path):
    text = INDETERMINATE_YAML.replace(
        "[0, 0, 0, 0, 1, 0]]\n", '[0, 0, 0, 0, 1, 0]]\n    offset: ["1/2", "0", "0", "0", "0", "-2/6"]\n', 1)
    cfg = load_config(write(tmp_path, text))
    assert cfg.seed_tori[2].offset == (Fraction(1, 2), 0, 0, 0, 0, Fraction(-1, 3))


def test_rank_deficient_seed_is_rejected():
    text = INDETERMINATE_YAML.replace("[0, 0, 0, 0, 6, -1]]", "[2, 0, 0, 0, 10, 0]]")
    with pytest.raises(ConfigError, match="rank 3"):
        loads_config(text)


@pytest.mark.parametrize("bad,message", [
    ("name: x\nseed_tori: [\n", "line"),
    ("name: x\n", "symmetry_generators"),
    ("- 1\n", "mapping"),
])
def test_config_errors_have_context(bad, message):
    with pytest.raises(ConfigError, match=message):
        loads_config(bad)


def test_float_offsets_are_refused():
    text = INDETERMINATE_YAML.replace(
        "[0, 0, 0, 0, 1, 0]]\n", "[0, 0, 0, 0, 1, 0]]\n    offset: [0.5, 0, 0, 0, 0, 0]\n", 1)
    with pytest.raises(ConfigError, match="p/q"):
        loads_config(text)


def test_non_unimodular_generator_is_refused():
    text = INDETERMINATE_YAML.replace("[[1, 0, 0, 0, 0, 0]", "[[2, 0, 0, 0, 0, 0]", 1)
    with pytest.raises(ConfigError, match="unimodular"):
        loads_config(text)


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_round_trip(name):
    cfg = load_preset(name)
    assert loads_config(dump_config(cfg)) == cfg


def test_list_presets():
    rows = {p["name"]: p for p in list_presets()}
    assert len(rows) == 4
    assert (rows["danzer"]["lattice_type"], rows["danzer"]["planes"]) == ("F", "5-fold")
    assert (rows["ammann-kramer"]["lattice_type"], rows["ammann-kramer"]["planes"]) == ("P", "mirror")


def test_presets_match_their_derivation():
    out = subprocess.run([sys.executable, str(ROOT / "demos" / "derive_presets.py"), "--check"],
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stdout + out.stderr


def test_preset_provenance_comments():
    for name in PRESET_NAMES:
        text = (ROOT / "src" / "projcoh" / "presets" / f"{name}.yaml").read_text()
        assert re.search(r"^# source: .*\d{4}", text, re.M)


def test_run_reports_danzer():
    r = preset_report("danzer")
    assert r["H"][3] == {"free_rank": 20, "factors": [2]}
    assert r["chi"] == 10
    assert r["counts"]["L2"] == 6
    assert r["s3_status"] == "FreeByM1"
    assert exit_code(r) == 0


def test_json_round_trip_and_determinism():
    r = preset_report("danzer")
    assert json.loads(cli.report_json(r)) == r
    again = run(load_preset("danzer"), RunOptions())
    assert report_digest(again) == report_digest(r)


def test_every_printed_number_is_in_the_json():
    r = preset_report("ammann-kramer")
    text = format_report(r)
    blob = cli.report_json(r)
    printed = set(re.findall(r"(?<![\w.])\d+(?![\w.])", text.split("config sha256")[0]))
    stored = set(re.findall(r"\d+", blob))
    assert printed <= stored | {"0", "1", "2", "3", "4"}


def test_cli_compute_writes_json(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["compute", "danzer", "--json", str(out), "--prime", "3"]) == 0
    data = json.loads(out.read_text())
    assert data["rank_tables"]["3"] == [1, 7, 16, 20]
    assert "H^3 = Z^20 + Z_2" in capsys.readouterr().out


def test_cli_verify(capsys):
    assert main(["compute", "danzer", "--verify", "--json", "-"]) == 0
    data = json.loads(capsys.readouterr().out)
    primes = {c["prime"] for c in data["verification"] if "prime" in c}
    assert primes == {2}
    assert any("oracle" in c for c in data["verification"])
    assert all(c["passed"] for c in data["verification"])


def test_cli_list_and_show(capsys):
    assert main(["list-presets"]) == 0
    assert "canonical-d6" in capsys.readouterr().out
    assert main(["show-preset", "danzer"]) == 0
    assert "seed_tori" in capsys.readouterr().out
    assert main(["show-preset", "penrose"]) == 2


def test_exit_code_config_error(tmp_path):
    assert main(["compute", str(tmp_path / "missing.yaml")]) == 2
    assert main(["compute", "no-such-preset"]) == 2
    assert main(["compute", str(write(tmp_path, "name: [\n"))]) == 2
    assert main(["compute", "danzer", "--prime", "4"]) == 2


def test_exit_code_non_generic(tmp_path):
    text = INDETERMINATE_YAML.split("seed_tori:")[0] + """seed_tori:
  - stabilizer: [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0]]
  - stabilizer: [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 1, 0]]
"""
    assert main(["compute", str(write(tmp_path, text))]) == 3


def test_exit_code_indeterminate(tmp_path, capsys):
    code = main(["compute", str(write(tmp_path, INDETERMINATE_YAML)), "--verify"])
    assert code == 4
    out = capsys.readouterr().out
    assert "Indeterminate" in out and "skipped" in out


def test_exit_code_inconsistent(monkeypatch):
    monkeypatch.setattr(cli, "check_invariants", lambda arr, result: ["forced failure"])
    assert main(["compute", "danzer"]) == 5


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "projcoh", "list-presets"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "danzer" in out.stdout

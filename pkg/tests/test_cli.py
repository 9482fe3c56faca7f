from __future__ import annotations

import io
import json
import shutil
import subprocess
import sys

import pytest

from pruferlab.cli import main
from pruferlab.harness import default_corpus_dir

Z12 = '{"kind": "zmod", "n": 12}'
SQUARES = '{"kind": "poly_quotient", "p": 2, "vars": ["x", "y"], "relations": ["x^2", "y^2"]}'


@pytest.fixture
def spec_file(tmp_path):
    def write(text, name="ring.json"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_build_summary_line(spec_file, capsys):
    code, out, _ = run(["build", spec_file(Z12)], capsys)
    assert code == 0
    assert out.strip() == "order=12 char=12 units=4 idempotents=4 ideals=6 factors=[4,3]"


def test_build_machine(spec_file, capsys):
    code, out, _ = run(["build", spec_file(Z12), "--format", "machine"], capsys)
    assert code == 0 and json.loads(out)["ring"] == "Z/12"


def test_build_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(Z12))
    code, out, _ = run(["build", "-"], capsys)
    assert code == 0 and out.startswith("order=12")


def test_classify_table(spec_file, capsys):
    code, out, _ = run(["classify", spec_file(SQUARES), "--degree-bound", "1"], capsys)
    assert code == 0
    assert "pruefer=true" in out
    assert "gaussian=refuted(f=x+y*T,g=x+y*T)  c(fg)=(0) c(f)c(g)=(x*y)" in out


def test_classify_machine(spec_file, capsys):
    code, out, _ = run(["classify", spec_file(Z12), "--format", "machine"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["ring"]["description"] == "Z/12"
    assert doc["verdicts"]["arithmetical"] is True and doc["verdicts"]["wdim_class"] == "inf"


def test_parse_errors_exit_2(spec_file, capsys):
    code, _, err = run(["build", spec_file('{"kind": "zmod", "n": 0}')], capsys)
    assert code == 2 and "$.n" in err
    code, _, _ = run(["build", spec_file("{not json")], capsys)
    assert code == 2
    code, _, _ = run(["build", "/nonexistent/ring.json"], capsys)
    assert code == 2
    code, _, _ = run(["search", "pruefer and"], capsys)
    assert code == 2


def test_bad_config_exit_2(spec_file, monkeypatch, capsys):
    code, _, _ = run(["build", spec_file(Z12), "--degree-bound", "0"], capsys)
    assert code == 2
    monkeypatch.setenv("PRUFERLAB_ORDER_CAP", "many")
    code, _, _ = run(["build", spec_file(Z12)], capsys)
    assert code == 2


def test_construction_errors_exit_3(spec_file, monkeypatch, capsys):
    code, _, err = run(["build", spec_file('{"kind": "zmod", "n": 5000}')], capsys)
    assert code == 3 and "OrderLimitExceeded" in err
    code, _, _ = run(["classify", spec_file('{"kind": "zmod", "n": 1}')], capsys)
    assert code == 3
    infinite = '{"kind": "poly_quotient", "p": 2, "vars": ["x", "y"], "relations": ["x^2"]}'
    code, _, _ = run(["build", spec_file(infinite)], capsys)
    assert code == 3


def test_order_cap_flag_beats_env(spec_file, monkeypatch, capsys):
    monkeypatch.setenv("PRUFERLAB_ORDER_CAP", "8")
    code, _, _ = run(["build", spec_file(Z12)], capsys)
    assert code == 3
    code, _, _ = run(["build", spec_file(Z12), "--order-cap", "16"], capsys)
    assert code == 0


def test_verify_wrong_expected_exits_1(tmp_path, capsys):
    entry = {"name": "z4", "spec": {"kind": "zmod", "n": 4}, "expected": {"semihereditary": True}}
    (tmp_path / "z4.json").write_text(json.dumps(entry))
    code, out, _ = run(["verify", "--corpus", str(tmp_path)], capsys)
    assert code == 1 and "FAIL expected: z4" in out


def test_verify_small_corpus_passes(tmp_path, capsys):
    for name in ("z6", "f2_x2"):
        shutil.copy(default_corpus_dir() / f"{name}.json", tmp_path / f"{name}.json")
    code, out, _ = run(["verify", "--corpus", str(tmp_path)], capsys)
    assert code == 0 and "fail=0 skipped=" in out.splitlines()[-1]


def test_verify_empty_corpus(tmp_path, capsys):
    code, out, _ = run(["verify", "--corpus", str(tmp_path), "--format", "machine"], capsys)
    assert code == 0 and json.loads(out)["summary"]["checks"] == 0
    code, _, _ = run(["verify", "--corpus", str(tmp_path / "missing")], capsys)
    assert code == 2


def test_search_machine(capsys):
    code, out, _ = run(["search", "gaussian and not arithmetical", "--max-order", "8", "--format", "machine"],
                       capsys)
    doc = json.loads(out)
    assert code == 0 and doc["matches"][0]["name"] == "f2_xy_m2"


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pruferlab.cli", "build", "-"], input=Z12,
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("order=12")

import json
import subprocess
import sys

import pytest

from hyperchow.chowcore import ChowPresentation
from hyperchow.cli import main
from hyperchow.verifykit import SuiteReport


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_present_text(capsys):
    code, out, _ = run(capsys, "present", "--family", "H", "--g", "2", "--n", "1", "--format", "text")
    assert code == 0
    assert "Z[psi]/(40 psi)" in out
    # raw relations are shown together with the simplified form
    assert "relations:" in out and "L: l1 - 3 * l2" in out


def test_present_trivial(capsys):
    code, out, _ = run(capsys, "present", "--family", "M0", "--g", "2", "--n", "3")
    assert code == 0 and out.strip().splitlines()[-1] == "Z"


def test_present_asserted_range(capsys):
    code, out, _ = run(capsys, "present", "--family", "H", "--g", "3", "--n", "5")
    assert code == 0
    assert "Z[psi]/(2 psi)" in out and "not recomputed" in out


def test_present_json_roundtrip(capsys):
    code, out, _ = run(capsys, "present", "--family", "M0", "--g", "3", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["simplified"] == "Z[l]/(6 l)" and data["checks_pass"] is True
    pres = ChowPresentation.from_json(data)
    assert json.loads(pres.dumps()) == {k: v for k, v in data.items() if k not in ("simplified", "checks_pass")}


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["picard", "--family", "H", "--g", "3", "--n", "2"], "Z/12, generator psi_inf"),
        (["picard", "--family", "M0", "--g", "2", "--n", "1"], "Z/20"),
        (["picard", "--family", "M0", "--g", "2", "--n", "3"], "trivial"),
    ],
)
def test_picard(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.startswith(expected)


def test_picard_json(capsys):
    code, out, _ = run(capsys, "picard", "--g", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 40 and data["generator_order"] == 40


@pytest.mark.parametrize(
    "argv",
    [
        ["present", "--family", "H", "--g", "2", "--n", "9"],
        ["present", "--g", "1"],
        ["verify", "--g-min", "5", "--g-max", "2"],
        ["thm12", "--g", "7"],
        ["picard", "--family", "X", "--g", "2"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--g-min", "2", "--g-max", "6")
    assert code == 0
    assert "FAIL" not in out
    assert out.strip().splitlines()[-1].endswith("checks passed")


def test_verify_json_roundtrip(capsys):
    code, out, _ = run(capsys, "verify", "--g-min", "2", "--g-max", "2", "--format", "json")
    assert code == 0
    report = SuiteReport.from_jsonl(out)
    assert report.passed and report.to_jsonl() == out
    assert all(set(json.loads(line)) == {"check", "family", "g", "n", "pass", "witness"} for line in out.splitlines())


def test_output_file(tmp_path, capsys):
    target = tmp_path / "thm12.json"
    code, out, _ = run(capsys, "thm12", "--g", "2", "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["pass"] is True and data["witness"]["degree"] == 7


def test_thm12_text(capsys):
    code, out, _ = run(capsys, "thm12", "--g", "3")
    assert code == 0 and "not in the ideal" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperchow", "picard", "--g", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("Z/40")

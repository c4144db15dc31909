"""Command-line interface: exit codes, text and JSON output, --out."""

import json
import subprocess
import sys

import pytest

from flagindex.cli import main
from flagindex.galgebra import parse_presentation
from flagindex.flagcoh import flag_presentation


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_index_text_verify(capsys):
    code, out, _ = run(
        ["index", "--p", "3", "--n", "1", "--field", "complex", "--verify"], capsys
    )
    assert code == 0
    assert "UAndV with l = 3" in out
    assert "[MATCH]" in out


def test_index_json_round_trip(capsys):
    code, out, _ = run(
        ["index", "--p", "3", "--n", "1", "--field", "real", "--json", "--verify"],
        capsys,
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["shape"] == "VOnly" and rec["l"] == 2
    assert rec["match"] is True
    assert json.loads(json.dumps(rec)) == rec


def test_flag_cohomology_json_presentation_round_trip(capsys):
    code, out, _ = run(
        ["flag-cohomology", "--field", "complex", "--j", "1", "--r", "3",
         "--p", "3", "--depth", "6", "--json"],
        capsys,
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["series"] == [1, 0, 2, 0, 2, 0, 1]
    assert rec["oracle"] == rec["series"]
    assert rec["gaussian"] == rec["series"]
    assert rec["match"] is True
    # the rendered presentation parses back to the object the CLI started from
    assert parse_presentation(rec["presentation"], 3) == flag_presentation(
        "complex", 1, 3, 3
    )


def test_flag_cohomology_oracle_divergence_exit(capsys):
    args = ["flag-cohomology", "--field", "real", "--j", "3", "--r", "3",
            "--p", "3", "--depth", "16"]
    code, out, _ = run(args, capsys)
    assert code == 0
    assert "unavailable" in out
    code, out, _ = run(args + ["--verify"], capsys)
    assert code == 1


def test_wreath_class_text(capsys):
    code, out, _ = run(
        ["wreath-class", "--field", "complex", "--n", "1", "--p", "3"], capsys
    )
    assert code == 0
    assert "c1 (degree 2) = 1*O(1|1|c1)" in out
    assert "c3 (degree 6) = 1*P(c1)" in out


def test_wreath_class_real_json(capsys):
    code, out, _ = run(
        ["wreath-class", "--field", "real", "--n", "2", "--p", "3", "--json"],
        capsys,
    )
    assert code == 0
    rec = json.loads(out)
    names = [c["name"] for c in rec["classes"]]
    assert names == ["p1", "p2", "p3", "e6"]
    assert rec["classes"][-1]["text"] == "1*P(e2)"


def test_verify_relations_exit(capsys):
    code, out, _ = run(
        ["verify-relations", "--p", "3", "--n", "3", "--field", "real"], capsys
    )
    assert code == 0
    assert "all relations verified" in out
    assert "band" in out and "top" in out


def test_shadows_text(capsys):
    code, out, _ = run(["shadows", "--p", "3", "--n", "3", "--field", "real"], capsys)
    assert code == 0
    assert "maxR = 7" in out
    assert "boundary reproduced" in out
    code, out, _ = run(["shadows", "--p", "3", "--n", "2", "--field", "real"], capsys)
    assert "one tighter" in out


def test_selftest_runs_clean(capsys):
    code, out, _ = run(["selftest"], capsys)
    assert code == 0
    assert "7 checks, 7 passed, 0 failed" in out


def test_usage_errors(capsys):
    # argparse rejects missing arguments and unknown choices with status 2
    with pytest.raises(SystemExit) as e:
        main(["index", "--p", "3", "--field", "complex"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["index", "--p", "3", "--n", "1", "--field", "padic"])
    assert e.value.code == 2
    # structural errors from the library surface as usage errors too
    code, _, err = run(["index", "--p", "4", "--n", "1", "--field", "complex"], capsys)
    assert code == 2
    assert "odd prime" in err


def test_out_writes_file_and_keeps_stdout_clean(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, err = run(
        ["shadows", "--p", "3", "--n", "1", "--field", "complex",
         "--json", "--out", str(target)],
        capsys,
    )
    assert code == 0
    assert out == ""
    assert str(target) in err
    rec = json.loads(target.read_text())
    assert rec["maxR"] == 2 and rec["sharp"] is True


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "flagindex",
         "index", "--p", "3", "--n", "2", "--field", "complex", "--verify"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "[MATCH]" in proc.stdout

import json

import pytest

from pathideals.cli import main

from conftest import fixture_path

CATERPILLAR = fixture_path("caterpillar_7.txt")
C5_PENDANT = fixture_path("c5_pendant_6.txt")
C6_PENDANT = fixture_path("c6_pendant_7.txt")
C7_TAIL = fixture_path("c7_tail_11.txt")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_paths_text(capsys):
    code, out, _ = run(capsys, "paths", CATERPILLAR)
    assert code == 0
    assert "6 path(s) on 3 vertices; 6 ideal generator(s)" in out
    assert "x1-x2-x3" in out


def test_paths_json_and_t2(capsys):
    code, out, _ = run(capsys, "paths", "--format", "json", CATERPILLAR)
    assert code == 0
    obj = json.loads(out)
    assert len(obj["paths"]) == 6 and obj["generators"] == 6
    code, out, _ = run(capsys, "paths", "--t", "2", CATERPILLAR)
    assert code == 0
    assert "6 path(s) on 2 vertices" in out


def test_paths_empty_file(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("# no edges\n")
    code, out, _ = run(capsys, "paths", str(empty))
    assert code == 0
    assert "0 path(s)" in out


@pytest.mark.parametrize(
    "path,expected", [(C5_PENDANT, 2), (C6_PENDANT, 3), (C7_TAIL, 6)]
)
def test_reg_json_golden(capsys, path, expected):
    code, out, _ = run(capsys, "reg", "--format", "json", path)
    assert code == 0
    assert json.loads(out)["reg"] == expected


def test_reg_rational_field(capsys):
    code, out, _ = run(capsys, "reg", "--format", "json", "--field", "q", C6_PENDANT)
    assert code == 0
    obj = json.loads(out)
    assert obj["reg"] == 3 and obj["field"] == "q"


def test_reg_text_and_csv(capsys):
    code, out, _ = run(capsys, "reg", CATERPILLAR)
    assert code == 0
    assert "reg(R/I3) = 4" in out
    code, out, _ = run(capsys, "reg", "--format", "csv", CATERPILLAR)
    assert code == 0
    assert out.splitlines()[0] == "i,j,beta"


def test_nu3_outputs(capsys):
    code, out, _ = run(capsys, "nu3", CATERPILLAR)
    assert code == 0
    assert "nu3 = 2" in out and "x1-x2-x7" in out
    code, out, _ = run(capsys, "nu3", "--format", "json", C7_TAIL)
    assert code == 0
    assert json.loads(out)["nu3"] == 2


def test_verify_single_unicyclic(capsys):
    code, out, _ = run(capsys, "verify", "--which", "unicyclic", C7_TAIL)
    assert code == 0
    report = json.loads(out.splitlines()[0])
    assert report["defect"] == 2
    assert all(c["pass"] for c in report["checks"])


def test_verify_colon_on_fixture(capsys):
    code, out, _ = run(capsys, "verify", "--which", "colon", CATERPILLAR)
    assert code == 0
    assert len(out.splitlines()) == 6  # one report per edge


def test_verify_family_batch_and_output_file(tmp_path, capsys):
    out_file = tmp_path / "report.jsonl"
    code, out, _ = run(
        capsys,
        "verify", "--family", "tree", "--n", "4..6", "--count", "6",
        "--seed", "3", "--output", str(out_file),
    )
    assert code == 0
    assert out == ""
    lines = out_file.read_text().splitlines()
    assert len(lines) == 6
    assert all(json.loads(line)["defect"] == 0 for line in lines)


def test_verify_jobs_do_not_change_bytes(capsys):
    args = ["verify", "--family", "tree", "--n", "4..6", "--count", "6", "--seed", "3"]
    code1, out1, _ = run(capsys, *args, "--jobs", "1")
    code2, out2, _ = run(capsys, *args, "--jobs", "2")
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_csv_format(capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "random", "--n", "4..6", "--count", "3",
        "--seed", "0", "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "n,family,seed,reg,nu3,defect,pass"


def test_verify_needs_exactly_one_input(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2 and "exactly one input" in err
    code, _, err = run(capsys, "verify", CATERPILLAR, "--family", "tree")
    assert code == 2


def test_search_writes_histogram_and_exemplars(tmp_path, capsys):
    out_dir = tmp_path / "out"
    code, out, _ = run(
        capsys,
        "search", "--family", "unicyclic", "--n", "5..7", "--count", "9",
        "--seed", "1", "--out", str(out_dir),
    )
    assert code == 0
    assert (out_dir / "histogram.csv").read_text().splitlines()[0] == "defect,count"
    assert (out_dir / "reports.jsonl").exists()
    header = json.loads((out_dir / "batch.json").read_text())
    assert header == {"family": "unicyclic", "n": "5..7", "count": 9, "seed": 1, "field": "gf2"}
    exemplars = sorted(p.name for p in out_dir.glob("unicyclic_n*_defect*.txt"))
    assert exemplars
    assert out.startswith("defect,count")


def test_search_rejects_too_small_unicyclic(capsys):
    code, _, err = run(capsys, "search", "--family", "unicyclic", "--n", "3..3")
    assert code == 2
    assert "n >= 4" in err


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("a b\na b c\n")
    code, _, err = run(capsys, "reg", str(bad))
    assert code == 2
    assert "line 2" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "nu3", "no-such-file.txt")
    assert code == 2


def test_capacity_exit_code_and_overrides(capsys, monkeypatch):
    monkeypatch.setenv("PATHIDEALS_CAP", "5")
    code, _, err = run(capsys, "reg", C5_PENDANT)  # 6 vertices > cap 5
    assert code == 3
    assert "--cap" in err
    code, out, _ = run(capsys, "reg", "--format", "json", "--cap", "6", C5_PENDANT)
    assert code == 0
    assert json.loads(out)["reg"] == 2


def test_unknown_arguments_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["reg", "--bogus"])
    assert exc.value.code == 2


def test_verify_batch_with_errored_instances_exits_one(capsys):
    code, _, err = run(
        capsys, "verify", "--family", "tree", "--n", "6..6", "--count", "2",
        "--seed", "0", "--cap", "3",
    )
    assert code == 1
    assert "CapacityError" in err


def test_failed_checks_exit_one(capsys):
    import argparse

    from pathideals.cli import _emit_reports
    from pathideals.harness import CheckResult, VerificationReport

    report = VerificationReport(
        graph={"n": 1, "edges": []}, source="synthetic", classification="tree", n=1,
        checks=[CheckResult("synthetic_check", False, "forced failure")],
    )
    args = argparse.Namespace(format="jsonl", output=None)
    assert _emit_reports([report], args) == 1
    captured = capsys.readouterr()
    assert "1 of 1 checks failed" in captured.err

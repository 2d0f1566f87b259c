"""End-to-end command-line tests: envelope shape, exit codes, determinism."""

import json
import os
import subprocess
import sys

import pytest

from bottnull import cli, ledger, nullcone, repthy

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run_cli(capsys, argv)
    assert code == 0, err
    return json.loads(out)


# ------------------------------------------------------------ envelope shape

def test_envelope_fields_and_byte_determinism(capsys):
    code, out, _ = run_cli(capsys, ["roots", "--family", "A", "--rank", "2"])
    assert code == 0
    assert out.endswith("\n") and not out.endswith("\n\n")
    doc = json.loads(out)
    assert set(doc) == {"version", "command", "root_system", "payload"}
    assert doc["version"] == "bott-null/1"
    assert doc["command"] == "roots"
    assert doc["root_system"] == {"family": "A", "rank": 2}
    # Canonical serialization: sorted keys, two-space indent, one newline.
    assert out == json.dumps(doc, indent=2, sort_keys=True) + "\n"
    payload = doc["payload"]
    assert payload["cartan"] == [[2, -1], [-1, 2]]
    assert payload["positive_count"] == 3
    assert payload["dim_g"] == 8
    assert payload["rho"] == "f:1,1"
    assert payload["positive_roots"][0]["fund"] == "f:2,-1"


def test_repeated_runs_are_identical(capsys):
    argv = ["psupp", "--family", "B", "--rank", "2", "--expr", "b^2"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second


# ---------------------------------------------------------------- exit codes

def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["roots", "--family", "A"])  # missing --rank
    assert exc.value.code == 1


def test_bad_expression_exits_1(capsys):
    code, _, err = run_cli(capsys, ["dim", "--family", "A", "--rank", "2",
                                    "--expr", "b+"])
    assert code == 1
    assert "error" in err


def test_bad_weight_exits_1(capsys):
    code, _, err = run_cli(capsys, ["bwb", "--family", "A", "--rank", "2",
                                    "--weight", "f:1"])
    assert code == 1
    code, _, err = run_cli(capsys, ["bwb", "--family", "A", "--rank", "2",
                                    "--weight", "oops"])
    assert code == 1


def test_unsupported_rank_exits_2(capsys):
    code, _, err = run_cli(capsys, ["roots", "--family", "A", "--rank", "9"])
    assert code == 2
    code, _, err = run_cli(capsys, ["roots", "--family", "B", "--rank", "3"])
    assert code == 2


def test_missing_input_file_exits_1(capsys, tmp_path):
    code, _, err = run_cli(capsys, ["nullcone", "--input",
                                    str(tmp_path / "absent.json")])
    assert code == 1


def test_ledger_gap_exits_2(capsys):
    code, _, err = run_cli(capsys, ["verdict", "--family", "A", "--rank", "3",
                                    "-r", "4"])
    assert code == 2
    assert "coverage" in err


def test_nullcone_rejects_tsv(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(nullcone.tuple_to_json(
        nullcone.MatrixTuple(n=2, matrices=(((0, 1), (0, 0)),))))
    code, _, err = run_cli(capsys, ["nullcone", "--input", str(path),
                                    "--format", "tsv"])
    assert code == 1


def test_verdict_rejects_tsv(capsys):
    code, _, err = run_cli(capsys, ["verdict", "--family", "A", "--rank", "2",
                                    "-r", "2", "--format", "tsv"])
    assert code == 1


# ------------------------------------------------------------- JSON payloads

def test_bwb_nonvanishing_payload(capsys):
    doc = run_json(capsys, ["bwb", "--family", "A", "--rank", "2",
                            "--weight", "f:-6,3"])
    payload = doc["payload"]
    assert payload == {
        "input": "f:-6,3",
        "vanishes": False,
        "degree": 2,
        "weight": "f:3,0",
        "weight_root_coords": "r:2,1",
        "dimension": 10,
    }


def test_bwb_vanishing_payload(capsys):
    doc = run_json(capsys, ["bwb", "--family", "A", "--rank", "2",
                            "--weight", "f:-1,0"])
    assert doc["payload"] == {"input": "f:-1,0", "vanishes": True}


def test_weyl_word_payload(capsys):
    doc = run_json(capsys, ["weyl", "--family", "A", "--rank", "2",
                            "--word", "2,1", "--weight", "f:-6,3"])
    payload = doc["payload"]
    assert payload["word"] == [2, 1]
    assert payload["reduced"] == [2, 1]
    assert payload["length"] == 2
    assert payload["dot"] == "f:3,0"
    assert payload["act"] == "f:3,3"
    assert len(payload["inversions"]) == 2


def test_weyl_enumeration_payload(capsys):
    doc = run_json(capsys, ["weyl", "--family", "B", "--rank", "2"])
    assert doc["payload"]["order"] == 8
    assert doc["payload"]["by_length"] == {
        "0": 1, "1": 2, "2": 2, "3": 2, "4": 1}


def test_verdict_payload(capsys):
    doc = run_json(capsys, ["verdict", "--family", "A", "--rank", "3",
                            "-r", "3"])
    payload = doc["payload"]
    assert payload["r"] == 3
    assert payload["normal"] == "no"
    assert payload["rational"] == "unknown"
    assert payload["path"] == "page-scan"
    hit = [w for w in payload["witnesses"] if w["a"] == -3 and w["b"] == 3]
    assert hit and hit[0]["module"] == [
        {"weight": "f:0,2,0", "mult": 1, "dim": 20}]


def test_decompose_payload(capsys):
    doc = run_json(capsys, ["decompose", "--family", "A", "--rank", "2",
                            "--expr", "g*g"])
    payload = doc["payload"]
    assert payload["total_dim"] == 64
    mults = {m["weight"]: m["mult"] for m in payload["modules"]}
    assert mults == {"f:0,0": 1, "f:1,1": 2, "f:3,0": 1, "f:0,3": 1,
                     "f:2,2": 1}


# ----------------------------------------------------------------- TSV views

def test_dim_tsv(capsys):
    code, out, _ = run_cli(capsys, ["dim", "--family", "A", "--rank", "2",
                                    "--expr", "g", "--format", "tsv"])
    assert code == 0
    assert out == "expr\tdim\ng\t8\n"


def test_psupp_tsv_rows(capsys):
    code, out, _ = run_cli(capsys, ["psupp", "--family", "B", "--rank", "2",
                                    "--expr", "b^2", "--format", "tsv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "degree\tweight\tmult"
    rows = [line.split("\t") for line in lines[1:]]
    assert rows == [
        ["0", "f:0,0", "4"],
        ["1", "f:0,0", "8"],
        ["2", "f:0,0", "4"],
        ["2", "f:0,1", "1"],
        ["3", "f:0,0", "1"],
    ]


def test_weights_tsv_matches_json(capsys):
    code, tsv, _ = run_cli(capsys, ["weights", "--family", "A", "--rank", "2",
                                    "--expr", "q", "--format", "tsv"])
    assert code == 0
    doc = run_json(capsys, ["weights", "--family", "A", "--rank", "2",
                            "--expr", "q"])
    rows = [line.split("\t") for line in tsv.splitlines()[1:]]
    assert rows == [[w["weight"], str(w["mult"])]
                    for w in doc["payload"]["weights"]]
    assert doc["payload"]["dim"] == 3


# ------------------------------------------------------------ nullcone files

def test_nullcone_member_and_flag(capsys, tmp_path):
    t = nullcone.MatrixTuple(n=3, matrices=(
        ((0, 1, 0), (0, 0, 0), (0, 0, 0)),
        ((0, 0, 0), (0, 0, 1), (0, 0, 0)),
    ))
    path = tmp_path / "tuple.json"
    path.write_text(nullcone.tuple_to_json(t))

    doc = run_json(capsys, ["nullcone", "--input", str(path)])
    assert doc["root_system"] is None
    assert doc["payload"] == {"op": "member", "n": 3, "r": 2, "member": True}

    doc = run_json(capsys, ["nullcone", "--input", str(path), "--op", "flag"])
    payload = doc["payload"]
    assert payload["member"] is True
    assert len(payload["flag"]) == 3
    assert all(len(vec) == 3 for vec in payload["flag"])


def test_nullcone_nonmember(capsys, tmp_path):
    t = nullcone.MatrixTuple(n=2, matrices=(
        ((0, 1), (0, 0)),
        ((0, 0), (1, 0)),
    ))
    path = tmp_path / "pair.json"
    path.write_text(nullcone.tuple_to_json(t))
    doc = run_json(capsys, ["nullcone", "--input", str(path)])
    assert doc["payload"]["member"] is False
    doc = run_json(capsys, ["nullcone", "--input", str(path), "--op", "flag"])
    assert doc["payload"] == {"op": "flag", "n": 2, "r": 2,
                              "member": False, "flag": None}


def test_nullcone_resolve(capsys, tmp_path):
    doc_in = {
        "g": [["1", "1"], ["0", "1"]],
        "matrices": [[["0", "2"], ["0", "0"]]],
    }
    path = tmp_path / "res.json"
    path.write_text(json.dumps(doc_in))
    doc = run_json(capsys, ["nullcone", "--input", str(path),
                            "--op", "resolve"])
    assert doc["payload"]["matrices"] == [[["0", "2"], ["0", "0"]]]

    doc_in["g"] = [["0", "1"], ["1", "0"]]  # swap: conjugate to lower
    path.write_text(json.dumps(doc_in))
    doc = run_json(capsys, ["nullcone", "--input", str(path),
                            "--op", "resolve"])
    assert doc["payload"]["matrices"] == [[["0", "0"], ["2", "0"]]]


def test_nullcone_malformed_json_exits_1(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, ["nullcone", "--input", str(path)])
    assert code == 1


# -------------------------------------------------------------------- report

REPORT_SYSTEMS = [("A", 2), ("A", 3), ("A", 5), ("A", 6), ("B", 2)]


@pytest.mark.parametrize("family,rank", REPORT_SYSTEMS)
def test_report_matches_golden_any_thread_count(capsys, family, rank):
    golden = os.path.join(GOLDEN_DIR, f"report_{family.lower()}{rank}.json")
    with open(golden, "r", encoding="utf-8") as fh:
        want = fh.read()
    for threads in (1, 4):
        code, out, _ = run_cli(capsys, [
            "report", "--family", family, "--rank", str(rank),
            "--threads", str(threads)])
        assert code == 0
        assert out == want


def test_report_checks_all_pass(capsys):
    doc = run_json(capsys, ["report", "--family", "A", "--rank", "2"])
    payload = doc["payload"]
    assert payload["passed"] is True
    assert all(c["status"] == "pass" for c in payload["checks"])
    ids = [c["id"] for c in payload["checks"]]
    assert ids == sorted(set(ids), key=ids.index)  # no duplicate check ids


def test_report_failure_exits_2(capsys, monkeypatch):
    # Sabotage one ingredient: the report must flag it and exit 2.
    monkeypatch.setattr(cli.repthy, "invariant_dim",
                        lambda rs, expr: 0)
    code, out, _ = run_cli(capsys, ["report", "--family", "A", "--rank", "2"])
    assert code == 2
    doc = json.loads(out)
    failed = [c["id"] for c in doc["payload"]["checks"]
              if c["status"] == "fail"]
    assert "tensor-square-a" in failed


# ------------------------------------------------------------ installed script

def test_console_script_roundtrip():
    out = subprocess.run(
        [sys.executable, "-m", "bottnull.cli", "dim", "--family", "A",
         "--rank", "3", "--expr", "b^2"],
        capture_output=True, text=True)
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["payload"] == {"expr": "b^2", "dim": 81}

from __future__ import annotations

import json

import pytest

from partcalc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_plain(capsys):
    code, out, err = run_cli(capsys, "compute", "--quantity", "pp", "--n", "3")
    assert code == 0
    assert out == "pp(3) = 6  (method: theorem)\n"
    assert err == ""


def test_compute_plain_with_r_and_parts_labels(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--quantity", "pp_r", "--n", "5", "--r", "2"
    )
    assert code == 0
    assert out == "pp_r(5; r=2) = 16  (method: theorem)\n"
    code, out, _ = run_cli(
        capsys, "compute", "--quantity", "p_a", "--n", "6", "--parts", "1,2,3"
    )
    assert code == 0
    assert out == "p_a(6; parts=1,2,3) = 7  (method: oracle-dp)\n"


def test_compute_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "compute", "--quantity", "P_r", "--n", "4", "--r", "3", "--format", "json",
    )
    assert code == 0
    row = json.loads(out)
    assert row == {
        "quantity": "P_r",
        "n": 4,
        "r": 3,
        "method": "theorem",
        "value": "51",
    }


def test_compute_csv(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--quantity", "pps", "--n", "4", "--format", "csv"
    )
    assert code == 0
    assert out == "n,value\n4,7\n"


def test_compute_method_fallback_and_strict(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--quantity", "pp", "--n", "2", "--method", "theorem"
    )
    assert code == 0
    assert "(method: oracle-dp)" in out
    code, _, err = run_cli(
        capsys,
        "compute", "--quantity", "pp", "--n", "2", "--method", "theorem", "--strict",
    )
    assert code == 1
    assert "error" in err


def test_compute_usage_errors(capsys):
    code, _, err = run_cli(capsys, "compute", "--quantity", "pp_r", "--n", "3")
    assert code == 1
    assert "requires --r" in err
    code, _, err = run_cli(capsys, "compute", "--quantity", "pp", "--n", "-2")
    assert code == 1
    code, _, err = run_cli(
        capsys, "compute", "--quantity", "pp", "--n", "3", "--parts", "1,2"
    )
    assert code == 1


def test_argparse_failures_exit_one(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(["compute", "--quantity", "nope", "--n", "3"])
    assert exc_info.value.code == 1
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc_info:
        main(["compute", "--quantity", "p_a", "--n", "3", "--parts", "1,x"])
    assert exc_info.value.code == 1
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc_info:
        main([])
    assert exc_info.value.code == 1
    capsys.readouterr()


def test_cost_guard_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "compute", "--quantity", "pp", "--n", "9", "--method", "stirling"
    )
    assert code == 3
    assert "cost guard" in err


def test_table_plain(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--quantity", "pp", "--from", "0", "--to", "5"
    )
    assert code == 0
    assert out == "0 1\n1 1\n2 3\n3 6\n4 13\n5 24\n"


def test_table_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "table", "--quantity", "ppso", "--from", "0", "--to", "6", "--format", "csv",
    )
    assert code == 0
    assert out == "n,value\n0,1\n1,1\n2,2\n3,3\n4,6\n5,8\n6,15\n"


def test_table_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "table",
        "--quantity", "P_r", "--from", "0", "--to", "4", "--r", "2",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert [int(row["value"]) for row in rows] == [1, 2, 5, 10, 20]
    assert [row["n"] for row in rows] == [0, 1, 2, 3, 4]
    assert rows[0]["method"] == "oracle-dp"
    assert rows[-1]["method"] == "theorem"


def test_table_rejects_p_a_and_bad_ranges(capsys):
    code, _, err = run_cli(
        capsys, "table", "--quantity", "p_a", "--from", "0", "--to", "3"
    )
    assert code == 1
    assert "p_a" in err
    code, _, err = run_cli(
        capsys, "table", "--quantity", "pp", "--from", "4", "--to", "2"
    )
    assert code == 1
    code, _, err = run_cli(
        capsys, "table", "--quantity", "pp", "--from", "-1", "--to", "2"
    )
    assert code == 1


def test_verify_suite_runs_clean(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "examples")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("ok  ") for line in lines[:-1])
    assert lines[-1].startswith("suite examples:")
    assert lines[-1].endswith("0 failing")


def test_verify_max_n_cap(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "oracle-consistency", "--max-n", "8"
    )
    assert code == 0
    assert "0 failing" in out


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(["verify", "--suite", "everything"])
    assert exc_info.value.code == 1
    capsys.readouterr()

"""Command line surface: exit-code partition, JSON report keys, golden
stability, file round trips, and malformed-input handling.

Every invocation goes through run() in process, so the tests see the
same code path as the installed console script.
"""

from __future__ import annotations

import json

import pytest

from tomjerry.cli import (
    EXIT_INCONCLUSIVE,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    run,
)
from tomjerry.formats import SkewMatrix, build_tom123, tom123_ring, write_matrix_file
from tomjerry.groebner import IdealPresentation, read_ideal_file, write_ideal_file
from tomjerry.ring import FieldSpec, RingSpec, parse_poly

F1021 = FieldSpec(1021)


def _json_tail(out: str) -> dict:
    """Parse the JSON document that follows the echoed configuration."""
    assert out.startswith("# config ")
    start = out.find("\n{\n")
    assert start >= 0, out
    return json.loads(out[start + 1 :])


@pytest.fixture()
def xy_ideal(tmp_path):
    ring = RingSpec(("x", "y"), (1, 1), F1021)
    path = tmp_path / "xy.ideal"
    write_ideal_file(
        path, IdealPresentation(ring, (ring.var("x"), ring.var("y")))
    )
    return str(path)


# -- config echo and exit codes -------------------------------------------------


def test_every_run_echoes_its_configuration(capsys) -> None:
    assert run(["classify", "--case", "TTT"]) == EXIT_OK
    out = capsys.readouterr().out
    first = out.splitlines()[0]
    assert first.startswith("# config subcommand=classify")
    assert "case=TTT" in first
    assert "report=text" in first


def test_missing_subcommand_is_usage_error(capsys) -> None:
    assert run([]) == EXIT_USAGE
    assert run(["classify"]) == EXIT_USAGE
    assert run(["fano", "verify"]) == EXIT_USAGE  # wants --in or --id
    capsys.readouterr()


def test_help_exits_zero_and_names_the_exit_codes(capsys) -> None:
    assert run(["--help"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "0 ok" in out and "3 inconclusive" in out


def test_subcommand_help_lists_flags(capsys) -> None:
    assert run(["fano", "verify", "--help"]) == EXIT_OK
    out = capsys.readouterr().out
    for flag in ("--in", "--id", "--seed", "--prime", "--out", "--report", "--budget"):
        assert flag in out


# -- classify -------------------------------------------------------------------


def test_classify_counts_match_the_four_cases(capsys) -> None:
    for case, count in (("TTT", 1), ("JJJ", 4), ("TTJ", 3), ("TJJ", 5)):
        assert run(["classify", "--case", case, "--report", "json"]) == EXIT_OK
        data = _json_tail(capsys.readouterr().out)
        assert data["case"] == case
        assert data["count"] == count
        assert len(data["classes"]) == count


def test_classify_golden_stability(capsys) -> None:
    assert run(["classify", "--case", "JJJ", "--report", "json"]) == EXIT_OK
    first = capsys.readouterr().out
    assert run(["classify", "--case", "JJJ", "--report", "json"]) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second


# -- pfaffian eval ----------------------------------------------------------------


def test_pfaffian_eval_even_size(tmp_path, capsys) -> None:
    ring = RingSpec(("a", "b", "c", "d", "e", "f"), (1,) * 6, F1021)
    v = ring.var
    entries = {
        (1, 2): v("a"), (1, 3): v("b"), (1, 4): v("c"),
        (2, 3): v("d"), (2, 4): v("e"), (3, 4): v("f"),
    }
    path = tmp_path / "m4.matrix"
    write_matrix_file(path, SkewMatrix(ring, 4, entries))
    assert run(["pfaffian", "eval", "--in", str(path), "--report", "json"]) == EXIT_OK
    data = _json_tail(capsys.readouterr().out)
    assert data["size"] == 4
    want = v("a") * v("f") - v("b") * v("e") + v("c") * v("d")
    assert parse_poly(data["pfaffians"]["pf"], ring) == want


def test_pfaffian_eval_writes_the_five_maximal_pfaffians(tmp_path, capsys) -> None:
    ring = tom123_ring()
    matrix, _ = build_tom123(ring)
    src = tmp_path / "tom123.matrix"
    out = tmp_path / "pf.ideal"
    write_matrix_file(src, matrix)
    code = run(["pfaffian", "eval", "--in", str(src), "--out", str(out),
                "--report", "json"])
    assert code == EXIT_OK
    data = _json_tail(capsys.readouterr().out)
    assert sorted(data["pfaffians"]) == ["pf1", "pf2", "pf3", "pf4", "pf5"]
    stored = read_ideal_file(out)
    assert len(stored.generators) == 5
    assert list(stored.generators) == list(matrix.maximal_pfaffians())


# -- format check -----------------------------------------------------------------


def test_format_check_passes_on_the_right_ideal(tmp_path, capsys) -> None:
    matrix, ideals = build_tom123(tom123_ring())
    path = tmp_path / "tom123.matrix"
    write_matrix_file(path, matrix)
    code = run(["format", "check", "--in", str(path), "--format", "tom1",
                "--ideal", ",".join(ideals[0].names), "--report", "json"])
    assert code == EXIT_OK
    data = _json_tail(capsys.readouterr().out)
    assert data["ok"] is True
    assert data["violations"] == []


def test_format_check_violation_exits_two(tmp_path, capsys) -> None:
    matrix, _ = build_tom123(tom123_ring())
    path = tmp_path / "tom123.matrix"
    write_matrix_file(path, matrix)
    code = run(["format", "check", "--in", str(path), "--format", "tom1",
                "--ideal", "z1,z2,z3,z4", "--report", "json"])
    assert code == EXIT_MISMATCH
    data = _json_tail(capsys.readouterr().out)
    assert data["ok"] is False
    assert data["violations"]


def test_format_check_wants_four_variables(tmp_path, capsys) -> None:
    matrix, _ = build_tom123(tom123_ring())
    path = tmp_path / "tom123.matrix"
    write_matrix_file(path, matrix)
    code = run(["format", "check", "--in", str(path), "--format", "tom1",
                "--ideal", "z1,z2"])
    assert code == EXIT_USAGE
    capsys.readouterr()


# -- gb utilities -----------------------------------------------------------------


def test_gb_dim_and_hilbert_and_nf(xy_ideal, capsys) -> None:
    assert run(["gb", "dim", "--in", xy_ideal, "--report", "json"]) == EXIT_OK
    data = _json_tail(capsys.readouterr().out)
    assert data == {"dimension": 0, "codimension": 2}

    assert run(["gb", "hilbert", "--in", xy_ideal, "--report", "json"]) == EXIT_OK
    data = _json_tail(capsys.readouterr().out)
    assert data["numerator"] == [1, -2, 1]
    assert data["palindromic"] is True

    assert run(["gb", "nf", "--in", xy_ideal, "--poly", "x + y",
                "--report", "json"]) == EXIT_OK
    data = _json_tail(capsys.readouterr().out)
    assert data["member"] is True

    assert run(["gb", "nf", "--in", xy_ideal, "--poly", "x + 1",
                "--report", "json"]) == EXIT_OK
    data = _json_tail(capsys.readouterr().out)
    assert data["member"] is False
    assert data["normal_form"] == "1"


def test_gb_basis_round_trip(xy_ideal, tmp_path, capsys) -> None:
    out = tmp_path / "basis.ideal"
    code = run(["gb", "basis", "--in", xy_ideal, "--out", str(out),
                "--report", "json"])
    assert code == EXIT_OK
    data = _json_tail(capsys.readouterr().out)
    assert data["size"] == 2
    stored = read_ideal_file(out)
    assert [str(g) for g in stored.generators] == data["basis"]


def test_malformed_header_is_usage_error(tmp_path, capsys) -> None:
    bad = tmp_path / "bad-ring.ideal"
    bad.write_text("not a ring header\nx\n")
    assert run(["gb", "dim", "--in", str(bad)]) == EXIT_USAGE
    assert run(["pfaffian", "eval", "--in", str(bad)]) == EXIT_USAGE
    capsys.readouterr()


def test_missing_file_is_usage_error(capsys) -> None:
    assert run(["gb", "dim", "--in", "/nonexistent/nowhere.ideal"]) == EXIT_USAGE
    capsys.readouterr()


# -- unproject --------------------------------------------------------------------


def test_unproject_build_report_and_stability(capsys) -> None:
    argv = ["unproject", "build", "--seed", "1", "--prime", "1021"]
    assert run(argv) == EXIT_OK
    first = capsys.readouterr().out
    data = _json_tail(first)
    assert data["generators"] == 20
    assert data["homogeneous"] is True
    assert data["welldefined"] is True
    assert data["inclusions"] is True
    assert data["codimension"] == 6
    assert run(argv) == EXIT_OK
    assert capsys.readouterr().out == first


def test_unproject_build_verify_round_trip(tmp_path, capsys) -> None:
    out = tmp_path / "tom123.ideal"
    assert run(["unproject", "build", "--seed", "2", "--out", str(out)]) == EXIT_OK
    capsys.readouterr()
    assert run(["unproject", "verify", "--in", str(out),
                "--report", "json"]) == EXIT_OK
    data = _json_tail(capsys.readouterr().out)
    assert data["match"] is True
    assert data["seed"] == 2
    assert data["codimension"] == 6


def test_unproject_rejects_bad_symbolic_cs(capsys) -> None:
    code = run(["unproject", "build", "--symbolic-cs", "c1,q7"])
    assert code == EXIT_USAGE
    capsys.readouterr()


# -- fano -------------------------------------------------------------------------


def test_fano_build_report(capsys) -> None:
    code = run(["fano", "build", "--id", "14885", "--seed", "1",
                "--report", "json"])
    assert code == EXIT_OK
    data = _json_tail(capsys.readouterr().out)
    assert data["id"] == 14885
    assert data["seed"] == 1
    assert data["prime"] == 1021
    assert data["retries"] == 0
    assert data["codimension"] == 6
    assert data["numerator"] == [
        1, 0, 0, 0, -20, 0, 64, 0, -90, 0, 64, 0, -20, 0, 0, 0, 1,
    ]
    assert data["palindromic"] is True
    assert data["matches_target"] is True


def test_fano_verify_json_keys_and_inconclusive_exit(capsys) -> None:
    # a zero minor budget cannot certify anything: the report must say
    # inconclusive (exit 3) while every other key is still computed
    code = run(["fano", "verify", "--id", "14885", "--seed", "1",
                "--budget", "0", "--report", "json"])
    assert code == EXIT_INCONCLUSIVE
    data = _json_tail(capsys.readouterr().out)
    assert sorted(data) == [
        "codimension", "id", "numerator", "orbifold", "palindromic",
        "prime", "quasismooth", "retries", "seed",
    ]
    assert data["id"] == 14885
    assert data["codimension"] == 6
    assert data["palindromic"] is True
    assert data["orbifold"] == [
        {
            "stratum": "V(w1,w2,w3)",
            "count": 8,
            "type": "1/2(1,1,1)",
            "dimension": 1,
            "stabilized": True,
        }
    ]
    assert sorted(data["quasismooth"]) == ["conclusive", "dimension", "minors_used"]
    assert data["quasismooth"]["minors_used"] == 0
    assert data["quasismooth"]["conclusive"] is False
    # inconclusive reports carry the certified upper bound, not a guess
    assert data["quasismooth"]["dimension"] == 4


def test_fano_verify_detects_a_corrupted_file(tmp_path, capsys) -> None:
    path = tmp_path / "q14885.ideal"
    assert run(["fano", "build", "--id", "14885", "--seed", "1",
                "--out", str(path)]) == EXIT_OK
    capsys.readouterr()
    lines = path.read_text().splitlines()
    lines[-1] = "z1"  # replace the last generator
    path.write_text("\n".join(lines) + "\n")
    code = run(["fano", "verify", "--in", str(path), "--budget", "0"])
    assert code == EXIT_MISMATCH
    err = capsys.readouterr().err
    assert "differ" in err

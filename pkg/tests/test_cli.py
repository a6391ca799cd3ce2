"""Command-line surface: example invocations, JSON round trips, exit codes."""

import json

import pytest

from hopftrees.cli import main


@pytest.fixture()
def env_file(tmp_path):
    path = tmp_path / "env.json"
    path.write_text(json.dumps({"n": 1, "E1": ["x1"], "E2": ["x1^2"], "E3": ["x1^3"]}))
    return str(path)


@pytest.fixture()
def conn_file(tmp_path):
    path = tmp_path / "conn.json"
    path.write_text(json.dumps({"n": 1, "gamma": {"1,1,1": "1"}}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


def test_gl_mul_worked_example(capsys):
    code, out, _ = run(capsys, "gl", "mul", "(;())", "(;())")
    assert code == 0
    assert out == "(;()()) + (;(;()))"


def test_gl_second_worked_example(capsys):
    code, out, _ = run(capsys, "gl", "mul", "(;())", "(;(;()))")
    assert code == 0
    assert out == "(;()(;())) + (;(;()())) + (;(;(;())))"


def test_gl_antipode(capsys):
    code, out, _ = run(capsys, "gl", "antipode", "(;()())")
    assert code == 0
    assert out == "(;()()) + 2*(;(;()))"


def test_trees_count_hot(capsys):
    code, out, _ = run(capsys, "trees", "count", "--family", "hot", "--degree", "4")
    assert (code, out) == (0, "24")


def test_trees_enum_respects_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("HOPF_MAX_DEGREE", "2")
    code, _, err = run(capsys, "trees", "enum", "--family", "rooted", "--degree", "3")
    assert code == 1
    assert "cap" in err


def test_psi_expand_report(capsys, env_file):
    code, out, _ = run(
        capsys,
        "psi",
        "expand",
        "--word",
        "E3,E2,E1 - E3,E1,E2 - E2,E1,E3 + E1,E2,E3",
        "--env",
        env_file,
        "--report",
    )
    assert code == 0
    assert out == "raw_trees: 24, cancelled: 18, surviving: 6"


def test_psi_apply(capsys, env_file):
    code, out, _ = run(
        capsys, "psi", "apply", "--tree", "(;(E1))", "--env", env_file, "--f", "x1^3"
    )
    assert (code, out) == (0, "3*x1^3")


def test_psi_check_diagram(capsys, env_file):
    code, out, _ = run(
        capsys, "psi", "check-diagram", "--word", "E1,E2", "--env", env_file, "--f", "x1^3"
    )
    assert code == 0
    assert out.startswith("ok")


def test_conn_apply(capsys, env_file, conn_file):
    code, out, _ = run(
        capsys, "conn", "apply", "E1", "E2", "--connection", conn_file, "--env", env_file
    )
    assert (code, out) == (0, "(2*x1^2 + x1^3)*D1")


def test_conn_check_module(capsys, env_file, conn_file):
    code, out, _ = run(
        capsys, "conn", "check-module", "--connection", conn_file, "--env", env_file,
        "--max-degree", "2",
    )
    assert code == 0
    assert out.startswith("module law: ok")


def test_perm_round_trip_commands(capsys):
    code, out, _ = run(capsys, "perm", "to-tree", "(1 3 2)")
    assert (code, out) == (0, "(;(1;(2)(3)))")
    code, out, _ = run(capsys, "perm", "from-tree", "(;(1;(2)(3)))")
    assert (code, out) == (0, "(1 3 2)")


def test_shuffle_mul(capsys):
    code, out, _ = run(capsys, "shuffle", "mul", "x1.x2", "x3")
    assert code == 0
    assert out == "x1.x2.x3 + x1.x3.x2 + x3.x1.x2"


def test_ck_pair(capsys):
    code, out, _ = run(capsys, "ck", "pair", "(;()())", "()*()")
    assert (code, out) == (0, "2")


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "shuffle", "--max-degree", "2")
    assert code == 0
    assert "result: PASS" in out


def test_verify_failure_maps_to_exit_two(capsys):
    from hopftrees.axioms import AxiomCheck, VerificationReport
    from hopftrees.cli import _report_exit

    class Args:
        format = "text"

    failing = VerificationReport("stub", [AxiomCheck("unit", 1, False, "x")])
    assert _report_exit(Args, failing) == 2
    capsys.readouterr()


def test_parse_error_exit_one(capsys):
    code, _, err = run(capsys, "gl", "mul", "(;(", "(;())")
    assert code == 1
    assert "position" in err


def test_stdin_element(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("(;())"))
    code, out, _ = run(capsys, "gl", "coprod", "-")
    assert code == 0
    assert out == "() (x) (;()) + (;()) (x) ()"


def test_json_output_round_trips(capsys, env_file):
    cases = [
        ("gl", "mul", "(;())", "(;())"),
        ("gl", "coprod", "(;()())"),
        ("ck", "coprod", "(;())"),
        ("ck", "pair", "(;()())", "()*()"),
        ("shuffle", "mul", "x1", "x2"),
        ("perm", "mul", "(1)", "(1)"),
        ("perm", "coprod", "(2)(1)"),
        ("trees", "enum", "--family", "rooted", "--degree", "3"),
        ("trees", "count", "--family", "hot", "--degree", "3"),
        ("psi", "apply", "--tree", "(;(E1))", "--env", env_file, "--f", "x1^2"),
        ("verify", "--algebra", "shuffle", "--max-degree", "1"),
    ]
    for argv in cases:
        code = main([*argv, "--format", "json"])
        out = capsys.readouterr().out
        assert code == 0, argv
        payload = json.loads(out)
        assert json.dumps(payload) == out.strip(), argv


def test_json_combination_schema(capsys):
    code = main(["gl", "coprod", "(;()())", "--format", "json"])
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert set(payload) == {"terms"}
    for term in payload["terms"]:
        assert set(term) == {"coeff", "basis"}
        assert isinstance(term["basis"], list) and len(term["basis"]) == 2

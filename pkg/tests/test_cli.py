import json

import pytest

from euleredit.cli import ParseError, format_instance, main, parse_instance

P3 = "p cdpe ea 3 2\ne 0 1\ne 1 2\nd 0 1\nd 2 1\n"


def test_parse_basic():
    inst_file = parse_instance(P3)
    assert inst_file.kind == "cdpe"
    assert inst_file.opset.value == "ea"
    assert inst_file.instance.graph.edges == {(0, 1), (1, 2)}
    assert inst_file.instance.delta == (1, 0, 1)
    assert inst_file.instance.budget is None


def test_parse_budget_and_comments():
    inst_file = parse_instance("c a comment\np dpe ea+ed 2 1 5\ne 0 1\n")
    assert inst_file.kind == "dpe"
    assert inst_file.instance.budget == 5
    assert not inst_file.connected


def test_parse_directed():
    inst_file = parse_instance("p cdbe ea 3 2\na 0 1\na 1 0\nd 1 2\nd 2 -2\n")
    assert inst_file.directed
    assert inst_file.instance.digraph.arcs == {(0, 1), (1, 0)}
    assert inst_file.instance.delta == (0, 2, -2)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty"),
        ("p what ea 2 0\n", "unknown problem kind"),
        ("p cdpe ed 2 0\n", "unsupported operation set"),
        ("p cdpe ea 2 x\n", "integers"),
        ("p cdpe ea 0 0\n", "positive"),
        ("p cdpe ea 2 1\n", "expected 1 e-lines"),
        ("p cdpe ea 2 1\ne 0 2\n", "out of range"),
        ("p cdpe ea 2 1\ne 1 1\n", "loops"),
        ("p cdpe ea 2 2\ne 0 1\ne 1 0\n", "duplicate"),
        ("p cdpe ea 2 1\na 0 1\n", "unknown line type"),
        ("p cdbe ea 2 1\ne 0 1\n", "unknown line type"),
        ("p cdpe ea 2 0\nd 0 2\n", "0 or 1"),
        ("p cdpe ea 2 0\nd 0 1\nd 0 1\n", "duplicate delta"),
    ],
)
def test_parse_errors_carry_line_numbers(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert fragment in str(err.value)
    assert str(err.value).startswith("line ")


def test_format_parse_roundtrip():
    inst_file = parse_instance(P3)
    assert parse_instance(format_instance(inst_file)) == inst_file
    directed = parse_instance("p dbe ea+ed 3 2 7\na 2 0\na 1 0\nd 1 1\nd 0 -1\n")
    assert parse_instance(format_instance(directed)) == directed


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_command(tmp_path, capsys):
    path = tmp_path / "inst.txt"
    path.write_text(P3)
    code, out, err = _run(capsys, "solve", "--in", str(path))
    assert code == 0
    record = json.loads(out)
    assert record["verdict"] == "Solved"
    assert record["opt"] == 0
    assert record["counts"] == {"p": 1, "q": 0, "t": 0, "T": 0, "F": 0}
    assert "Solved" in err


def test_solve_no_instance_exit_code(tmp_path, capsys):
    path = tmp_path / "inst.txt"
    path.write_text("p cdpe ea 1 0\nd 0 1\n")
    code, out, _ = _run(capsys, "solve", "--in", str(path))
    assert code == 2
    assert json.loads(out)["verdict"] == "NoInstance"


def test_solve_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("p cdpe ea 2 1\n")
    code, _, err = _run(capsys, "solve", "--in", str(path))
    assert code == 1 and "error:" in err
    code, _, err = _run(capsys, "solve", "--in", str(tmp_path / "missing.txt"))
    assert code == 1


def test_solve_no_connectivity_flag(tmp_path, capsys):
    path = tmp_path / "inst.txt"
    path.write_text("p cdpe ea 4 2\ne 0 1\ne 2 3\nd 0 1\nd 1 1\nd 2 1\nd 3 1\n")
    code, out, _ = _run(capsys, "solve", "--in", str(path))
    assert json.loads(out)["opt"] == 4  # two K2s must be joined by a C4
    code, out, _ = _run(capsys, "solve", "--in", str(path), "--no-connectivity")
    assert json.loads(out)["opt"] == 0


def test_verify_command(tmp_path, capsys):
    inst = tmp_path / "inst.txt"
    inst.write_text(P3)
    sol = tmp_path / "sol.json"
    sol.write_text(json.dumps({"additions": [], "deletions": [], "opt": 0}))
    code, out, _ = _run(capsys, "verify", "--in", str(inst), "--sol", str(sol))
    assert code == 0 and json.loads(out)["valid"]
    sol.write_text(json.dumps({"additions": [[0, 2]], "deletions": []}))
    code, out, _ = _run(capsys, "verify", "--in", str(inst), "--sol", str(sol))
    assert code == 2 and not json.loads(out)["valid"]


def test_oracle_command(tmp_path, capsys):
    path = tmp_path / "inst.txt"
    path.write_text("p cdpe ea 4 0\n")
    code, out, _ = _run(capsys, "oracle", "--in", str(path))
    assert code == 0 and json.loads(out)["opt"] == 4
    code, out, _ = _run(capsys, "oracle", "--in", str(path), "--kmax", "3")
    assert code == 2 and json.loads(out)["verdict"] == "NoInstance"


def test_oracle_agrees_with_solve(tmp_path, capsys):
    for seed in range(10):
        gen_code, text, _ = _run(
            capsys, "gen", "--kind", "cdpe", "-n", "5", "--seed", str(seed)
        )
        assert gen_code == 0
        path = tmp_path / "inst.txt"
        path.write_text(text)
        s_code, s_out, _ = _run(capsys, "solve", "--in", str(path))
        o_code, o_out, _ = _run(capsys, "oracle", "--in", str(path))
        assert s_code == o_code
        assert json.loads(s_out)["opt"] == json.loads(o_out)["opt"]


def test_gen_is_deterministic(capsys):
    runs = [
        _run(capsys, "gen", "--kind", "cdbe", "-n", "6", "--seed", "42")[1]
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    other = _run(capsys, "gen", "--kind", "cdbe", "-n", "6", "--seed", "43")[1]
    assert other != runs[0]
    parsed = parse_instance(runs[0])
    assert sum(parsed.instance.delta) == 0


def test_gen_requires_seed(capsys):
    with pytest.raises(SystemExit):
        main(["gen", "--kind", "cdpe", "-n", "5"])


def test_bench_command(capsys):
    code, out, _ = _run(capsys, "bench", "--sizes", "10,20", "--seed", "3")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert [r[0] for r in rows] == ["10", "20"]


def test_opset_override(tmp_path, capsys):
    path = tmp_path / "inst.txt"
    # Isolated vertex plus triangle: infeasible for ea, solvable for ea+ed.
    path.write_text("p cdpe ea 4 3\ne 1 2\ne 1 3\ne 2 3\n")
    code, _, _ = _run(capsys, "solve", "--in", str(path))
    assert code == 2
    code, out, _ = _run(capsys, "solve", "--in", str(path), "--opset", "ea+ed")
    assert code == 0 and json.loads(out)["opt"] == 3

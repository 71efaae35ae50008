import json

from symkron.cli import main
from symkron.symfunc import SymFunc


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_contingency_text(capsys):
    code, out, _ = run_cli(capsys, "contingency", "--lambda", "3,1", "--mu", "2,1,1")
    assert code == 0
    assert out == "2,1,0\n0,0,1\n\n2,0,1\n0,1,0\n\n1,1,1\n1,0,0\n"


def test_contingency_count_only(capsys):
    code, out, _ = run_cli(
        capsys, "contingency", "--lambda", "3,1", "--mu", "2,1,1", "--count-only"
    )
    assert code == 0 and out == "3\n"


def test_contingency_json(capsys):
    code, out, _ = run_cli(
        capsys, "contingency", "--lambda", "3,1", "--mu", "2,1,1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 3
    assert data["matrices"][0] == {
        "rows": [[2, 1, 0], [0, 0, 1]],
        "row_sums": [3, 1],
        "col_sums": [2, 1, 1],
    }


def test_decompose_perm(capsys):
    code, out, _ = run_cli(capsys, "decompose-perm", "--lambda", "3,1", "--mu", "2,1,1")
    assert code == 0 and out == "2*M[2,1,1] + M[1,1,1,1]\n"


def test_decompose_perm_oracle(capsys):
    code, out, _ = run_cli(
        capsys, "decompose-perm", "--lambda", "3,1", "--mu", "2,1,1", "--oracle"
    )
    assert code == 0
    assert "oracle agrees: yes" in out


def test_decompose_perm_show_matrices_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "decompose-perm",
        "--lambda", "2,1",
        "--mu", "1,1,1",
        "--show-matrices",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == [{"partition": [1, 1, 1], "multiplicity": 3}]
    assert len(data["matrices"]) == 3


def test_partitions_command(capsys):
    code, out, _ = run_cli(capsys, "partitions", "--d", "4")
    assert code == 0
    assert out.splitlines() == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    code, out, _ = run_cli(capsys, "partitions", "--d", "0")
    assert out == "[]\n"


def test_compositions_command(capsys):
    code, out, _ = run_cli(capsys, "compositions", "--n", "2", "--d", "2")
    assert code == 0
    assert out.splitlines() == ["2,0", "1,1", "0,2"]


def test_kostka_command(capsys):
    code, out, _ = run_cli(capsys, "kostka", "--shape", "2,1", "--content", "1,1,1")
    assert code == 0 and out == "2\n"
    code, out, _ = run_cli(capsys, "kostka", "--shape", "[]", "--content", "[]")
    assert code == 0 and out == "1\n"


def test_kron_command(capsys):
    code, out, _ = run_cli(capsys, "kron", "--expr", "h[3,1] # h[2,1,1]")
    assert code == 0 and out == "2*h[2,1,1] + h[1,1,1,1]\n"
    code, out, _ = run_cli(capsys, "kron", "--expr", "s[1,1] # s[1,1]", "--basis", "s")
    assert code == 0 and out == "s[2]\n"


def test_convert_command(capsys):
    code, out, _ = run_cli(capsys, "convert", "--expr", "h[1,1]", "--basis", "s")
    assert code == 0 and out == "s[2] + s[1,1]\n"
    code, out, _ = run_cli(capsys, "convert", "--expr", "s[2] . s[1]", "--basis", "s")
    assert code == 0 and out == "s[3] + s[2,1]\n"


def test_convert_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "convert", "--expr", "h[2,1]", "--basis", "s", "--format", "json"
    )
    assert code == 0
    f = SymFunc.from_json(out)
    assert f.basis == "s" and f.degree == 3
    assert f.coeff((3,)) == 1 and f.coeff((2, 1)) == 1 and f.coeff((1, 1, 1)) == 0


def test_mixed_degree_sum_needs_formal_flag(capsys):
    code, _, err = run_cli(capsys, "convert", "--expr", "h[1] + h[2]", "--basis", "h")
    assert code == 2 and "degrees" in err
    code, out, _ = run_cli(
        capsys, "convert", "--expr", "h[1] + h[2]", "--basis", "h", "--formal"
    )
    assert code == 0 and out == "(h[1]) + (h[2])\n"


def test_character_command(capsys):
    code, out, _ = run_cli(capsys, "character", "--kind", "specht", "--lambda", "2,1")
    assert code == 0
    assert out.splitlines() == ["3: -1", "2,1: 0", "1,1,1: 2"]
    code, out, _ = run_cli(
        capsys, "character", "--kind", "perm", "--lambda", "2,1", "--format", "json"
    )
    data = json.loads(out)
    assert data["values"] == [
        {"cycle_type": [3], "value": 0},
        {"cycle_type": [2, 1], "value": 1},
        {"cycle_type": [1, 1, 1], "value": 3},
    ]


def test_ch_command(capsys):
    code, out, _ = run_cli(capsys, "ch", "--kind", "perm", "--lambda", "2,1", "--basis", "h")
    assert code == 0 and out == "h[2,1]\n"
    code, out, _ = run_cli(capsys, "ch", "--kind", "specht", "--lambda", "2,1", "--basis", "s")
    assert code == 0 and out == "s[2,1]\n"
    code, out, _ = run_cli(capsys, "ch", "--kind", "specht", "--lambda", "1,1")
    assert code == 0 and out == "-1/2*p[2] + 1/2*p[1,1]\n"


def test_verify_command(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "monoidal", "--d", "2")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines)
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "orthonormality", "--d", "3", "--format", "json"
    )
    data = json.loads(out)
    assert data["passed"] is True and len(data["checks"]) == 4


def test_exit_codes(capsys):
    # unknown suite is a usage error
    code, _, _ = run_cli(capsys, "verify", "--suite", "bogus", "--d", "2")
    assert code == 2
    # budget exceeded
    code, _, err = run_cli(capsys, "verify", "--suite", "monoidal", "--d", "100")
    assert code == 3 and "cap" in err
    # parse errors
    code, _, err = run_cli(capsys, "kron", "--expr", "h[1,2]")
    assert code == 2 and "weakly decreasing" in err
    code, _, err = run_cli(capsys, "kron", "--expr", "s[1] +")
    assert code == 2 and "position" in err
    # degree mismatch under '#'
    code, _, err = run_cli(capsys, "kron", "--expr", "s[1] # s[2]")
    assert code == 2
    # malformed margins
    code, _, err = run_cli(capsys, "contingency", "--lambda", "2,x", "--mu", "1,1")
    assert code == 2
    # missing required argument
    code, _, _ = run_cli(capsys, "kostka", "--shape", "2,1")
    assert code == 2


def test_degree_mismatch_margins(capsys):
    code, _, err = run_cli(capsys, "decompose-perm", "--lambda", "2,1", "--mu", "1,1")
    assert code == 2 and "totals" in err

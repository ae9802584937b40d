import json

import pytest

from rank2cluster import cli
from rank2cluster.laurent import LaurentPoly2

from oracles import X5_R3_TERMS


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_formula_matches_frozen_example(capsys):
    code, out, _ = run(capsys, "expand", "--r", "3", "--n", "5")
    assert code == 0
    assert LaurentPoly2(X5_R3_TERMS).render("plain") + "\n" == out


def test_expand_both_engines_agree(capsys):
    code, out, _ = run(capsys, "expand", "--r", "3", "--n", "5", "--engine", "both")
    assert code == 0
    assert "DIFF" not in out


def test_expand_oracle_r1(capsys):
    code, out, _ = run(capsys, "expand", "--r", "1", "--n", "6", "--engine", "oracle")
    assert code == 0
    assert out == "x1\n"


def test_expand_formula_rejects_r1(capsys):
    code, _, err = run(capsys, "expand", "--r", "1", "--n", "6")
    assert code == 1
    assert "r >= 2" in err


def test_expand_latex(capsys):
    code, out, _ = run(capsys, "expand", "--r", "3", "--n", "5", "--format", "latex")
    assert code == 0
    assert "x_1^{-8} x_2^{21}" in out
    assert "x_2^{-3}" in out


def test_expand_json_round_trips(capsys):
    code, out, _ = run(capsys, "expand", "--r", "3", "--n", "5", "--format", "json")
    assert code == 0
    assert LaurentPoly2.from_json(out) == LaurentPoly2(X5_R3_TERMS)


def test_expand_cap_breach_exits_2(capsys):
    code, _, err = run(capsys, "expand", "--r", "3", "--n", "8", "--config-budget", "1000")
    assert code == 2
    assert "budget" in err


def test_config_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("CLUSTER_COMB_BUDGET", "1000")
    code, _, _ = run(capsys, "expand", "--r", "3", "--n", "7")
    assert code == 2
    # An explicit flag wins over the environment.
    code, _, _ = run(capsys, "expand", "--r", "3", "--n", "7", "--config-budget", str(2**22))
    assert code == 0


def test_gvector_output(capsys):
    code, out, _ = run(capsys, "gvector", "--r", "3", "--n", "5")
    assert code == 0
    assert out == "(-8, 21)\n"


def test_fpoly_output(capsys):
    code, out, _ = run(capsys, "fpoly", "--r", "2", "--n", "3")
    assert code == 0
    assert out == "y1 + 1\n"


def test_fpoly_rejects_initial_cluster(capsys):
    code, _, err = run(capsys, "fpoly", "--r", "2", "--n", "1")
    assert code == 1
    assert "index" in err


def test_euler_csv_total(capsys):
    code, out, _ = run(capsys, "euler", "--r", "3", "--n", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "e1,e2,chi"
    assert sum(int(line.split(",")[2]) for line in lines[1:]) == 365


def test_euler_rejects_unknown_format(capsys):
    code, _, _ = run(capsys, "euler", "--r", "3", "--n", "5", "--format", "json")
    assert code == 1


def test_verify_json_lines(capsys):
    code, out, _ = run(capsys, "verify", "--sum-cap", "8")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows
    assert all(set(row) == {"r", "n", "status", "millis"} for row in rows)
    assert all(row["status"] == "pass" for row in rows)


def test_verify_r_max_filter(capsys):
    code, out, _ = run(capsys, "verify", "--sum-cap", "8", "--r-max", "2")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert {row["r"] for row in rows} == {2}


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    monkeypatch.setattr(
        cli.cluster,
        "verify_range",
        lambda *a, **k: [{"r": 2, "n": 4, "status": "fail", "millis": 0}],
    )
    code, out, _ = run(capsys, "verify", "--sum-cap", "8")
    assert code == 3
    assert json.loads(out.splitlines()[0])["status"] == "fail"


def test_path_ascii_with_overlay(capsys):
    code, out, _ = run(capsys, "path", "--r", "3", "--n", "5", "--overlay", "1,3")
    assert code == 0
    assert "word=EENEENEN" in out
    assert "overlay alpha(1,3): green (m=3, w=1) edges 4..8 window 3..3" in out


def test_path_overlay_red(capsys):
    code, out, _ = run(capsys, "path", "--r", "3", "--n", "5", "--overlay", "2,3")
    assert code == 0
    assert "overlay alpha(2,3): red edges 6..8" in out


def test_path_rejects_invalid_overlay(capsys):
    code, _, err = run(capsys, "path", "--r", "3", "--n", "5", "--overlay", "3,3")
    assert code == 1
    code, _, _ = run(capsys, "path", "--r", "3", "--n", "5", "--overlay", "0,9")
    assert code == 1


def test_path_svg_and_tikz(capsys):
    code, out, _ = run(capsys, "path", "--r", "3", "--n", "5", "--svg", "--overlay", "1,3")
    assert code == 0
    assert out.startswith("<svg ")
    assert "stroke-dasharray" in out  # green window marker
    code, out, _ = run(capsys, "path", "--r", "3", "--n", "5", "--tikz")
    assert code == 0
    assert out.startswith("% r=3 n=5")
    assert "\\begin{tikzpicture}" in out


def test_path_json_schema(capsys):
    code, out, _ = run(capsys, "path", "--r", "3", "--n", "5", "--json")
    assert code == 0
    assert json.loads(out) == {"r": 3, "n": 5, "word": "EENEENEN", "v_index": [0, 3, 6, 8]}


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "x5.txt"
    code, out, _ = run(capsys, "expand", "--r", "3", "--n", "5", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == LaurentPoly2(X5_R3_TERMS).render("plain") + "\n"


def test_missing_arguments_exit_1(capsys):
    code, _, _ = run(capsys, "expand", "--r", "3")
    assert code == 1
    code, _, _ = run(capsys, "unknown-command")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("expand", "--r", "3", "--n", "5", "--format", "latex"),
        ("euler", "--r", "3", "--n", "5"),
        ("path", "--r", "3", "--n", "5", "--overlay", "1,3"),
        ("fpoly", "--r", "3", "--n", "-2", "--format", "json"),
    ],
)
def test_byte_identical_reruns(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_verify_deterministic_modulo_millis(capsys):
    _, out1, _ = run(capsys, "verify", "--sum-cap", "8")
    _, out2, _ = run(capsys, "verify", "--sum-cap", "8")
    strip = lambda text: [
        {k: v for k, v in json.loads(line).items() if k != "millis"}
        for line in text.splitlines()
    ]
    assert strip(out1) == strip(out2)

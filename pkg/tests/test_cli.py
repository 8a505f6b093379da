"""CLI behavior: formats, exit codes, determinism, figures."""

import json

import pytest

from inv231.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_one231_csv(capsys):
    code, out, _ = run(capsys, "table", "one231", "--n-max", "8")
    assert code == 0
    assert out == ("n,value\n0,0\n1,0\n2,0\n3,0\n4,1\n5,2\n6,5\n7,12\n8,28\n")


def test_table_fib_markdown(capsys):
    code, out, _ = run(capsys, "table", "fib", "k=2", "--n-max", "6",
                       "--format", "markdown")
    assert code == 0
    assert out.splitlines()[0] == "| n | value |"
    assert out.splitlines()[2] == "| 0 | 0 |"
    assert out.splitlines()[-1] == "| 6 | 8 |"


def test_table_json_values_are_strings(capsys):
    code, out, _ = run(capsys, "table", "avoid231_contain_k21", "k=2", "r=0",
                       "--n-max", "5", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows == [{"n": n, "value": "1"} for n in range(6)]


def test_table_big_values_survive_json(capsys):
    code, out, _ = run(capsys, "table", "avoid231", "--n-max", "80",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[80]["value"] == str(2 ** 79)


def test_table_unknown_op(capsys):
    code, _, err = run(capsys, "table", "nosuch")
    assert code == 2
    assert "unknown table operation" in err


def test_table_param_errors(capsys):
    assert run(capsys, "table", "fib")[0] == 2
    assert run(capsys, "table", "fib", "k=2", "k=3")[0] == 2
    assert run(capsys, "table", "fib", "q=2")[0] == 2
    assert run(capsys, "table", "fib", "k=two")[0] == 2
    assert run(capsys, "table", "one231", "--n-max", "-1")[0] == 2
    # Library-level precondition violations surface as usage errors too.
    assert run(capsys, "table", "one231_avoid_k21", "k=3")[0] == 2


def test_pattern_digit_and_bracket_forms_agree(capsys):
    code1, out1, _ = run(capsys, "table", "one231_avoid", "pat=[4,1]",
                         "--n-max", "8")
    code2, out2, _ = run(capsys, "table", "one231_avoid", "pat=43215",
                         "--n-max", "8")
    assert code1 == code2 == 0
    assert out1 == out2


def test_pattern_must_be_layered(capsys):
    code, _, err = run(capsys, "table", "one231_avoid", "pat=2431")
    assert code == 2
    assert "not layered" in err


def test_gf_univariate_csv(capsys):
    code, out, _ = run(capsys, "gf", "fib", "k=2", "--trunc", "6")
    assert code == 0
    assert out == "n,coeff\n0,0\n1,1\n2,1\n3,2\n4,3\n5,5\n6,8\n"


def test_gf_bivariate_triples(capsys):
    code, out, _ = run(capsys, "gf", "avoid231_contain_k21_xy", "k=4",
                       "--trunc", "5")
    assert code == 0
    assert out.splitlines() == [
        "n,y_exp,coeff",
        "0,0,1",
        "1,0,1",
        "2,0,2",
        "3,0,4",
        "4,0,7",
        "4,1,1",
        "5,0,13",
        "5,1,2",
        "5,5,1",
    ]


def test_gf_unknown_op(capsys):
    assert run(capsys, "gf", "nosuch")[0] == 2


def test_verify_small_all_pass(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "check,scope,status,counterexample"
    assert all(",pass," in line for line in lines[1:])


def test_verify_cap_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--n-max", "99")
    assert code == 2
    assert "14" in err


def test_verify_trunc_must_cover_n_max(capsys):
    assert run(capsys, "verify", "--n-max", "9", "--trunc", "5")[0] == 2


def test_verify_only_filter(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "5", "--only", "fib")
    assert code == 0
    body = out.splitlines()[1:]
    assert body
    assert all(line.startswith("fib") for line in body)


def test_verify_only_no_match(capsys):
    code, _, err = run(capsys, "verify", "--n-max", "5", "--only", "zzz")
    assert code == 2
    assert "matched no checks" in err


def test_verify_reports_known_recursion_gap(capsys):
    # The peel-last-block recursion for one231_once overcounts [4,1] from
    # n=9 on; verify must say so and exit 1.
    code, out, _ = run(capsys, "verify", "--n-max", "9", "--only",
                       "one231-once-layered")
    assert code == 1
    assert "recursion=2 oracle=1" in out


def test_bijection_listing(capsys):
    code, out, _ = run(capsys, "bijection", "--n", "4")
    assert code == 0
    assert out.splitlines() == [
        "tiling,involution,witness_positions,witness_values",
        'R4,4231,"2,3,4","2,3,1"',
    ]


def test_bijection_small_n_note(capsys):
    code, out, err = run(capsys, "bijection", "--n", "2")
    assert code == 0
    assert out == "tiling,involution,witness_positions,witness_values\n"
    assert "no tilings" in err


def test_bijection_cap(capsys):
    assert run(capsys, "bijection", "--n", "20")[0] == 2


def test_bijection_row_count_matches_formula(capsys):
    code, out, _ = run(capsys, "bijection", "--n", "7")
    assert code == 0
    assert len(out.splitlines()) == 1 + 12


def test_out_file_matches_stdout(tmp_path, capsys):
    path = tmp_path / "table.csv"
    code, out, _ = run(capsys, "table", "one231", "--n-max", "6")
    code2 = main(["table", "one231", "--n-max", "6", "--out", str(path)])
    capsys.readouterr()
    assert code == code2 == 0
    assert path.read_text(encoding="utf-8") == out


def test_byte_determinism(capsys):
    _, first, _ = run(capsys, "verify", "--n-max", "4", "--format", "json")
    _, second, _ = run(capsys, "verify", "--n-max", "4", "--format", "json")
    assert first == second


def test_plots_are_written(tmp_path, capsys):
    seq = tmp_path / "seq.png"
    code, _, _ = run(capsys, "table", "one231", "--n-max", "10",
                     "--plot", str(seq))
    assert code == 0 and seq.stat().st_size > 0
    biv = tmp_path / "biv.png"
    code, _, _ = run(capsys, "gf", "one231_contain_k21_xy", "k=4",
                     "--trunc", "10", "--plot", str(biv))
    assert code == 0 and biv.stat().st_size > 0
    strips = tmp_path / "tilings.png"
    code, _, _ = run(capsys, "bijection", "--n", "6", "--plot", str(strips))
    assert code == 0 and strips.stat().st_size > 0


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2

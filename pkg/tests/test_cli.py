import io
import json
import subprocess
import sys

import pytest

from ordfield.cli import cmd_repl, build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_geometric(capsys):
    code, out, _ = run(capsys, "eval", "1/(1-e)", "--order", "4")
    assert code == 0 and out == "1 + e + e^2 + e^3 + O(e^4)\n"


def test_eval_ratfun_comparison(capsys):
    code, out, _ = run(capsys, "eval", "(w+1)/w > 1", "--field", "ratfun")
    assert code == 0 and out.strip() == "true"


def test_eval_symbol_not_in_q(capsys):
    code, _, err = run(capsys, "eval", "w", "--field", "q")
    assert code == 1 and "SymbolNotInField" in err


def test_syntax_error_exit_code(capsys):
    code, _, err = run(capsys, "eval", "1 +")
    assert code == 2 and "syntax error" in err


def test_cmp(capsys):
    assert run(capsys, "cmp", "e^2", "e")[1] == "<\n"
    assert run(capsys, "cmp", "355/113", "22/7", "--field", "q")[1] == "<\n"
    assert run(capsys, "cmp", "w", "w", "--field", "ratfun")[1] == "=\n"


def test_cmp_rejects_comparisons(capsys):
    with pytest.raises(SystemExit) as info:
        main(["cmp", "1 < 2", "1", "--field", "q"])
    assert info.value.code == 2


def test_sum(capsys):
    code, out, _ = run(capsys, "sum", "--terms", "alt-geometric", "--order", "5")
    assert code == 0 and out.endswith("= -e + e^2 + -e^3 + e^4 + O(e^5)\n")
    with pytest.raises(SystemExit):
        main(["sum", "--terms", "geometric", "--field", "q"])


def test_probe_with_candidate(capsys):
    code, out, _ = run(capsys, "probe", "18", "--field", "ratfun", "--candidate", "w/2")
    assert code == 0 and "not in [3, w/3]" in out


def test_probe_rationals_archimedean(capsys):
    code, out, _ = run(capsys, "probe", "2", "--field", "q", "--candidate", "7/2",
                       "--expect", "HoldsConstructive")
    assert code == 0 and "constructed 4" in out


def test_probe_expect_mismatch(capsys):
    code, _, err = run(capsys, "probe", "2", "--field", "laurent", "--expect", "HoldsConstructive")
    assert code == 1 and "expected" in err


def test_probe_json(capsys):
    code, out, _ = run(capsys, "probe", "axioms", "--field", "q", "--trials", "50", "--json")
    assert code == 0 and json.loads(out)["status"] == "HoldsConstructive"


def test_probe_decimal(capsys):
    code, out, _ = run(capsys, "probe", "decimal", "--field", "laurent")
    assert code == 0 and "TwoPointIntersection" in out


def test_probe_bad_property(capsys):
    with pytest.raises(SystemExit) as info:
        main(["probe", "19"])
    assert info.value.code == 2


def test_matrix_check(capsys):
    code, out, _ = run(capsys, "matrix", "--check")
    assert code == 0 and out.startswith("# Completeness properties")


def test_matrix_check_against_fixture(capsys, tmp_path):
    path = tmp_path / "fixture.json"
    path.write_text(json.dumps({"laurent": {"11": "FailsWitnessed"}}), encoding="utf-8")
    code, _, err = run(capsys, "matrix", "--fields", "laurent", "--format", "json",
                       "--check", str(path))
    assert code == 1 and "mismatch laurent (11)" in err


def test_repl():
    args = build_parser().parse_args(["repl", "--field", "laurent", "--order", "3"])
    stdin = io.StringIO("1/(1-e)\n:field ratfun\nw > 5\n:parse 1+w\nw +\n:quit\nnot reached\n")
    stdout = io.StringIO()
    assert cmd_repl(args, stdin, stdout) == 0
    lines = stdout.getvalue().splitlines()
    assert lines[0] == "1 + e + e^2 + O(e^3)"
    assert lines[1] == "field Q(w)"
    assert lines[2] == "true"
    assert lines[3].startswith("BinOp(")
    assert lines[4].startswith("error:")
    assert len(lines) == 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ordfield", "eval", "1/3 + 1/6", "--field", "q"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1/2\n"

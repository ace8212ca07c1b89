import json
import subprocess
import sys

import pytest

from semipell.cli import (
    format_composition,
    format_runform,
    main,
    parse_composition,
    parse_runform,
)

TABLE_1_TO_15 = {
    2: [1, 1, 3, 1, 5, 3, 11, 1, 13, 5, 23, 3, 29, 11, 51],
    3: [1, 1, 1, 3, 3, 1, 5, 5, 1, 7, 7, 3, 13, 13, 3],
    4: [1, 1, 1, 1, 3, 3, 3, 1, 5, 5, 5, 1, 7, 7, 7],
    5: [1, 1, 1, 1, 1, 3, 3, 3, 3, 1, 5, 5, 5, 5, 1],
    6: [1, 1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 1, 5, 5, 5],
}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_formatting_helpers():
    assert format_composition((1, 2)) == "(1,2)"
    assert format_composition(()) == "()"
    assert format_runform(((1, 3), (2, 1))) == "(1^3,2)"
    assert format_runform(()) == "()"
    assert parse_composition("14,3,18,27") == (14, 3, 18, 27)
    assert parse_composition("(1,2)") == (1, 2)
    assert parse_composition("()") == ()
    assert parse_runform("1^14,3,9^2,27") == ((1, 14), (3, 1), (9, 2), (27, 1))
    with pytest.raises(ValueError):
        parse_composition("1,x")
    with pytest.raises(ValueError):
        parse_composition("1,0")
    with pytest.raises(ValueError):
        parse_runform("2^")


def test_count(capsys):
    code, out, _ = run(capsys, "count", "7", "2")
    assert code == 0 and out == "sp(7,2) = 11\n"
    code, out, _ = run(capsys, "count", "0", "9")
    assert code == 0 and out == "sp(0,9) = 1\n"
    code, out, _ = run(capsys, "count", "15", "6")
    assert code == 0 and out == "sp(15,6) = 5\n"


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "7", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 7, "m": 2, "sp": "11"}


def test_count_cache_roundtrip(tmp_path, capsys):
    path = str(tmp_path / "counts.txt")
    code, out1, _ = run(capsys, "count", "40", "2", "--cache", path)
    assert code == 0
    first = open(path).read()
    code, out2, _ = run(capsys, "count", "40", "2", "--cache", path)
    assert code == 0 and out1 == out2
    assert open(path).read() == first
    # a second modulus extends the same file, still sorted
    code, _, _ = run(capsys, "count", "10", "3", "--cache", path)
    assert code == 0
    keys = [tuple(map(int, line.split()[:2])) for line in open(path).read().splitlines()]
    assert keys == sorted(keys)


def test_table_matches_published_values(capsys):
    code, out, _ = run(capsys, "table", "15", "2", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["n"] + [str(n) for n in range(1, 16)]
    assert len(lines) == 6
    for line, m in zip(lines[1:], range(2, 7)):
        cells = line.split("\t")
        assert cells[0] == f"m={m}"
        assert [int(c) for c in cells[1:]] == TABLE_1_TO_15[m]


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "3", "2")
    assert code == 0 and out == "(1,2)\n(2,1)\n(3)\n"
    code, out, _ = run(capsys, "enum", "0", "2")
    assert code == 0 and out == "()\n"
    code, out, _ = run(capsys, "enum", "5", "2", "--side", "oc")
    assert code == 0
    assert out == "(1^5)\n(1^3,2)\n(1,4)\n(2,1^3)\n(4,1)\n"


def test_map(capsys):
    code, out, _ = run(capsys, "map", "14,3,18,27", "3", "--direction", "to-oc")
    assert code == 0 and out == "(1^14,3,9^2,27)\n"
    code, out, _ = run(capsys, "map", "9", "3")
    assert code == 0 and out == "(9)\n"
    code, out, _ = run(capsys, "map", "1^14,3,9^2,27", "3", "--direction", "from-oc")
    assert code == 0 and out == "(14,3,18,27)\n"
    code, out, _ = run(capsys, "map", "1^5,4", "2", "--direction", "from-oc")
    assert code == 0 and out == "(5,4)\n"


def test_map_domain_rejection(capsys):
    code, out, err = run(capsys, "map", "2,9,4", "2")
    assert code == 4 and out == ""
    assert "max m-powers not unimodal" in err
    code, _, err = run(capsys, "map", "2,10,3", "2")
    assert code == 4
    assert "max m-powers not distinct" in err
    code, _, err = run(capsys, "map", "1^2,2", "2", "--direction", "from-oc")
    assert code == 4
    assert "divisible" in err


def test_series(capsys):
    code, out, _ = run(capsys, "series", "2", "7")
    assert code == 0
    assert out.splitlines() == ["0 1", "1 1", "2 1", "3 3", "4 1", "5 5", "6 3", "7 11"]
    code, out, _ = run(capsys, "series", "3", "13")
    assert code == 0
    assert out.splitlines()[13] == "13 13"


def test_check_families_pass(capsys):
    cases = [
        ("check", "oddness", "--nmax", "300"),
        ("check", "mod4", "--nmax", "200"),
        ("check", "mod4-general", "--m", "5", "--jmax", "50"),
        ("check", "mod3", "--m", "4", "--jmax", "30"),
        ("check", "partial-sum", "--m", "7", "--jmax", "20"),
        ("check", "ob-parity", "--nmax", "301"),
        ("check", "plateau", "--m", "3", "--vmax", "50"),
        ("check", "scaling", "--m", "4", "--jmax", "6"),
        ("check", "special-cases", "--jmax", "25"),
        ("check", "roundtrip", "--m", "2", "--nmax", "12"),
        ("check", "oracle", "--m", "2", "--nmax", "10"),
        ("check", "oracle", "--m", "3", "--nmax", "40", "--side", "oc"),
        ("check", "funceq", "--m", "2", "--order", "128"),
    ]
    for argv in cases:
        code, out, _ = run(capsys, *argv)
        assert code == 0, argv
        assert out.startswith("PASS"), argv
        assert "checked=" in out


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "count", "-3", "2")[0] == 2
    assert run(capsys, "count", "5", "1")[0] == 2
    assert run(capsys, "nosuch")[0] == 2
    assert run(capsys, "check", "nosuch")[0] == 2
    assert run(capsys, "check", "mod3", "--m", "5")[0] == 2
    assert run(capsys, "check", "mod4", "--m", "3")[0] == 2
    assert run(capsys, "table", "10", "6", "3")[0] == 2
    assert run(capsys, "map", "1,x", "2")[0] == 2
    assert run(capsys)[0] == 2


def test_bound_errors_exit_3(capsys):
    code, _, err = run(capsys, "enum", "101", "2")
    assert code == 3 and "bound" in err
    code, _, err = run(capsys, "check", "oracle", "--m", "2", "--nmax", "30")
    assert code == 3
    # the oc-only side is allowed further out
    code, _, _ = run(capsys, "check", "oracle", "--m", "2", "--nmax", "30", "--side", "oc")
    assert code == 0


def test_check_failure_exits_1(capsys, monkeypatch):
    import semipell.cli as cli_mod
    from semipell.report import CongruenceReport

    def broken(n_max, m):
        report = CongruenceReport("oddness", {"m": m, "n_max": n_max})
        report.record("n=0", 0, 1)
        return report

    monkeypatch.setattr(cli_mod, "check_oddness", broken)
    code, out, _ = run(capsys, "check", "oddness")
    assert code == 1
    assert out.startswith("FAIL oddness")
    assert "violation" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "semipell", "count", "7", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "sp(7,2) = 11\n"


def test_determinism_across_runs():
    argv = [sys.executable, "-m", "semipell", "enum", "17", "2", "--side", "oc"]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0

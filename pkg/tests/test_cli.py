import json
import subprocess
import sys

import pytest

from dihedral import cli

from conftest import DATA, FIXTURES


def run(*argv):
    return cli.main(list(argv))


def test_defect_six_one(capsys, six_one_path):
    assert run("defect", str(six_one_path)) == 0
    out = capsys.readouterr().out
    assert "sigma_w: 1" in out.splitlines()
    assert "abs_xi: 1" in out.splitlines()


def test_bundled_fixture_name(capsys):
    assert run("defect", "six_one.knot") == 0
    assert "sigma_w: 1" in capsys.readouterr().out


def test_trisect_command(capsys):
    assert run("trisect", "--p", "3", "--b", "3", "--c", "1,2,2", "--singular") == 0
    assert "trisection: (1;0,0,0)" in capsys.readouterr().out


def test_trivial_coloring_exit_code(capsys):
    assert run("defect", str(FIXTURES / "trivial.knot")) == cli.EXIT_MATH
    assert "coloring trivial" in capsys.readouterr().err


def test_missing_file(capsys):
    assert run("defect", "no_such_file.knot") == cli.EXIT_INPUT
    assert "no such file" in capsys.readouterr().err


def test_bad_p(capsys):
    assert run("colorings", "six_one.knot", "--p", "4") == cli.EXIT_INPUT


def test_invalid_bridge_data(capsys):
    assert run("trisect", "--b", "1", "--c", "1,1,1") == cli.EXIT_MATH
    assert "not surjective" in capsys.readouterr().err


def test_empty_colorings_list():
    assert "colorings: []" in cli.emit_report({"colorings": []}).splitlines()


def test_table_block_emission(capsys, alpha_path):
    assert run("linking", str(alpha_path)) == 0
    out = capsys.readouterr().out
    i = out.index("omega2 omega2:")
    assert out[i:].splitlines()[1:4] == ["    [1, 1, 0]", "    [1, 0, 1]", "    [0, 1, 1]"]


def test_linking_six_one(capsys):
    assert run("linking", "six_one.knot", "--json") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["computed"]["beta_l beta_r"] == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


@pytest.mark.parametrize("argv", [
    ("defect", "six_one.knot"),
    ("defect", "alpha_11.knot", "--resolution", "right"),
    ("colorings", "six_one.knot"),
    ("triplane", "six_one.tri"),
])
def test_json_round_trip_and_determinism(capsys, argv):
    assert run(*argv, "--json") == 0
    first = capsys.readouterr().out
    assert run(*argv, "--json") == 0
    assert capsys.readouterr().out == first
    data = json.loads(first)
    assert json.loads(cli.emit_report(data, "json")) == data
    assert run(*argv) == 0
    text = capsys.readouterr().out
    assert run(*argv) == 0
    assert capsys.readouterr().out == text


def test_lift_shadow(capsys):
    assert run("lift-shadow", "--word-file", str(FIXTURES / "b6.word"), "--start-sheet", "2") == 0
    out = capsys.readouterr().out
    assert "word: y2^2 x1^1 y1^1 y2^3 x2^3 y1^1 y2^1" in out


def test_lift_shadow_bad_letter(capsys):
    assert run("lift-shadow", "--word-file", str(FIXTURES / "bad_letter.word")) == cli.EXIT_INPUT
    assert "cannot parse" in capsys.readouterr().err


def test_euler_and_charknots(capsys):
    assert run("euler", "--chi-b", "2", "--m", "1", "--genus", "0") == 0
    out = capsys.readouterr().out
    assert "chi_Y: 3" in out and "homotopy_cp2_possible: true" in out
    assert run("charknots", "six_one.knot") == 0
    assert "  - beta: [1, -1]" in capsys.readouterr().out


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "dihedral.cli", "trisect", "--b", "3",
                          "--c", "1,2,2", "--singular", "--json"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["trisection"] == "(1;0,0,0)"

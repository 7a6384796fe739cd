import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hirschkit import cli
from hirschkit.formats import golden_text, loads


@pytest.fixture
def q4_file(tmp_path):
    path = tmp_path / "q4.poly"
    path.write_text(golden_text("q4.poly"))
    return str(path)


def run(capsys, *argv):
    code = cli.cli_main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_q4_line(capsys):
    code, out, _ = run(capsys, "verify", "q4")
    assert code == 0
    assert out.strip() == "facets: 27 OK, distance(abcd,efgh)=5 OK, sharp: 5=9−4 OK"


def test_verify_is_pure(capsys):
    first = run(capsys, "verify", "maniwalkup")
    second = run(capsys, "verify", "maniwalkup")
    assert first == second and first[0] == 0


@pytest.mark.parametrize(
    "argv",
    [["verify", "klee", "2"], ["verify", "crosschain", "3", "2"], ["verify", "fhk", "1"], ["verify", "transport"]],
)
def test_verify_instances(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "FAIL" not in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(cli.VERIFIERS, "q4", (lambda: [("forced", False)], 0))
    code, out, _ = run(capsys, "verify", "q4")
    assert code == 1 and out.strip() == "forced FAIL"


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--json", "verify", "todd")
    data = json.loads(out)
    assert code == 0 and data["ok"] is True and data["checks"][0]["check"] == "facets: 8"


def test_bounds_table_and_json(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "9", "--d", "4")
    assert code == 0
    assert "larman        18" in out or any(l.split() == ["larman", "18"] for l in out.splitlines())
    code, out, _ = run(capsys, "bounds", "--n", "9", "--d", "4", "--json")
    assert json.loads(out)["larman"] == 18


def test_gen_then_dual_diameter(capsys, tmp_path):
    target = str(tmp_path / "k.poly")
    assert run(capsys, "gen", "klee3", "2", "-o", target)[0] == 0
    code, out, _ = run(capsys, "diameter", target, "--dual")
    assert (code, out.strip()) == (0, "5")


@pytest.mark.parametrize(
    "name,params",
    [("q4", []), ("klee3", ["3", "1"]), ("crosschain", ["3", "2"]), ("unbounded", ["3", "5"]),
     ("maniwalkup", []), ("fhk", ["1"]), ("zeroone", ["3", "5", "9"]), ("crosspolytope", ["4"])],
)
def test_gen_round_trips(capsys, tmp_path, name, params):
    from hirschkit.constructions import named_instance

    target = tmp_path / "out.poly"
    assert run(capsys, "gen", name, *params, "-o", str(target))[0] == 0
    assert loads(target.read_text()) == named_instance(name, *params).payload


def test_distance_and_nonrevisit(capsys, q4_file):
    code, out, _ = run(capsys, "distance", q4_file, "--from", "abcd", "--to", "efgh", "--dual")
    assert (code, out.strip()) == (0, "5")
    code, out, _ = run(capsys, "nonrevisit", q4_file, "--from", "abcd", "--to", "efgh")
    assert code == 0 and out.startswith("5: abcd ")


def test_facets_command(capsys, q4_file):
    code, out, _ = run(capsys, "facets", q4_file)
    assert code == 0
    assert out.count(" {") == 27 and "INEQUALITIES" in out


def test_vertices_and_monotone(capsys, tmp_path):
    todd = tmp_path / "todd.poly"
    assert run(capsys, "gen", "todd", "-o", str(todd))[0] == 0
    code, out, _ = run(capsys, "vertices", str(todd))
    assert code == 0 and "ray" not in out
    from hirschkit.constructions import todd_monotone_instance
    from hirschkit.exact import format_rational

    t = todd_monotone_instance()
    u = ",".join(format_rational(x) for x in t.u)
    v = ",".join(format_rational(x) for x in t.v)
    code, out, _ = run(capsys, "monotone", str(todd), "--from", u, "--to", v)
    assert code == 0 and int(out) >= 5


def test_transformations(capsys, tmp_path, q4_file):
    out_file = str(tmp_path / "p.poly")
    assert run(capsys, "polar", q4_file, "-o", out_file)[0] == 0
    assert len(loads(open(out_file).read()).points) == 27
    code, out, _ = run(capsys, "ops", q4_file, "--vertex", "w", "--k", "4")
    assert code == 0 and loads(out).n_facets == 87
    code, out, _ = run(capsys, "stellar", q4_file, "--facet", "abcd", "--label", "z")
    assert code == 0 and loads(out).n_facets == 30
    cube = tmp_path / "cube.poly"
    cube.write_text("INEQUALITIES\n 1 -1  0\n 1  1  0\n 1  0 -1\n 1  0  1\n")
    code, out, _ = run(capsys, "wedge", str(cube), "--facet", "0")
    assert code == 0 and len(loads(out).inequalities) == 5


def test_glue(capsys, tmp_path):
    a, b = tmp_path / "a.poly", tmp_path / "b.poly"
    a.write_text("LABELS\n a b c d\n\nFACETS\n {0 1 2}\n {0 1 3}\n {0 2 3}\n {1 2 3}\n")
    b.write_text("LABELS\n x y z e\n\nFACETS\n {0 1 2}\n {0 1 3}\n {0 2 3}\n {1 2 3}\n")
    code, out, _ = run(capsys, "glue", str(a), str(b), "--facet-a", "abc", "--facet-b", "xyz")
    assert code == 0 and loads(out).n_vertices == 5


@pytest.mark.parametrize(
    "argv",
    [[], ["nope"], ["verify"], ["verify", "klee"], ["verify", "klee", "x"], ["verify", "zzz"],
     ["bounds", "--n", "3", "--d", "4"], ["diameter", "/does/not/exist"], ["gen", "klee3", "0"]],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_json_errors(capsys):
    code, _, err = run(capsys, "--json", "diameter", "/does/not/exist")
    assert code == 2 and json.loads(err)["error"] == "FileNotFoundError"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hirschkit.cli", "verify", "q4"], capture_output=True, text=True)
    assert proc.returncode == 0 and "27 OK" in proc.stdout


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(["verify", "bounds", "gen", "--n", "5", "q4", "x", "--dual", "-o"]), max_size=4))
def test_exit_codes_stay_in_contract(argv):
    # arbitrary argument soup must never crash outside the 0/1/2 contract
    import contextlib
    import io

    with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
        try:
            code = cli.cli_main(argv)
        except SystemExit as exc:  # --help style exits from argparse
            code = exc.code
    assert code in (0, 1, 2)

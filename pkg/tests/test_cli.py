import json
import subprocess
import sys

import pytest

from chordspan.cli import CliConfig, main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_build_shell_json(capsys):
    code, out, _ = run(capsys, "build", "--kind", "shell", "--n", "6", "--format", "json")
    assert code == 0
    assert out == '{"n":6,"chords":[[0,2],[0,3],[0,4]]}\n'


def test_build_greedy_summary(capsys):
    code, out, _ = run(capsys, "build", "--kind", "greedy", "--n", "12", "--format", "summary")
    assert code == 0 and "tcl=24" in out


def test_build_too_small(capsys):
    code, out, err = run(capsys, "build", "--kind", "shell", "--n", "2")
    assert code == 2 and out == "" and "usage" in err


def test_build_random_seeded(capsys):
    _, a, _ = run(capsys, "build", "--kind", "random", "--n", "20", "--seed", "5")
    _, b, _ = run(capsys, "build", "--kind", "random", "--n", "20", "--seed", "5")
    assert a == b and json.loads(a)["n"] == 20


def test_tcl_shell_twelve(capsys, monkeypatch):
    doc = '{"n":12,"chords":[[0,2],[0,3],[0,4],[0,5],[0,6],[0,7],[0,8],[0,9],[0,10]]}'
    code, out, _ = run(capsys, "tcl", stdin=doc, monkeypatch=monkeypatch)
    assert code == 0
    assert out.startswith("n=12 tcl=34 ears=2 diameter=true")
    assert "max_layer=9/2" in out


def test_tcl_crossing(capsys, monkeypatch):
    code, out, err = run(capsys, "tcl", stdin='{"n":6,"chords":[[0,2],[1,3],[0,4]]}', monkeypatch=monkeypatch)
    assert code == 1 and out == ""
    assert "(0, 2)" in err and "(1, 3)" in err


def test_tcl_triangle_file(capsys, tmp_path):
    p = tmp_path / "tri.json"
    p.write_text('{"n":3,"chords":[]}')
    code, out, _ = run(capsys, "tcl", str(p))
    assert code == 0 and out.startswith("n=3 tcl=0 ears=0 diameter=false")


def test_tcl_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "tcl", str(tmp_path / "nope.json"))
    assert code == 1 and err


def test_verify_max(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "max", "--n-range", "5..12")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 8 and all(l.endswith("PASS") for l in lines)


@pytest.mark.parametrize("theorem", ["min", "ears", "spectrum"])
def test_verify_others(capsys, theorem):
    code, out, _ = run(capsys, "verify", "--theorem", theorem, "--n-range", "5..12")
    assert code == 0 and out.count("PASS") == 8


def test_verify_theta(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "theta", "--n-range", "1..2")
    assert code == 0
    assert out.splitlines() == ["theta(1)=6 PASS", "theta(2)=12 PASS"]


def test_verify_above_cap(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "max", "--n-range", "15..17")
    assert code == 2 and "cap" in err


def test_verify_cap_from_env(capsys, monkeypatch):
    monkeypatch.setenv("CHORDSPAN_ENUM_CAP", "8")
    code, _, _ = run(capsys, "verify", "--theorem", "max", "--n-range", "5..9")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--theorem", "max", "--n-range", "5..9", "--cap", "9")
    assert code == 0


def test_verify_failure_path(capsys, monkeypatch):
    from chordspan import builders, cli, enumeration

    monkeypatch.setattr(enumeration, "max_tcl", lambda n: builders.max_tcl(n) + 1)
    code, out, err = run(capsys, "verify", "--theorem", "max", "--n-range", "6..6")
    assert code == 1
    first, doc = out.splitlines()
    assert first == "n=6 FAIL"
    assert json.loads(doc)["tcl"] == 7


def test_spectrum_seven(capsys):
    code, out, _ = run(capsys, "spectrum", "--n", "7")
    assert code == 0 and out == "min=9 max=10 values={9,10}\n"


def test_spectrum_large_without_enumeration(capsys):
    code, out, _ = run(capsys, "spectrum", "--n", "40")
    assert code == 0 and out == "min=152 max=398\n"


def test_spectrum_witness(capsys):
    code, out, _ = run(capsys, "spectrum", "--n", "40", "--witness", "250")
    assert code == 0
    doc, moves = out.splitlines()
    assert json.loads(doc)["tcl"] == 250
    assert moves.startswith("moves=")


def test_spectrum_out_of_range(capsys):
    code, out, err = run(capsys, "spectrum", "--n", "6", "--witness", "99")
    assert code == 1 and out == "" and "outside" in err


def test_spectrum_search_exhausted(capsys, monkeypatch):
    monkeypatch.setenv("CHORDSPAN_SEARCH_DEPTH", "1")
    code, _, err = run(capsys, "spectrum", "--n", "100", "--witness", "519", "--frontier", "50")
    assert code == 1 and "expanded=" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "6")
    assert code == 0
    assert out.splitlines() == ["n=6 count=14 min=6 max=7", "tcl=6 count=2", "tcl=7 count=12"]


def test_export_dot(capsys, monkeypatch):
    code, out, _ = run(capsys, "export", "--format", "dot", stdin='{"n":5,"chords":[[0,2],[0,3]]}', monkeypatch=monkeypatch)
    assert code == 0 and out.startswith("graph mop {") and out.count("style=dashed") == 2


def test_config_validation():
    with pytest.raises(ValueError):
        CliConfig(enum_cap=0)
    with pytest.raises(ValueError):
        CliConfig(output_format="svg")


@pytest.mark.parametrize(
    "sub", ["build", "tcl", "enumerate", "verify", "spectrum", "export"]
)
def test_help_exists(capsys, sub):
    code, out, _ = run(capsys, sub, "--help")
    assert code == 0 and "usage" in out


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "chordspan", "build", "--kind", "shell", "--n", "5"],
        capture_output=True, text=True, check=True,
    ).stdout
    assert out == '{"n":5,"chords":[[0,2],[0,3]]}\n'

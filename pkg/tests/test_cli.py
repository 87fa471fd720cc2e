import json
import subprocess
import sys

import pytest

import cmreg.cli as cli

SESSION = """
ring S = GF(32003)[x, y, z, t];
ideal I = x^2, x*z, x*t - y*z;
ring R = S / I;
module M = cyclic(R);
sequence zz = z;
complex K = koszul(zz, M);
"""


@pytest.fixture()
def session_file(tmp_path):
    p = tmp_path / "det.cmreg"
    p.write_text(SESSION)
    return str(p)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_reg_json_payload(session_file, capsys):
    code, out, _ = run(capsys, "--session", session_file, "reg", "M")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "cmreg/1"
    assert payload["command"] == "reg"
    assert payload["result"]["value"] == 1
    assert payload["result"]["routes"] == {
        "betti": 1, "ext": 1, "koszul": 1, "duality": 1}


def test_flags_accepted_before_and_after_subcommand(session_file, capsys):
    a = run(capsys, "--session", session_file, "dim", "M")
    b = run(capsys, "dim", "M", "--session", session_file)
    assert a == b == (0, a[1], "")


def test_json_is_byte_deterministic(session_file, capsys):
    _, a, _ = run(capsys, "--session", session_file, "check", "filter",
                  "--module", "M", "--form", "z", "--seed", "4")
    _, b, _ = run(capsys, "--session", session_file, "check", "filter",
                  "--module", "M", "--form", "z", "--seed", "4")
    assert a == b


def test_text_format(session_file, capsys):
    code, out, _ = run(capsys, "--session", session_file, "depth", "M",
                       "--format", "text")
    assert code == 0
    assert "depth: 2" in out


def test_infinities_are_tagged_in_json(session_file, capsys):
    code, out, _ = run(capsys, "--session", session_file, "hilbert", "M",
                       "--max-degree", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["top_degree"] == {
        "value": None, "kind": "plus_infinity"}


def test_parse_error_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.cmreg"
    bad.write_text("ring A = GF(7)[x y];")
    code, _, err = run(capsys, "--session", str(bad), "reg", "A")
    assert code == 1
    assert "line 1" in err


def test_unknown_binding_exits_one(session_file, capsys):
    code, _, err = run(capsys, "--session", session_file, "reg", "ghost")
    assert code == 1
    assert "ghost" in err


def test_missing_session_file_exits_one(capsys):
    code, _, err = run(capsys, "--session", "/nonexistent/f.cmreg", "reg", "M")
    assert code == 1


def test_computation_error_exits_two(session_file, capsys):
    # the single form z has a two-dimensional obstruction on this module
    code, _, err = run(capsys, "--session", session_file, "koszul", "zz", "M")
    assert code == 2
    assert "H_1" in err


def test_contradiction_exits_three(session_file, capsys, monkeypatch):
    from cmreg.theorems import TheoremContradiction, _finish

    def boom(session, args):
        _finish("demo", "forced", {"verdict": "holds", "witnesses": []},
                0, 1, {})

    monkeypatch.setitem(cli._HANDLERS, "dim", boom)
    code, _, err = run(capsys, "--session", session_file, "dim", "M")
    assert code == 3
    assert "contradiction" in err


def test_usage_error_exits_one(capsys):
    code = cli.main(["check"])
    capsys.readouterr()
    assert code == 1


def test_check_needs_its_flags(session_file, capsys):
    code, _, err = run(capsys, "--session", session_file, "check", "filter")
    assert code == 1
    assert "--module" in err or "needs" in err


def test_session_from_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("ring A = GF(7)[x];"))
    code, out, _ = run(capsys, "--session", "-", "dim", "A")
    assert code == 1  # A is a ring binding, not a module


def test_family_command(capsys):
    code, out, _ = run(capsys, "family", "nilpotent-scroll", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["reg_ideal"] == 2
    assert payload["result"]["reg_ideal_plus_form"] == 3


def test_oracle_command(session_file, capsys):
    code, out, _ = run(capsys, "--session", session_file, "oracle", "M")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["agrees"] is True


def test_field_override_flag(tmp_path, capsys):
    p = tmp_path / "s.cmreg"
    p.write_text("ring A = GF(32003)[x, y];\nmodule M = cyclic(A);\n")
    code, out, _ = run(capsys, "--session", str(p), "--field", "101",
                       "reg", "M")
    assert code == 0
    assert json.loads(out)["result"]["value"] == 0


def test_console_script_entry_point(session_file):
    proc = subprocess.run(
        [sys.executable, "-m", "cmreg.cli", "--session", session_file,
         "reg", "M"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["value"] == 1


def test_check_ring_indep_via_cli(session_file, capsys):
    code, out, _ = run(capsys, "--session", session_file, "check",
                       "ring-indep", "--module", "M")
    assert code == 0
    assert json.loads(out)["result"]["conclusion"]["verdict"] == "equality"


def test_tor_requires_same_ring(tmp_path, capsys):
    p = tmp_path / "two.cmreg"
    p.write_text("""
ring A = GF(32003)[x];
module M = cyclic(A);
ring B = GF(32003)[y];
module N = cyclic(B);
""")
    code, _, err = run(capsys, "--session", str(p), "tor", "M", "N")
    assert code == 1
    assert "different rings" in err

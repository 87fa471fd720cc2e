"""The shipped session files must parse and support their headline use."""

import json
import os

import pytest

import cmreg.cli as cli
from cmreg import parse_session

HERE = os.path.dirname(__file__)
SESSIONS = os.path.join(HERE, "..", "sessions")


def load(name):
    with open(os.path.join(SESSIONS, name), "r", encoding="utf-8") as fh:
        return fh.read()


@pytest.mark.parametrize("name", sorted(os.listdir(SESSIONS)))
def test_every_shipped_session_parses_and_round_trips(name):
    text = load(name)
    s = parse_session(text)
    assert s.order
    assert parse_session(s.render()).render() == s.render()


def run(*argv):
    import io
    import contextlib
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(list(argv))
    return code, buf.getvalue()


def path(name):
    return os.path.join(SESSIONS, name)


def test_determinantal_session_headline():
    code, out = run("--session", path("determinantal.cmreg"), "reg", "M")
    assert code == 0
    assert json.loads(out)["result"]["value"] == 1


def test_hypersurface_pair_session_headline():
    code, out = run("--session", path("hypersurface-pair.cmreg"),
                    "check", "tensor", "--modules", "M,N")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["conclusion"] == {"lhs": 1, "rhs": 1, "verdict": "equality"}


def test_two_quadrics_session_headline():
    code, out = run("--session", path("two-quadrics.cmreg"), "reg", "RC")
    assert code == 0
    assert json.loads(out)["result"]["value"] == 2
    code, out = run("--session", path("two-quadrics.cmreg"),
                    "betti", "k", "--max-len", "4")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["truncated"]
    # strictly linear syzygies with ranks climbing by one
    assert [1, 1, 2] in result["table"]["entries"]
    assert [4, 4, 5] in result["table"]["entries"]


def test_scroll_session_headline():
    code, out = run("--session", path("scroll-2.cmreg"),
                    "check", "filter", "--module", "M", "--form", "x3")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["conclusion"]["lhs"] == 1
    assert result["conclusion"]["rhs"] == 3
    assert result["invariants"]["strict"] is True


def test_free_socle_session_headline():
    code, out = run("--session", path("free-socle.cmreg"), "ext", "k", "F")
    assert code == 0
    entries = json.loads(out)["result"]["ext"]
    assert len(entries) == 1
    assert entries[0]["i"] == 3
    assert entries[0]["values"] == [{"degree": -3, "dim": 1}]

import json
import subprocess
import sys

import pytest

from multiseg.cli import main
from multiseg.core import INFINITY, Multisegment
from multiseg.finechain import fine_chain
from multiseg.minimal import enumerate_fiber, find_minimal
from multiseg.notation import multisegment_from_json, parse_multisegment

M = Multisegment.of
H7 = "[0,3]+[0,1]+[1,2]+[1,2]+[2,2]+[3,3]"
P7 = "[0,1]+[1,2]+[2,2]+[3,3]"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_remove(capsys):
    code, out, _ = run(capsys, "remove", "--delta", "[0,3]", "--h", "[[0,5],[3,8]]")
    assert code == 0
    assert parse_multisegment(out) == M((4, 5), (3, 8))


def test_remove_json_and_trace(capsys):
    code, data = run_json(capsys, "remove", "--delta", "[0,5]", "--h", "[0,7]+[3,6]+[6,10]", "--trace")
    assert code == 0
    assert multisegment_from_json(data["outcome"]) == M((3, 7), (6, 6), (6, 10))
    assert data["sequence"] == [[0, 7], [3, 6]]
    assert data["truncations"] == [[3, 7], [6, 6]]


def test_remove_multisegment_and_infinity(capsys):
    code, data = run_json(capsys, "remove", "--m", "[0,4]+[3]", "--h", "[0,5]+[3,8]")
    assert code == 0 and multisegment_from_json(data["outcome"]) == M((5, 5), (4, 8))
    code, data = run_json(capsys, "remove", "--delta", "[0,6]", "--h", "[0,5]+[3,8]")
    assert code == 1 and data["outcome"] == "infinity"


def test_fiber(capsys):
    code, out, _ = run(capsys, "fiber", "--h", H7, "--p", P7)
    assert code == 0 and "members (3)" in out
    code, data = run_json(capsys, "fiber", "--h", H7, "--p", P7)
    rep = enumerate_fiber(parse_multisegment(H7), parse_multisegment(P7))
    assert [multisegment_from_json(x) for x in data["members"]] == list(rep.members)
    assert len(data["minimal"]) == 1 and len(data["maximal"]) == 2
    assert [[multisegment_from_json(a), multisegment_from_json(b)] for a, b in data["hasse"]] == [
        list(e) for e in rep.hasse_edges
    ]


def test_fiber_over_infinity_is_domain_error(capsys):
    code, _, err = run(capsys, "fiber", "--h", H7, "--p", "infinity")
    assert code == 1 and "∞" in err


def test_chain(capsys):
    n, h = "[0,1]+[1,2]", "[0,4]+[1,5]"
    code, data = run_json(capsys, "chain", "--n", n, "--h", h, "--compare", "[0,2]+[1,1]")
    assert code == 0
    ch = fine_chain(parse_multisegment(n), parse_multisegment(h))
    assert [multisegment_from_json(t) for t in data["terms"]] == list(ch.terms)
    assert data["order"] == "EQ" and data["coincide"] is True
    code, out, _ = run(capsys, "chain", "--n", n, "--h", h, "--render")
    assert code == 0 and "#0#" in out


def test_chain_inadmissible(capsys):
    code, _, err = run(capsys, "chain", "--n", "[0,7]", "--h", "[0,4]")
    assert code == 1 and "not admissible" in err


def test_minimal_and_zpos(capsys):
    code, data = run_json(capsys, "minimal", "--n", "[0,3]+[3,4]", "--h", "[0,5]+[3,8]", "--trace")
    assert code == 0
    assert multisegment_from_json(data["minimal"]) == find_minimal(M((0, 3), (3, 4)), M((0, 5), (3, 8)))
    assert len(data["path"]) == 2
    code, data = run_json(capsys, "zpos", "--m", "[0,2]+[1,3]", "--leq", "[0,3]+[1,2]", "--down")
    assert data["leq"]["holds"] is True and data["generic"] is False
    assert len(data["downset"]) == 2


def test_minimizable(capsys):
    h = "[0,1]+[1,4]+[1,5]+[1,6]+[2,5]+[3,4]"
    code, data = run_json(capsys, "minimizable", "--n", "[1,3]+[1,6]+[2,4]", "--h", h)
    assert code == 0 and data["locally_minimizable"] is True
    code, data = run_json(capsys, "minimizable", "--n", "[1,3]+[1,6]+[2,5]", "--h", h)
    assert data["locally_minimizable"] is False


def test_twoseg(capsys):
    code, data = run_json(capsys, "twoseg", "--delta", "[0,3]", "--delta2", "[3,4]", "--h", "[0,5]+[3,8]")
    assert code == 0 and data["agree"] is True
    assert data["eta_before"] == [1, 0] and data["eta_after"] == [1, 1]
    assert multisegment_from_json(data["smaller"]["n"]) == M((0, 4), (3, 3))
    code, _, _ = run(capsys, "twoseg", "--delta", "[0,3]", "--delta2", "[1,2]", "--h", "[0,5]")
    assert code == 1


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--h", "[0,1]")
    assert code == 0 and out == " 0 - 1\n"
    code, data = run_json(capsys, "render", "--h", "[0,3]", "--mark", "[0,3]:0,1:removed")
    assert data["diagram"].startswith("*0*-*1*")
    code, _, _ = run(capsys, "render", "--h", "[0,3]", "--mark", "nonsense")
    assert code == 64


def test_check(capsys):
    code, out, _ = run(capsys, "check", "unique-minimum", "--window", "0:3", "--points", "5")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "certificate" and report["units"] == 302
    code, out, _ = run(capsys, "check", "--list")
    assert "convexity" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        [],
        ["remove", "--h", "[0,1]"],
        ["remove", "--delta", "[2,1]", "--h", "[0,1]"],
        ["check", "no-such-property", "--window", "0:2", "--points", "3"],
        ["check", "L1", "--window", "3:1", "--points", "3"],
        ["check", "L1"],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 64


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "multiseg.cli", "remove", "--delta", "[3]", "--h", "[0,5]+[3,8]"],
        capture_output=True, text=True, encoding="utf-8",
    )
    assert proc.returncode == 0
    assert parse_multisegment(proc.stdout) == M((0, 5), (4, 8))
    help_ = subprocess.run([sys.executable, "-m", "multiseg.cli", "--help"], capture_output=True, text=True)
    assert help_.returncode == 0 and "fiber" in help_.stdout


def test_infinity_never_parses_as_multisegment():
    assert multisegment_from_json("infinity") is INFINITY

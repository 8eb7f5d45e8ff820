from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from wiener_colorings.cli import main
from wiener_colorings.coloring import coloring_from_json, make_coloring, wiener_coloring
from wiener_colorings.cycles import good_partition_coloring, is_weak_max_cycle
from wiener_colorings.graph import build_cycle
from wiener_colorings.oracle import EnumerationScope, brute_force_classes
from wiener_colorings.paths import canonical_Ct_member, enumerate_Ct, is_in_Ct

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def golden(name: str) -> str:
    return (GOLDEN / name).read_text()


# [PAPER] W(f)=9 on C_6 and the (1,1,5) class total 21 on C_7
@pytest.mark.parametrize(
    "argv, expect",
    [
        (["--graph", "cycle:6", "--colors", "1,2,3,1,2,3"], "9\n"),
        (["--graph", "cycle:7", "--set", "1,2,4,5,6"], "21\n"),
        (["--graph", "path:1", "--set", "0"], "0\n"),
    ],
)
def test_wiener(capsys, argv, expect):
    assert run(capsys, "wiener", *argv)[:2] == (0, expect)


def test_wiener_per_class(capsys):
    code, out, _ = run(capsys, "wiener", "--graph", "cycle:6", "--colors", "1,1,3,1,2,3", "--per-class")
    total, detail = out.splitlines()
    assert code == 0 and total == "9"
    assert json.loads(detail) == {"W": 9, "type": [1, 2, 3], "per_class": {"1": 6, "2": 0, "3": 3}}


def test_wiener_from_file_and_graph_file(capsys, tmp_path):
    f = tmp_path / "f.json"
    f.write_text('{"graph": "cycle:6", "k": 3, "colors": [1,2,3,1,2,3]}')
    assert run(capsys, "wiener", "--coloring", str(f))[:2] == (0, "9\n")
    g = tmp_path / "g.txt"
    g.write_text("general 4 3\n0 1\n0 2\n0 3\n")
    assert run(capsys, "wiener", "--graph", str(g), "--set", "1,2,3")[:2] == (0, "6\n")


def test_construct_matches_library(capsys):
    code, out, _ = run(capsys, "construct", "path-ct", "--n", "14", "--type", "2,6,6")
    assert code == 0 and out == golden("construct_path_ct_266.jsonl")
    f = coloring_from_json(out)
    assert f == canonical_Ct_member((2, 6, 6)) and is_in_Ct(f)
    code, out, _ = run(capsys, "construct", "cycle-good-partition", "--type", "2,2,4")
    assert out == golden("construct_good_partition_224.jsonl")
    g = coloring_from_json(out)
    assert g == good_partition_coloring(8, (2, 2, 4)) and is_weak_max_cycle(g)


def test_construct_small_outputs(capsys):
    assert json.loads(run(capsys, "construct", "good-set", "--n", "8", "--m", "4")[1]) == {"graph": "cycle:8", "set": [0, 1, 4, 5]}
    assert json.loads(run(capsys, "construct", "equitable-type", "--n", "8", "--k", "3")[1]) == {"type": [2, 3, 3]}


def test_construct_rejects_bad_type(capsys):
    code, _, err = run(capsys, "construct", "path-ct", "--type", "2,0,3")
    assert code == 2 and "invalid type" in err
    assert run(capsys, "construct", "path-ct", "--n", "5", "--type", "2,2")[0] == 2


def test_enumerate_ct(capsys):
    code, out, _ = run(capsys, "enumerate", "ct", "--n", "4", "--type", "2,2")
    assert code == 0 and out == golden("enumerate_ct_22.jsonl")
    lines = out.splitlines()
    assert json.loads(lines[-1]) == {"count": 4}
    assert [coloring_from_json(x).colors for x in lines[:-1]] == [f.colors for f in enumerate_Ct((2, 2))]


# [PAPER] the left C_6 drawing is among the type (2,2,2) weak maximizers
def test_enumerate_wm(capsys):
    code, out, _ = run(capsys, "enumerate", "wm", "--graph", "cycle:6", "--k", "3", "--type", "2,2,2")
    assert code == 0 and out == golden("enumerate_wm_c6_222.jsonl")
    assert '"colors": [1, 2, 3, 1, 2, 3]' in out


def test_enumerate_wm_gallery_quotient(capsys):
    code, out, _ = run(capsys, "enumerate", "wm", "--graph", "cycle:7", "--k", "3", "--quotient", "graph-autos")
    assert out == golden("enumerate_wm_c7_autos.jsonl")
    assert json.loads(out.splitlines()[-1]) == {"count": 27}
    lib = brute_force_classes(EnumerationScope(build_cycle(7), 3, quotient="graph-autos")).wm
    assert {tuple(coloring_from_json(x).colors) for x in out.splitlines()[:-1]} == lib


def test_enumerate_set_max(capsys):
    code, out, _ = run(capsys, "enumerate", "set-max", "--graph", "cycle:6", "--m", "2")
    assert out == golden("enumerate_setmax_c6_2.jsonl")
    assert json.loads(out.splitlines()[-1]) == {"count": 3}


def test_enumerate_budget_exit_code(capsys):
    code, _, err = run(capsys, "enumerate", "all", "--graph", "path:12", "--k", "3", "--budget", "1000")
    assert code == 3 and "budget" in err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "path-triple-equivalence", "--n", "1..9", "--k", "1..3")
    assert code == 0
    row = out.splitlines()[1].split(",")
    assert row[0] == "path-triple-equivalence" and row[2] == "pass"


def test_verify_golden(capsys):
    code, out, _ = run(capsys, "verify", "maj-cycles-cases", "--n", "6..8", "--k", "2..3", "--no-timing")
    assert code == 0 and out == golden("verify_maj_cycles.csv")
    code, out, _ = run(capsys, "verify", "maj-cycles-cases", "--n", "6..8", "--k", "2..3", "--no-timing", "--format", "json")
    assert out == golden("verify_maj_cycles.jsonl")
    assert "W 9=9" in out


def test_verify_notes_to_stderr(capsys):
    code, out, err = run(capsys, "verify", "maj-cycles-cases", "--n", "6..6", "--k", "3..3", "--notes")
    assert code == 0 and "# maj-cycles-cases: C_6 (2, 2, 2)->(1, 2, 3)" in err


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "bogus-claim")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "min-cycles", "--n", "9..3")[0] == 2
    assert run(capsys, "verify", "min-cycles", "--n", "x")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from wiener_colorings import suites

    monkeypatch.setattr(suites, "is_min_type_path", lambda t: True)
    code, out, _ = run(capsys, "verify", "min-max-paths", "--n", "3..4", "--k", "2..2")
    assert code == 1 and ",fail," in out


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and len(out.splitlines()) == 12


def test_render_outputs(capsys, tmp_path):
    assert run(capsys, "render", "--graph", "cycle:6", "--colors", "1,2,3,1,2,3")[1] == "ABCABC\n"
    assert run(capsys, "render", "--graph", "cycle:6", "--colors", "1,2,3,1,2,3", "--format", "dot")[1] == golden("render_c6.dot")
    assert run(capsys, "render", "--graph", "cycle:6", "--colors", "1,2,3,1,2,3", "--format", "svg")[1] == golden("render_c6.svg")
    gallery = str(GOLDEN / "enumerate_wm_c7_autos.jsonl")
    assert run(capsys, "render", "--gallery", gallery)[1] == golden("gallery_c7.txt")
    assert run(capsys, "render", "--gallery", gallery, "--format", "svg")[1] == golden("gallery_c7.svg")
    target = tmp_path / "out.svg"
    assert run(capsys, "render", "--graph", "path:3", "--colors", "1,2,1", "--format", "svg", "-o", str(target))[0] == 0
    assert target.read_text().startswith("<svg")


def test_render_usage_errors(capsys):
    assert run(capsys, "render", "--graph", "cycle:6", "--colors", "1,2,3,1,2,3", "--format", "png")[0] == 2
    assert run(capsys, "render")[0] == 2
    assert run(capsys, "render", "--coloring", "/nonexistent/file.json")[0] == 2


def test_input_errors_exit_two(capsys):
    assert run(capsys, "wiener", "--graph", "cycle:2", "--set", "0")[0] == 2
    assert run(capsys, "wiener", "--graph", "path:4", "--colors", "1,3,1,3")[0] == 2
    assert run(capsys, "wiener", "--graph", "path:4", "--set", "9")[0] == 2
    assert run(capsys, "wiener", "--graph", "path:4", "--colors", "1,2", "--set", "1")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_numeric_output_matches_library(capsys):
    f = make_coloring(build_cycle(9), [1, 2, 3, 1, 2, 3, 1, 2, 3])
    out = run(capsys, "wiener", "--graph", "cycle:9", "--colors", "1,2,3,1,2,3,1,2,3")[1]
    assert out == f"{wiener_coloring(f)}\n"


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "wiener_colorings", "wiener", "--graph", "cycle:6", "--colors", "1,2,3,1,2,3"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and out.stdout == "9\n"
    bad = subprocess.run([sys.executable, "-m", "wiener_colorings", "verify", "bogus-claim"], capture_output=True, text=True)
    assert bad.returncode == 2

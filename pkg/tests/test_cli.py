import io
import json
import subprocess
import sys

import pytest

from splitpolar.cli import catalog_graph, main
from splitpolar.graph import build_named, disjoint_union, empty_graph, to_graph6
from splitpolar.search import all_graphs

C5 = "Dhc"


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_polarity_c5():
    code, out, _ = run(["polarity", "--s", "1", "--k", "1"], C5 + "\n")
    assert code == 1 and "non-polar(1,1)" in out
    code, out, _ = run(["polarity", "--s", "1", "--k", "2", "--format", "json-lines"], C5 + "\n")
    (rec,) = records(out)
    assert code == 0 and rec["verdict"] == "polar(1,2)" and len(rec["witness"]["A_parts"]) == 1
    assert set(rec) >= {"graph6", "command", "verdict", "witness"}


def test_polarity_inf_and_oracle_fallback():
    code, out, _ = run(["polarity", "--s", "inf", "--k", "inf"], C5)
    assert code == 0 and "polar(inf,inf)" in out
    code, out, _ = run(["polarity", "--s", "2", "--k", "2", "--format", "json-lines"],
                       to_graph6(catalog_graph("K2_join_2K2")) + "\n")
    assert records(out)[0]["method"] == "2K2-split"
    # 3K2 lies in none of the four classes, so the oracle decides it
    code, out, _ = run(["polarity", "--s", "0", "--k", "3", "--format", "json-lines"],
                       to_graph6(build_named("3K2")))
    (rec,) = records(out)
    assert code == 0 and rec["method"] == "oracle" and len(rec["witness"]["B_cliques"]) == 3


def test_obstructions_g2():
    code, out, _ = run(["obstructions", "--class", "pseudo-split", "--s", "2", "--k", "inf",
                        "--format", "json-lines"])
    assert code == 0 and len(records(out)) == 2
    assert all(r["order"] == 8 and r["params"] == "(2,inf)" for r in records(out))
    code, out, _ = run(["obstructions", "--class", "pseudo-split", "--unipolar"])
    assert code == 0 and out.splitlines()[0].split("\t")[1] == C5


def test_input_errors():
    code, _, err = run(["recognize"], C5 + "\n???\n")
    assert code == 2 and "line 2" in err and "malformed graph6" in err
    code, _, _ = run(["polarity", "--s", "x", "--k", "1"])
    assert code == 2
    code, _, _ = run(["polarity", "--s", "0", "--k", "0"], C5)
    assert code == 2
    code, _, err = run(["polarity", "--s", "1", "--k", "1"], to_graph6(disjoint_union(build_named("3K2"), empty_graph(11))))
    assert code == 2 and "order 17" in err
    code, _, err = run(["obstructions", "--class", "pseudo-split", "--s", "1"])
    assert code == 2
    code, _, _ = run(["catalog", "--name", "H_sk", "--s", "3", "--k", "2"])
    assert code == 2


def test_batch():
    stream = "\n".join(to_graph6(g) for g in all_graphs(5)) + "\n"
    code, out, _ = run(["batch"], stream)
    assert code == 0 and len(records(out)) == 34
    assert run(["batch"], "")[1] == ""
    code, out, _ = run(["batch"], "???\n" + C5 + "\n")
    bad, good = records(out)
    assert code == 0 and bad["error"] == "malformed graph6" and good["verdict"] == "pseudo-split"
    assert good["profile"]["chi"] == 3


def test_json_lines_stable():
    stream = "\n".join(to_graph6(g) for g in all_graphs(4))
    first = run(["recognize", "--format", "json-lines"], stream)[1]
    assert first == run(["recognize", "--format", "json-lines"], stream)[1]


def test_coloring_command():
    code, out, _ = run(["coloring"], C5)
    assert code == 0 and "chi=3 theta=3 cochromatic=3 bichromatic=3" in out
    code, out, _ = run(["coloring", "--format", "json-lines"], "C~")  # K4
    assert records(out)[0]["profile"]["chi"] == 4


CATALOG_CASES = [
    ("G_s0", {"s": 2}, "pseudo-split", (2, 1)),
    ("G_s1", {"s": 3}, "pseudo-split", (3, 1)),
    ("H_sk", {"s": 3, "k": 3}, "pseudo-split", (2, 2)),
    ("F_s", {"s": 3}, "pseudo-split", (3, 2)),
    ("K1_join_C5", {}, "pseudo-split", (1, 0)),
    ("one_I_full", {"s": 2}, "2K2-split", (2, 1)),
    ("one_I_miss2", {"s": 3}, "2K2-split", (4, 1)),
    ("one_I_miss1", {"s": 2}, "2K2-split", (3, 1)),
    ("H_s", {"s": 3}, "2K2-split", (4, 2)),
    ("K2_join_2K2", {}, "2K2-split", (2, 0)),
    ("K1_join_2K2_plus_K", {"k": 3}, "2K2-split", (1, 2)),
    ("star_k", {"k": 3}, "2K2-split", (1, 4)),
    ("tight_k", {"k": 3}, "2K2-split", (2, 3)),
    ("twin_left", {}, "2K2-split", (4, 4)),
    ("twin_right", {}, "2K2-split", (4, 4)),
]


@pytest.mark.parametrize("name,params,cls,sizes", CATALOG_CASES)
def test_catalog_roundtrip(name, params, cls, sizes):
    argv = ["catalog", "--name", name]
    for key, val in params.items():
        argv += [f"--{key}", str(val)]
    code, g6, _ = run(argv)
    assert code == 0
    code, out, _ = run(["recognize", "--format", "json-lines"], g6)
    (rec,) = records(out)
    assert rec["verdict"] == cls
    part = rec["profile"][cls]
    assert part["strict"] and (len(part["C"]), len(part["I"])) == sizes


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "splitpolar.cli", "polarity", "--s", "1", "--k", "1"],
                          input=C5, capture_output=True, text=True)
    assert proc.returncode == 1 and "non-polar(1,1)" in proc.stdout


def test_in_file(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(C5 + "\n")
    code, out, _ = run(["recognize", "--in", str(path)])
    assert code == 0 and out.startswith(C5 + ": pseudo-split")
    assert run(["recognize", "--in", str(tmp_path / "missing.g6")])[0] == 2

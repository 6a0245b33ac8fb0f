import io
import json
import subprocess
import sys

import pytest

from randic_extremal.cli import run
from randic_extremal.families import FamilySpec, is_member
from randic_extremal.graph_core import Graph


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_randic_on_k4():
    assert call("randic", stdin="C~\n") == (0, "2\t2.000000000000\n", "")


def test_randic_digits_and_blank_lines():
    code, out, _ = call("randic", "--digits", "3", stdin="\nBg\n\n")
    assert code == 0 and out == "sqrt(2)\t1.414\n"


def test_signature():
    code, out, _ = call("signature", stdin="D?{\n")
    assert code == 0 and out == "m1,4=4\tn1=4 n4=1\n"


def test_construct_gives_a_member():
    code, out, _ = call("construct", "--family", "lambda1", "--n", "9", "--k", "5")
    assert code == 0
    assert is_member(Graph.from_graph6(out.strip()), FamilySpec("lambda1", 9, 5))
    code, out, _ = call("construct", "--family", "omega1", "--n", "9", "--all")
    assert code == 0 and len(out.split()) >= 1


def test_transform_list_and_apply():
    code, out, _ = call("transform", "--kind", "t3", "--list", stdin="Cr\n")  # C4
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4 and lines[0].endswith("1/2\t0.500000000000")
    code, out, _ = call("transform", "--kind", "T3", "--site", "0", stdin="Cr\n")
    assert code == 0 and Graph.from_graph6(out.strip()).n == 5
    code, _, err = call("transform", "--kind", "T3", "--site", "9", stdin="Cr\n")
    assert code == 1 and "4 T3 sites" in err


def test_enumerate():
    code, out, _ = call("enumerate", "--n", "4", "--m", "4", "--connected")
    assert code == 0 and len(out.split()) == 2


def test_extremal_text_and_json():
    code, out, _ = call("extremal", "--n", "8", "--k", "5")
    assert code == 0 and out.startswith("n=8 k=5 max_degree=none classes=") and "rank 1: 4\t4.000000000000" in out
    code, out, _ = call("extremal", "--n", "9", "--k", "5", "--top", "2", "--json")
    data = json.loads(out)
    assert [r["rank"] for r in data["ranked_values"]] == [1, 2]


def test_verify_pass_and_counterexample():
    code, out, _ = call("verify", "--claim", "thm_tth1_1", "--n", "9")
    assert code == 0 and "status: PASS" in out
    code, out, _ = call("verify", "--claim", "thm_basth2_2", "--k", "6", "--json")
    assert code == 2 and json.loads(out)["status"] == "COUNTEREXAMPLE"


@pytest.mark.parametrize(
    "argv",
    [("bogus",), (), ("enumerate", "--n", "4"), ("enumerate", "--n", "4", "--m", "9"),
     ("construct", "--family", "lambda1", "--n", "5", "--k", "5"), ("verify", "--claim", "nope"),
     ("extremal", "--n", "30", "--k", "2"), ("randic", "--digits", "0")],
)
def test_usage_errors_exit_1(argv):
    code, _, err = call(*argv)
    assert code == 1 and err


def test_malformed_graph6_exits_3():
    code, out, err = call("randic", stdin="C~\nC!\n")
    assert code == 3
    assert out == "2\t2.000000000000\n"
    assert "line 2: malformed graph6 'C!'" in err


def test_missing_file_exits_3(tmp_path):
    code, _, err = call("randic", "--in", str(tmp_path / "none.g6"))
    assert code == 3 and "cannot open" in err
    code, _, _ = call("enumerate", "--n", "3", "--m", "2", "--out", str(tmp_path / "no" / "x"))
    assert code == 3


def test_out_file(tmp_path):
    target = tmp_path / "graphs.g6"
    assert call("enumerate", "--n", "4", "--m", "6", "--out", str(target))[0] == 0
    assert target.read_text() == "C~\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "randic_extremal", "randic"],
        input="C~\n", capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "2\t2.000000000000\n"

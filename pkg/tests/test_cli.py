import io
import json
import re
import shlex
from pathlib import Path

import pytest

from dyergrowth.cli import COMMANDS, run

ROOT = Path(__file__).resolve().parents[1]
GRAPHS = ROOT / "demos" / "graphs"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def readme_examples():
    """(command, expected stdout, expected exit code) from the README console blocks."""
    text = (ROOT / "README.md").read_text()
    cases = []
    for block in re.findall(r"```console\n(.*?)```", text, flags=re.S):
        current = None
        for line in block.splitlines():
            if line.startswith("$ dyergrowth "):
                current = [line[2:], [], 0]
                cases.append(current)
            elif line == "$ echo $?":
                current[2] = None
            elif current[2] is None:
                current[2] = int(line)
            else:
                current[1].append(line)
    return [(cmd, "".join(l + "\n" for l in out), code) for cmd, out, code in cases]


EXAMPLES = readme_examples()


def test_readme_has_examples():
    assert len(EXAMPLES) >= 15
    covered = {shlex.split(cmd)[1] for cmd, _, _ in EXAMPLES}
    assert covered == set(COMMANDS)


@pytest.mark.parametrize("cmd,expected,code", EXAMPLES, ids=[c for c, _, _ in EXAMPLES])
def test_readme_example(cmd, expected, code, monkeypatch):
    monkeypatch.chdir(ROOT)
    got_code, out, _ = call(*shlex.split(cmd)[1:])
    assert got_code == code
    assert out == expected


# -- goldens for the documented reference examples -------------------------

def test_series_golden():
    assert call("series", "--graph", GRAPHS / "dinfty.json")[1] == '{"num":[1,1],"den":[1,-1]}\n'


def test_rate_golden():
    code, out, _ = call("rate", "--graph", GRAPHS / "a3.json")
    data = json.loads(out)
    assert code == 0 and data["tau"] == [1, 1] and data["classification"] == "Spherical"


def test_ball_golden():
    code, out, _ = call("ball", "--graph", GRAPHS / "c5.json", "--max", 3, "--format", "csv")
    assert out.splitlines()[1:] == ["0,1", "1,2", "2,2", "3,0"]


def test_ball_methods_agree():
    g = GRAPHS / "example4.json"
    a = call("ball", "--graph", g, "--max", 5)[1]
    b = call("ball", "--graph", g, "--max", 5, "--method", "linear")[1]
    c = call("coeffs", "--graph", g, "--max", 5)[1]
    assert a == b == c


def test_json_formats_of_every_command():
    g, f = GRAPHS / "example4.json", GRAPHS / "triangle_family.json"
    for argv in [
        ("validate", "--graph", g),
        ("classify", "--graph", g),
        ("matrix", "--graph", g),
        ("induce", "--graph", g),
        ("nf", "--graph", g, "--word", "s1 s1^-1 s2"),
        ("wordlen", "--graph", g, "--word", "s2 s2"),
        ("ball", "--graph", g, "--max", 3),
        ("series", "--graph", g),
        ("coeffs", "--graph", g, "--max", 3),
        ("rate", "--graph", g),
        ("compare", "--graph", g, "--graph2", g, "--max", 5),
        ("distance", "--graph", g, "--graph2", g, "--max", 3),
        ("converge", "--family", f, "--ks", "7,8"),
    ]:
        code, out, err = call(*argv)
        assert code == 0 and err == "", argv
        json.loads(out)


def test_induce_json():
    data = json.loads(call("induce", "--graph", GRAPHS / "example4.json")[1])
    assert len(data["graph"]["vertices"]) == 6
    assert data["generator_map"]["v4"] == ["v4", "v4'"]


def test_compare_reports_margins():
    data = json.loads(call("compare", "--graph", GRAPHS / "triangle237.json",
                           "--graph2", GRAPHS / "triangle238.json", "--max", 12)[1])
    assert data["holds"]
    assert all(d >= 0 for d in data["margins"])


def test_output_is_deterministic():
    argv = ("converge", "--family", GRAPHS / "triangle_family.json", "--ks", "7,9,11")
    assert call(*argv) == call(*argv)
    argv = ("nf", "--graph", GRAPHS / "triangle237.json", "--word", "v1 v2 v3 v2 v1 v3 v3")
    assert call(*argv) == call(*argv)


# -- exit codes ---------------------------------------------------------------

def test_domain_errors_exit_one(tmp_path):
    code, out, err = call("classify", "--graph", GRAPHS / "bad.json")
    assert code == 1 and out == "" and "inf" in err
    code, _, err = call("nf", "--graph", GRAPHS / "a3.json", "--word", "x7")
    assert code == 1 and "x7" in err
    code, _, _ = call("compare", "--graph", GRAPHS / "c5.json", "--graph2", GRAPHS / "c3.json")
    assert code == 1
    bad = tmp_path / "neg.json"
    bad.write_text('{"vertices": [{"id": "a", "order": 1}], "edges": []}')
    assert call("series", "--graph", bad)[0] == 1
    assert call("validate", "--graph", GRAPHS / "bad.json")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("frobnicate",),
        ("series",),
        ("series", "--graph", "/nonexistent/graph.json"),
        ("ball", "--graph", GRAPHS / "c5.json"),
        ("ball", "--graph", GRAPHS / "c5.json", "--max", -1),
        ("ball", "--graph", GRAPHS / "c5.json", "--max", "three"),
        ("rate", "--graph", GRAPHS / "c5.json", "--tol", 0),
        ("nf", "--graph", GRAPHS / "c5.json"),
        ("compare", "--graph", GRAPHS / "c5.json"),
        ("converge", "--family", GRAPHS / "triangle_family.json"),
        ("series", "--graph", GRAPHS / "c5.json", "--format", "xml"),
    ],
)
def test_usage_errors_exit_two(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err


def test_malformed_json_is_usage_error(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    code, _, err = call("series", "--graph", p)
    assert code == 2 and "JSON" in err


def test_budget_exit_three():
    code, out, err = call("ball", "--graph", GRAPHS / "f2.json", "--max", 20, "--budget", 1000)
    assert code == 3 and out == "" and "budget" in err
    code, _, _ = call("ball", "--graph", GRAPHS / "f2.json", "--max", 20, "--budget", 1000,
                      "--method", "linear")
    assert code == 3


def test_help_exits_zero():
    code, out, _ = call("--help")
    assert code == 0 and "converge" in out

# Copyright 2023 Katteli Inc.
# TestFlows.com Open-Source Software Testing Framework (http://testflows.com)
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import json

import pytest
import yaml

from testflows.cycledepth.cli import main


@pytest.fixture
def write_graph(tmp_path):
    def write(text, name="graph.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bounds_csv(capsys):
    code, out, _ = run(capsys, "bounds", "--kmax", "5", "--csv")
    assert code == 0
    assert out.splitlines() == [
        "k,dirac,marshall_wood,circumference_bound,dominated",
        "3,5,3,3,true",
        "4,8,7,4,true",
        "5,13,9,5,true",
    ]


def test_bounds_yaml(capsys):
    code, out, _ = run(capsys, "bounds", "--kmax", "4")
    assert code == 0
    rows = yaml.safe_load(out)
    assert rows[1] == {
        "k": 4,
        "dirac": 8,
        "marshall_wood": 7,
        "circumference_bound": 4,
        "dominated": True,
    }


def test_treedepth_of_graph6_input(capsys, write_graph):
    code, out, _ = run(capsys, "td", write_graph("D~{\n"))
    assert code == 0
    doc = yaml.safe_load(out)
    assert doc["treedepth"] == 5
    assert sorted(doc["parent"]) == ["0", "1", "2", "3", "4"]


def test_treedepth_bounds(capsys, write_graph):
    code, out, _ = run(capsys, "td", write_graph("0 1\n1 2\n2 3\n"), "--bounds", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["lower"] <= 3 <= doc["upper"]


def test_treewidth(capsys, write_graph):
    code, out, _ = run(capsys, "tw", write_graph("0 1\n1 2\n2 0\n"), "--json")
    assert code == 0
    assert json.loads(out) == {"treewidth": 2}


def test_acyclic_circumference(capsys, write_graph):
    code, out, _ = run(capsys, "circ", write_graph("0 1\n1 2\n"), "--json")
    assert code == 0
    assert json.loads(out) == {"circumference": "+inf treewidth bound vacuous", "cycle": None}


def test_circumference_with_dot(capsys, write_graph, tmp_path):
    dot = tmp_path / "cycle.dot"
    code, out, _ = run(
        capsys, "circ", write_graph("0 1\n1 2\n2 3\n3 0\n"), "--json", "--dot", str(dot)
    )
    assert code == 0
    assert json.loads(out)["circumference"] == 4
    assert "color=red" in dot.read_text()


def test_blocks(capsys, write_graph, tmp_path):
    dot = tmp_path / "tree.dot"
    code, out, _ = run(
        capsys, "blocks", write_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n"), "--dot", str(dot)
    )
    assert code == 0
    doc = yaml.safe_load(out)
    block_tree = doc.pop("block_tree")
    assert doc == {"blocks": [[0, 1, 2], [2, 3, 4]], "cutvertices": [2], "bridges": []}
    assert block_tree.startswith("graph T {")
    assert "B0 -- x2" in block_tree
    assert dot.read_text() == block_tree


def test_cycle_through_edge(capsys, write_graph):
    code, out, _ = run(capsys, "cycle", write_graph("C~\n"), "--edge", "0,1", "--json", "--check")
    assert code == 0
    doc = json.loads(out)
    assert doc["length"] == 4
    assert doc["treedepth"] == 4
    assert doc["edge"] == [0, 1]


def test_cycle_requires_two_connected_graph(capsys, write_graph):
    code, _, err = run(capsys, "cycle", write_graph("0 1\n1 2\n"), "--edge", "0,1")
    assert code == 2
    assert "not 2-connected" in err


def test_cycle_requires_edge(capsys, write_graph):
    code, _, err = run(capsys, "cycle", write_graph("C~\n"), "--edge", "0,9")
    assert code == 2


def test_parse_error_exit_code(capsys, write_graph):
    code, _, err = run(capsys, "td", write_graph("0 1\n1 x\n"))
    assert code == 2
    assert "byte offset 6" in err


def test_size_error_exit_code(capsys, write_graph):
    text = "".join(f"{i} {i + 1}\n" for i in range(30))
    code, _, err = run(capsys, "tw", write_graph(text + "0 2\n"))
    assert code == 2
    assert "limit" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as e:
        main(["cycle", "-", "--edge", "0"])
    assert e.value.code == 2


def test_verify_is_deterministic(capsys, tmp_path):
    reports = []
    for name in ("a.jsonl", "b.jsonl"):
        out = tmp_path / name
        code, stdout, _ = run(
            capsys,
            "verify",
            "--model",
            "random_2connected",
            "--n",
            "6-8",
            "--seed",
            "7",
            "--count",
            "12",
            "--checks",
            "cycle_certificate,treewidth_circumference",
            "--out",
            str(out),
        )
        assert code == 0
        assert "failures 0" in stdout
        reports.append(out.read_bytes())
    assert reports[0] == reports[1]
    assert len(reports[0].splitlines()) == 12


def test_verify_graph6_file(capsys, write_graph):
    path = write_graph("Bw\nC~\nD~{\n", name="corpus.g6")
    code, stdout, _ = run(capsys, "verify", "--graph6", path, "--checks", "ab_path")
    assert code == 0
    assert "graphs 3, failures 0" in stdout


def test_tightness(capsys):
    code, out, _ = run(capsys, "tightness", "--nmax", "4")
    assert code == 0
    graph6 = [entry["graph6"] for entry in yaml.safe_load(out)]
    assert "Bw" in graph6
    assert "C~" in graph6


def test_separation_needs_raised_limit(capsys):
    code, _, _ = run(capsys, "separation", "--orders", "32")
    assert code == 2
    code, out, _ = run(capsys, "--treedepth-limit", "none", "separation", "--orders", "32")
    assert code == 0
    assert yaml.safe_load(out)[0]["td"] == 6


def test_verify_accepts_short_check_names(capsys, tmp_path):
    out = tmp_path / "report.jsonl"
    code, stdout, _ = run(
        capsys,
        "verify",
        "--model",
        "complete",
        "--n",
        "4",
        "--checks",
        "thm12,lemma31,lemma32,thm11",
        "--out",
        str(out),
    )
    assert code == 0
    assert "graphs 1, failures 0" in stdout
    record = json.loads(out.read_text())
    assert sorted(record["checks"]) == [
        "ab_path",
        "block_path",
        "cycle_certificate",
        "treewidth_circumference",
    ]


def test_verify_rejects_unknown_check(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "--model", "complete", "--n", "4", "--checks", "thm99"])
    assert e.value.code == 2
    assert "unknown check thm99" in capsys.readouterr().err

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
import networkx as nx
import pytest

from hypothesis import given, settings

from testflows.cycledepth.graph import (
    Cycle,
    Graph,
    ParseError,
    Path,
    ValidationError,
    components,
    connected_components,
    detect_format,
    induced_subgraph,
    is_connected,
    iter_vertices,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    popcount,
    remove_vertices,
    to_dot,
    to_edge_list,
    to_graph6,
    vertex_set,
)
from testflows.cycledepth.generators import complete_graph, cycle_graph, path_graph

from conftest import graphs, to_nx


def test_vertex_set_helpers():
    mask = vertex_set([5, 0, 3])
    assert mask == 0b101001
    assert list(iter_vertices(mask)) == [0, 3, 5]
    assert popcount(mask) == 3


def test_from_edges_rejects_self_loop_and_duplicates():
    with pytest.raises(ValidationError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValidationError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValidationError):
        Graph.from_edges(3, [(0, 3)])


def test_graph_rejects_asymmetric_masks():
    with pytest.raises(ValidationError):
        Graph(n=2, masks=(0b10, 0b00))


def test_parse_edge_list_relabels_in_input_order():
    graph = parse_edge_list("# triangle\n10 20\n20 30 # comment\n30 10\n")
    assert graph.n == 3
    assert graph.edges() == [(0, 1), (0, 2), (1, 2)]


def test_parse_edge_list_relabels_by_first_appearance():
    graph = parse_edge_list("7 3\n3 5\n")
    assert graph.n == 3
    assert graph.edges() == [(0, 1), (1, 2)]
    assert graph.degree(1) == 2


def test_parse_edge_list_size_header_keeps_labels_and_isolated_vertices():
    graph = parse_edge_list("# n=5\n0 4\n")
    assert graph.n == 5
    assert graph.edges() == [(0, 4)]
    assert graph.degree(2) == 0


def test_parse_edge_list_reports_byte_offset():
    with pytest.raises(ParseError) as e:
        parse_edge_list("0 1\n1 x\n")
    assert e.value.offset == 6


def test_parse_edge_list_rejects_three_labels():
    with pytest.raises(ParseError) as e:
        parse_edge_list("0 1\n1 2 3\n")
    assert e.value.offset == 4


def test_parse_edge_list_rejects_self_loop():
    with pytest.raises(ValidationError):
        parse_edge_list("1 1\n")


def test_graph6_k5():
    graph = parse_graph6("D~{")
    assert graph == complete_graph(5)
    assert graph.edge_count == 10


def test_graph6_header_is_optional():
    assert parse_graph6(">>graph6<<D~{") == parse_graph6("D~{")


def test_graph6_rejects_invalid_byte():
    with pytest.raises(ParseError) as e:
        parse_graph6("D~ {")
    assert e.value.offset == 2


def test_graph6_rejects_wrong_length():
    with pytest.raises(ParseError):
        parse_graph6("D~")


def test_detect_format():
    assert detect_format("D~{\n") == "graph6"
    assert detect_format(">>graph6<<D~{") == "graph6"
    assert detect_format("# comment\n0 1\n") == "edgelist"
    assert parse_graph("0 1\n1 2\n") == path_graph(3)
    with pytest.raises(ValueError):
        parse_graph("0 1", format="sparse6")


@given(graphs(max_n=9))
@settings(max_examples=200, deadline=None)
def test_graph6_matches_networkx(graph):
    encoded = to_graph6(graph)
    assert encoded == nx.to_graph6_bytes(to_nx(graph), header=False).decode().strip()
    assert parse_graph6(encoded) == graph


def test_graph6_large_order():
    graph = path_graph(70)
    encoded = to_graph6(graph)
    assert encoded[0] == "~"
    assert parse_graph6(encoded) == graph


@given(graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_edge_list_serialization(graph):
    assert parse_graph(to_edge_list(graph)) == graph


def test_path_and_cycle_validation():
    graph = cycle_graph(5)
    assert Path((0, 1, 2)).validate(graph).length == 2
    assert Cycle((0, 1, 2, 3, 4)).validate(graph).length == 5
    with pytest.raises(ValidationError):
        Path((0, 2)).validate(graph)
    with pytest.raises(ValidationError):
        Path((0, 1, 0)).validate(graph)
    with pytest.raises(ValidationError):
        Cycle((0, 1, 2)).validate(graph)
    with pytest.raises(ValidationError):
        Cycle((0, 1)).validate(graph)
    assert Cycle((0, 1, 2, 3, 4)).contains_edge(0, 4)
    assert Path((0, 1, 2)).reversed().vertices == (2, 1, 0)


def test_induced_subgraph_labels():
    graph = cycle_graph(6)
    sub, labels = induced_subgraph(graph, vertex_set([1, 2, 3, 5]))
    assert labels == (1, 2, 3, 5)
    assert sub.edges() == [(0, 1), (1, 2)]
    without, labels = remove_vertices(graph, 0)
    assert labels == (1, 2, 3, 4, 5)
    assert without == path_graph(5)


@given(graphs(max_n=8))
@settings(max_examples=150, deadline=None)
def test_components_match_networkx(graph):
    expected = sorted(sorted(c) for c in nx.connected_components(to_nx(graph)))
    found = [list(iter_vertices(c)) for c in connected_components(graph)]
    assert found == expected
    assert is_connected(graph) == (graph.n == 0 or nx.is_connected(to_nx(graph)))


def test_components_within():
    graph = path_graph(5)
    assert components(graph, within=vertex_set([0, 1, 3, 4])) == [0b00011, 0b11000]


def test_to_dot_highlights_cycle():
    graph = complete_graph(4)
    source = to_dot(graph, highlight=Cycle((0, 1, 2)))
    assert source.startswith("graph G {")
    assert "0 -- 1 [color=red penwidth=2]" in source
    assert "0 -- 3\n" in source
    assert "3\n" in source


def test_to_dot_rejects_foreign_highlight():
    with pytest.raises(ValidationError):
        to_dot(path_graph(3), highlight=Cycle((0, 1, 2)))

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
    Graph,
    PreconditionError,
    components,
    iter_vertices,
    vertex_set,
)
from testflows.cycledepth.decomposition import (
    NodeError,
    block_decomposition,
    branches_at_block,
    branches_at_cutvertex,
    bridges,
    cutvertices,
    is_two_connected,
)
from testflows.cycledepth.generators import (
    bowtie_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)

from conftest import connected_graphs, to_nx


def blocks_of(tree):
    return [list(iter_vertices(block)) for block in tree.blocks]


def test_bowtie():
    tree = block_decomposition(bowtie_graph())
    assert blocks_of(tree) == [[0, 1, 2], [2, 3, 4]]
    assert list(iter_vertices(tree.cutvertices)) == [2]
    assert tree.bridges() == []
    assert tree.blocks_containing(2) == (0, 1)
    assert tree.block_of(0) == 0
    with pytest.raises(NodeError):
        tree.block_of(2)


def test_path_blocks_are_bridges():
    graph = path_graph(4)
    tree = block_decomposition(graph)
    assert blocks_of(tree) == [[0, 1], [1, 2], [2, 3]]
    assert bridges(graph) == [(0, 1), (1, 2), (2, 3)]
    assert list(iter_vertices(cutvertices(graph))) == [1, 2]


def test_two_connected_graph_is_one_block():
    for graph in (complete_graph(4), cycle_graph(6), petersen_graph()):
        tree = block_decomposition(graph)
        assert tree.blocks == (graph.vertices,)
        assert tree.cutvertices == 0
        assert is_two_connected(graph)


def test_is_two_connected_edge_cases():
    assert not is_two_connected(complete_graph(2))
    assert not is_two_connected(complete_graph(1))
    assert not is_two_connected(bowtie_graph())
    assert not is_two_connected(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))


def test_preconditions():
    with pytest.raises(PreconditionError):
        block_decomposition(complete_graph(1))
    with pytest.raises(PreconditionError):
        block_decomposition(Graph.from_edges(3, [(0, 1)]))


def test_within_uses_host_ids():
    graph = cycle_graph(6)
    tree = block_decomposition(graph, within=vertex_set([1, 2, 3, 4]))
    assert blocks_of(tree) == [[1, 2], [2, 3], [3, 4]]
    assert list(iter_vertices(tree.cutvertices)) == [2, 3]


def test_block_tree_structure():
    tree = block_decomposition(star_graph(3))
    assert tree.tree_adjacency[("cutvertex", 0)] == [("block", 0), ("block", 1), ("block", 2)]
    assert len(tree.tree_edges()) == 3
    assert len(tree.nodes()) == 4
    assert tree.is_leaf(0, parent=0)
    assert not tree.is_leaf(0)
    with pytest.raises(NodeError):
        tree.check_cutvertex(1)
    with pytest.raises(NodeError):
        tree.check_block(3)


def test_branches_at_block():
    # triangle 0 1 2 with pendant paths at 1 and 2
    graph = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (1, 3), (3, 4), (2, 5)])
    tree = block_decomposition(graph)
    index = tree.block_of(0)
    branches = branches_at_block(tree, index)
    assert [branch.root_attachment for branch in branches] == [1, 2]
    assert [list(iter_vertices(branch.piece)) for branch in branches] == [[1, 3, 4], [2, 5]]


def test_branches_at_cutvertex():
    tree = block_decomposition(bowtie_graph())
    branches = branches_at_cutvertex(tree, 2)
    assert [list(iter_vertices(branch.piece)) for branch in branches] == [[0, 1, 2], [2, 3, 4]]
    assert all(branch.root_attachment == 2 for branch in branches)


def test_block_tree_dot():
    source = block_decomposition(bowtie_graph()).to_dot()
    assert source.startswith("graph T {")
    assert "B0 -- x2" in source
    assert "B1 -- x2" in source


@given(connected_graphs(min_n=2, max_n=8))
@settings(max_examples=200, deadline=None)
def test_blocks_match_networkx(graph):
    g = to_nx(graph)
    tree = block_decomposition(graph)
    expected = sorted(sorted(block) for block in nx.biconnected_components(g))
    assert blocks_of(tree) == expected
    assert sorted(iter_vertices(tree.cutvertices)) == sorted(nx.articulation_points(g))
    assert bridges(graph) == sorted(tuple(sorted(edge)) for edge in nx.bridges(g))


@given(connected_graphs(min_n=2, max_n=8))
@settings(max_examples=200, deadline=None)
def test_cutvertices_by_deletion(graph):
    found = cutvertices(graph)
    for v in range(graph.n):
        rest = graph.vertices & ~(1 << v)
        split = len(components(graph, within=rest)) > 1
        assert bool(found >> v & 1) == split


@given(connected_graphs(min_n=2, max_n=8))
@settings(max_examples=100, deadline=None)
def test_bridges_by_deletion(graph):
    g = to_nx(graph)
    expected = []
    for u, v in graph.edges():
        h = g.copy()
        h.remove_edge(u, v)
        if not nx.is_connected(h):
            expected.append((u, v))
    assert bridges(graph) == expected


@given(connected_graphs(min_n=2, max_n=8))
@settings(max_examples=100, deadline=None)
def test_block_tree_is_a_tree(graph):
    tree = block_decomposition(graph)
    t = nx.Graph()
    t.add_nodes_from(tree.nodes())
    t.add_edges_from(tree.tree_edges())
    assert nx.is_tree(t)

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
"""Cutvertices, bridges, blocks and the block tree of a connected graph.

Every function accepts an optional ``within`` vertex set and then works on
the induced subgraph ``graph[within]`` while keeping host vertex ids.
"""
import graphviz

from dataclasses import dataclass
from functools import cached_property

from .graph import (
    Graph,
    GraphError,
    PreconditionError,
    bit,
    is_connected,
    iter_vertices,
    popcount,
    vertex_set,
)


class NodeError(GraphError):
    pass


def _lowpoint_dfs(graph: Graph, within: int):
    """Biconnected components by iterative lowpoint depth-first search.

    Returns ``(blocks, cutvertices)`` with blocks as vertex sets.
    """
    discovery = {}
    low = {}
    blocks = []
    cutvertices = 0

    for root in iter_vertices(within):
        if root in discovery:
            continue
        discovery[root] = low[root] = len(discovery)
        root_children = 0
        edge_stack = []
        stack = [(root, root, iter(iter_vertices(graph.masks[root] & within)))]

        while stack:
            grandparent, parent, children = stack[-1]
            child = next(children, None)
            if child is not None:
                if child == grandparent:
                    continue
                if child in discovery:
                    if discovery[child] <= discovery[parent]:
                        # back edge
                        low[parent] = min(low[parent], discovery[child])
                        edge_stack.append((parent, child))
                else:
                    discovery[child] = low[child] = len(discovery)
                    edge_stack.append((parent, child))
                    stack.append(
                        (parent, child, iter(iter_vertices(graph.masks[child] & within)))
                    )
                continue

            stack.pop()
            if len(stack) > 1:
                if low[parent] >= discovery[grandparent]:
                    cutvertices |= bit(grandparent)
                    blocks.append(_pop_block(edge_stack, (grandparent, parent)))
                low[grandparent] = min(low[parent], low[grandparent])
            elif stack:
                root_children += 1
                blocks.append(_pop_block(edge_stack, (grandparent, parent)))

        if root_children > 1:
            cutvertices |= bit(root)

    return blocks, cutvertices


def _pop_block(edge_stack: list, edge: tuple) -> int:
    index = edge_stack.index(edge)
    block = 0
    for u, v in edge_stack[index:]:
        block |= bit(u) | bit(v)
    del edge_stack[index:]
    return block


def _block_key(block: int) -> tuple:
    return tuple(iter_vertices(block))


def _require_connected(graph: Graph, within: int):
    if within is None:
        within = graph.vertices
    if popcount(within) < 2:
        raise PreconditionError(f"graph has {popcount(within)} vertices, at least 2 required")
    if not is_connected(graph, within):
        raise PreconditionError("graph is not connected")
    return within


@dataclass(frozen=True)
class BlockTreeBranch:
    """One component of the block tree minus a node.

    ``piece`` is the vertex set of the union of the blocks in the component
    and ``root_attachment`` is the cutvertex joining it to the removed node.
    """

    root_attachment: int
    piece: int
    blocks: tuple


@dataclass(frozen=True)
class BlockTree:
    """Block tree of ``host[vertices]``.

    Block nodes are indexes into ``blocks``; cutvertex nodes are host
    vertex ids. Blocks are ordered by their sorted vertex tuples.
    """

    host: Graph
    vertices: int
    blocks: tuple
    cutvertices: int

    @cached_property
    def _blocks_at(self) -> dict:
        blocks_at = {}
        for index, block in enumerate(self.blocks):
            for v in iter_vertices(block):
                blocks_at.setdefault(v, []).append(index)
        return {v: tuple(indexes) for v, indexes in blocks_at.items()}

    def is_cutvertex(self, v: int) -> bool:
        return bool(self.cutvertices & bit(v))

    def blocks_containing(self, v: int) -> tuple:
        """Indexes of the blocks containing vertex ``v``."""
        return self._blocks_at.get(v, ())

    def block_of(self, v: int) -> int:
        """Index of the unique block containing non-cutvertex ``v``."""
        indexes = self.blocks_containing(v)
        if len(indexes) != 1:
            raise NodeError(f"vertex {v} is not in exactly one block")
        return indexes[0]

    def block_cutvertices(self, index: int) -> tuple:
        """Cutvertex neighbors of block node ``index``, ascending."""
        self.check_block(index)
        return tuple(iter_vertices(self.blocks[index] & self.cutvertices))

    def check_block(self, index: int):
        if not (isinstance(index, int) and 0 <= index < len(self.blocks)):
            raise NodeError(f"block {index} is not a node of the block tree")

    def check_cutvertex(self, x: int):
        if not self.is_cutvertex(x):
            raise NodeError(f"vertex {x} is not a cutvertex node of the block tree")

    def bridges(self) -> list:
        """Blocks consisting of a single edge."""
        return [_block_key(block) for block in self.blocks if popcount(block) == 2]

    @property
    def tree_adjacency(self) -> dict:
        """Bipartite adjacency: ``("block", i)`` and ``("cutvertex", x)`` nodes."""
        adjacency = {}
        for index in range(len(self.blocks)):
            adjacency[("block", index)] = [
                ("cutvertex", x) for x in self.block_cutvertices(index)
            ]
        for x in iter_vertices(self.cutvertices):
            adjacency[("cutvertex", x)] = [("block", i) for i in self.blocks_containing(x)]
        return adjacency

    def nodes(self) -> list:
        return list(self.tree_adjacency)

    def tree_edges(self) -> list:
        return [
            (("block", i), ("cutvertex", x))
            for i in range(len(self.blocks))
            for x in self.block_cutvertices(i)
        ]

    def is_leaf(self, index: int, parent: int = None) -> bool:
        """True if block ``index`` has no cutvertex other than ``parent``."""
        others = self.blocks[index] & self.cutvertices
        if parent is not None:
            others &= ~bit(parent)
        return not others

    def _collect(self, start: int, removed_block: int = None, removed_cutvertex: int = None):
        """Blocks reachable from block ``start`` avoiding a removed node."""
        seen = {start}
        queue = [start]
        while queue:
            index = queue.pop()
            for x in iter_vertices(self.blocks[index] & self.cutvertices):
                if x == removed_cutvertex:
                    continue
                for other in self.blocks_containing(x):
                    if other == removed_block or other in seen:
                        continue
                    seen.add(other)
                    queue.append(other)
        return tuple(sorted(seen))

    def _branch(self, attachment: int, indexes: tuple) -> BlockTreeBranch:
        piece = 0
        for index in indexes:
            piece |= self.blocks[index]
        return BlockTreeBranch(root_attachment=attachment, piece=piece, blocks=indexes)

    def to_dot(self) -> str:
        """Render the block tree as DOT."""
        dot = graphviz.Graph("T")
        for index, block in enumerate(self.blocks):
            label = "{" + ",".join(str(v) for v in iter_vertices(block)) + "}"
            dot.node(f"B{index}", label=label, shape="box")
        for x in iter_vertices(self.cutvertices):
            dot.node(f"x{x}", label=str(x), shape="circle")
        for (_, index), (_, x) in self.tree_edges():
            dot.edge(f"B{index}", f"x{x}")
        return dot.source


def block_decomposition(graph: Graph, within: int = None) -> BlockTree:
    """Compute the block tree of a connected graph with at least two vertices."""
    within = _require_connected(graph, within)
    blocks, cutvertices = _lowpoint_dfs(graph, within)
    return BlockTree(
        host=graph,
        vertices=within,
        blocks=tuple(sorted(blocks, key=_block_key)),
        cutvertices=cutvertices,
    )


def cutvertices(graph: Graph, within: int = None) -> int:
    """Vertex set of the cutvertices."""
    within = _require_connected(graph, within)
    return _lowpoint_dfs(graph, within)[1]


def bridges(graph: Graph, within: int = None) -> list:
    """Bridges as ``(u, v)`` with ``u < v`` in ascending order."""
    within = _require_connected(graph, within)
    blocks, _ = _lowpoint_dfs(graph, within)
    return sorted(_block_key(block) for block in blocks if popcount(block) == 2)


def is_two_connected(graph: Graph, within: int = None) -> bool:
    """Connected, at least three vertices and no cutvertex."""
    if within is None:
        within = graph.vertices
    if popcount(within) < 3 or not is_connected(graph, within):
        return False
    return _lowpoint_dfs(graph, within)[1] == 0


def branches_at_block(tree: BlockTree, index: int) -> list:
    """Components of the block tree minus block node ``index``, one per
    cutvertex of the block, ordered by that cutvertex."""
    tree.check_block(index)
    branches = []
    for y in tree.block_cutvertices(index):
        start = min(i for i in tree.blocks_containing(y) if i != index)
        indexes = tree._collect(start, removed_block=index)
        branches.append(tree._branch(y, indexes))
    return branches


def branches_at_cutvertex(tree: BlockTree, x: int) -> list:
    """Components of the block tree minus cutvertex node ``x``, one per
    block containing ``x``, ordered by block."""
    tree.check_cutvertex(x)
    return [
        tree._branch(x, tree._collect(index, removed_cutvertex=x))
        for index in tree.blocks_containing(x)
    ]

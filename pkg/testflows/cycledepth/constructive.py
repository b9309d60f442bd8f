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
"""Constructive long cycles.

``block_tree_path`` walks the block tree choosing at every step the branch
of largest treedepth, ``long_ab_path`` stitches per-block paths along such a
walk into an ``a``-``b`` path of length at least ``td(G - b)``, and
``long_cycle_through_edge`` closes that path with the edge ``ab`` into a
cycle of length at least ``td(G)``.

All recursion happens on vertex sets of the original graph so every
returned object uses its vertex ids.
"""
from dataclasses import dataclass
from typing import Optional

from .graph import (
    Cycle,
    Graph,
    Path,
    PreconditionError,
    bit,
    iter_vertices,
    lowest,
    popcount,
)
from .decomposition import (
    BlockTree,
    block_decomposition,
    branches_at_block,
    branches_at_cutvertex,
    is_two_connected,
)
from .invariants import (
    EliminationForest,
    InvariantCache,
    default_treedepth_limit,
    validate_elimination_forest,
)


class InvariantViolation(AssertionError):
    pass


def _expect(condition: bool, message: str):
    if not condition:
        raise InvariantViolation(message)


@dataclass(frozen=True)
class BlockTreePath:
    """Path ``B0 x1 B1 ... xm Bm`` in the block tree of ``host[vertices]``
    starting at a block containing ``anchor``."""

    host: Graph
    vertices: int
    anchor: int
    blocks: tuple
    cutvertices: tuple

    @property
    def m(self) -> int:
        return len(self.cutvertices)

    @property
    def anchors(self) -> tuple:
        """``(x0, x1, ..., xm)``, ``xi`` being the entry vertex of ``Bi``."""
        return (self.anchor,) + self.cutvertices

    def terms(self, cache: InvariantCache) -> tuple:
        """``td(Bi - xi)`` for every block of the path."""
        return tuple(
            cache.treedepth(block & ~bit(x)) for block, x in zip(self.blocks, self.anchors)
        )

    def validate(self, tree: BlockTree):
        """Raise InvariantViolation unless this is a path in ``tree``."""
        _expect(len(self.blocks) == self.m + 1, "block path needs one more block than cutvertices")
        _expect(all(block in tree.blocks for block in self.blocks), "block path uses a non-block")
        _expect(len(set(self.blocks)) == len(self.blocks), "block path repeats a block")
        _expect(
            len(set(self.cutvertices)) == len(self.cutvertices), "block path repeats a cutvertex"
        )
        _expect(bool(self.blocks[0] & bit(self.anchor)), f"anchor {self.anchor} is not in B0")
        for i, x in enumerate(self.cutvertices, 1):
            _expect(tree.is_cutvertex(x), f"x{i}={x} is not a cutvertex")
            _expect(
                bool(self.blocks[i - 1] & self.blocks[i] & bit(x)),
                f"x{i}={x} is not shared by B{i - 1} and B{i}",
            )
        return self

    def to_dict(self) -> dict:
        return {
            "anchor": self.anchor,
            "blocks": [list(iter_vertices(block)) for block in self.blocks],
            "cutvertices": list(self.cutvertices),
        }


@dataclass(frozen=True)
class CycleCertificate:
    """A cycle through ``edge`` together with the treedepth it bounds and
    the pieces it was assembled from."""

    edge: tuple
    cycle: Cycle
    treedepth: int
    segment_paths: tuple
    closing_vertex: Optional[int]
    block_path: Optional[BlockTreePath]

    @property
    def slack(self) -> int:
        return self.cycle.length - self.treedepth

    def to_dict(self) -> dict:
        return {
            "edge": list(self.edge),
            "cycle": list(self.cycle.vertices),
            "length": self.cycle.length,
            "treedepth": self.treedepth,
            "segment_paths": [list(path.vertices) for path in self.segment_paths],
            "closing_vertex": self.closing_vertex,
            "block_path": None if self.block_path is None else self.block_path.to_dict(),
        }


@dataclass(frozen=True)
class _PathWitness:
    path: Path
    block_path: Optional[BlockTreePath]
    segments: tuple
    closing: Optional[int]


def _cache(graph: Graph, cache: InvariantCache, limit: int) -> InvariantCache:
    if cache is None:
        return InvariantCache(graph, limit=limit)
    if cache.host is not graph and cache.host != graph:
        raise PreconditionError("cache belongs to a different graph")
    return cache


def block_tree_path(
    graph: Graph,
    x0: int,
    within: int = None,
    cache: InvariantCache = None,
    check: bool = False,
    limit: Optional[int] = default_treedepth_limit,
) -> BlockTreePath:
    """Block tree path from ``x0`` with ``sum td(Bi - xi) >= td(G - x0)``."""
    if within is None:
        within = graph.vertices
    graph.check_vertex(x0)
    if not within & bit(x0):
        raise PreconditionError(f"vertex {x0} is not in the graph")
    cache = _cache(graph, cache, limit)
    path = _block_tree_path(graph, within, x0, cache, check)
    if check:
        path.validate(block_decomposition(graph, within=within))
        total = sum(path.terms(cache))
        target = cache.treedepth(within & ~bit(x0))
        _expect(total >= target, f"block path sum {total} < td(G - x0) = {target}")
    return path


def _block_tree_path(graph: Graph, within: int, x0: int, cache: InvariantCache, check: bool):
    tree = block_decomposition(graph, within=within)

    if len(tree.blocks) == 1:
        return BlockTreePath(graph, within, x0, (tree.blocks[0],), ())

    if tree.is_cutvertex(x0):
        # td(G - x0) is attained by one of the branches at x0
        best, best_value = None, -1
        for branch in branches_at_cutvertex(tree, x0):
            value = cache.treedepth(branch.piece & ~bit(x0))
            if value > best_value:
                best, best_value = branch, value
        path = _block_tree_path(graph, best.piece, x0, cache, check)
        return BlockTreePath(graph, within, x0, path.blocks, path.cutvertices)

    index = tree.block_of(x0)
    block = tree.blocks[index]
    best, best_value = None, -1
    for branch in branches_at_block(tree, index):
        value = cache.treedepth(branch.piece & ~bit(branch.root_attachment))
        if value > best_value:
            best, best_value = branch, value

    if check:
        head = cache.treedepth(block & ~bit(x0))
        target = cache.treedepth(within & ~bit(x0))
        _expect(
            target <= head + best_value,
            f"td(G - x0) = {target} > td(B0 - x0) + td(Gj - yj) = {head} + {best_value}",
        )

    y = best.root_attachment
    path = _block_tree_path(graph, best.piece, y, cache, check)
    return BlockTreePath(graph, within, x0, (block,) + path.blocks, (y,) + path.cutvertices)


def extend_to_leaf(tree: BlockTree, path: BlockTreePath) -> BlockTreePath:
    """Extend ``path`` away from ``B0`` until its last block is a leaf of
    ``tree`` rooted at ``B0``, always taking the smallest cutvertex and
    then the first block."""
    blocks = list(path.blocks)
    cutvertices = list(path.cutvertices)
    index = tree.blocks.index(blocks[-1])
    entry = path.anchors[-1]

    while not tree.is_leaf(index, parent=entry):
        children = tree.blocks[index] & tree.cutvertices & ~bit(entry)
        y = lowest(children)
        index = next(i for i in tree.blocks_containing(y) if i != index)
        blocks.append(tree.blocks[index])
        cutvertices.append(y)
        entry = y

    return BlockTreePath(path.host, path.vertices, path.anchor, tuple(blocks), tuple(cutvertices))


def _long_ab_path(graph: Graph, within: int, a: int, b: int, cache: InvariantCache, check: bool):
    if popcount(within) == 2:
        return _PathWitness(Path((a, b)), None, (), None)

    rest = within & ~bit(b)
    tree = block_decomposition(graph, within=rest)
    block_path = extend_to_leaf(tree, _block_tree_path(graph, rest, a, cache, check))

    last, entry = block_path.blocks[-1], block_path.anchors[-1]
    candidates = graph.masks[b] & last & ~bit(entry)
    if not candidates:
        raise InvariantViolation(
            f"vertex {b} has no neighbor in the last block minus {entry}; "
            "the input is not 2-connected"
        )
    closing = lowest(candidates)

    anchors = block_path.anchors + (closing,)
    segments = []
    for i, block in enumerate(block_path.blocks):
        segment = _long_ab_path(graph, block, anchors[i + 1], anchors[i], cache, check)
        segments.append(segment.path.reversed())

    vertices = list(segments[0].vertices)
    for segment in segments[1:]:
        vertices.extend(segment.vertices[1:])
    vertices.append(b)
    path = Path(tuple(vertices))

    if check:
        lengths = sum(segment.length for segment in segments)
        terms = sum(block_path.terms(cache))
        without_ab = cache.treedepth(rest & ~bit(a))
        without_b = cache.treedepth(rest)
        _expect(lengths >= terms, f"segment lengths {lengths} < block terms {terms}")
        _expect(terms >= without_ab, f"block terms {terms} < td(G - a - b) = {without_ab}")
        _expect(without_ab >= without_b - 1, f"td(G - a - b) = {without_ab} < td(G - b) - 1")
        _expect(path.length >= without_b, f"path length {path.length} < td(G - b) = {without_b}")

    return _PathWitness(path, block_path, tuple(segments), closing)


def _require_path_input(graph: Graph, within: int, a: int, b: int):
    graph.check_vertex(a)
    graph.check_vertex(b)
    if a == b:
        raise PreconditionError("a and b must be distinct")
    if not within & bit(a) or not within & bit(b):
        raise PreconditionError(f"vertices {a} and {b} must both be in the graph")
    is_edge = popcount(within) == 2 and graph.has_edge(a, b)
    if not (is_edge or is_two_connected(graph, within)):
        raise PreconditionError("graph must be K2 or 2-connected")


def long_ab_path(
    graph: Graph,
    a: int,
    b: int,
    within: int = None,
    cache: InvariantCache = None,
    check: bool = False,
    limit: Optional[int] = default_treedepth_limit,
) -> Path:
    """An ``a``-``b`` path of length at least ``td(G - b)``."""
    if within is None:
        within = graph.vertices
    _require_path_input(graph, within, a, b)
    cache = _cache(graph, cache, limit)
    witness = _long_ab_path(graph, within, a, b, cache, check)
    if check:
        witness.path.validate(graph)
        target = cache.treedepth(within & ~bit(b))
        _expect(witness.path.length >= target, f"path length {witness.path.length} < td(G - b) = {target}")
    return witness.path


def long_cycle_through_edge(
    graph: Graph,
    a: int,
    b: int,
    cache: InvariantCache = None,
    check: bool = False,
    limit: Optional[int] = default_treedepth_limit,
) -> CycleCertificate:
    """A cycle through edge ``ab`` of length at least ``td(G)``."""
    graph.check_edge(a, b)
    if not is_two_connected(graph):
        raise PreconditionError("graph is not 2-connected")
    cache = _cache(graph, cache, limit)
    witness = _long_ab_path(graph, graph.vertices, a, b, cache, check)

    certificate = CycleCertificate(
        edge=(a, b),
        cycle=Cycle(witness.path.vertices),
        treedepth=cache.treedepth(),
        segment_paths=witness.segments,
        closing_vertex=witness.closing,
        block_path=witness.block_path,
    )
    if check:
        check_certificate(graph, certificate, cache=cache)
    return certificate


def check_certificate(graph: Graph, certificate: CycleCertificate, cache: InvariantCache = None):
    """Recompute every claim of ``certificate`` with the exact solver."""
    cache = _cache(graph, cache, None)
    a, b = certificate.edge
    try:
        certificate.cycle.validate(graph)
        for segment in certificate.segment_paths:
            segment.validate(graph)
    except Exception as e:
        raise InvariantViolation(str(e)) from e
    _expect(certificate.cycle.contains_edge(a, b), f"cycle does not contain edge {a} {b}")
    value = cache.treedepth()
    _expect(certificate.treedepth == value, f"claimed treedepth {certificate.treedepth} != {value}")
    _expect(
        certificate.cycle.length >= value,
        f"cycle length {certificate.cycle.length} < treedepth {value}",
    )
    if certificate.block_path is not None:
        path = certificate.block_path
        path.validate(block_decomposition(graph, within=path.vertices))
        _expect(path.anchor == a, f"block path anchor {path.anchor} != {a}")
        for segment, block, x in zip(certificate.segment_paths, path.blocks, path.anchors):
            _expect(
                all(block & bit(v) for v in segment.vertices),
                f"segment {segment.vertices} leaves its block",
            )
            _expect(segment.start == x, f"segment {segment.vertices} does not start at {x}")
            _expect(
                segment.length >= cache.treedepth(block & ~bit(x)),
                f"segment {segment.vertices} is shorter than td(B - {x})",
            )
        _expect(
            certificate.closing_vertex is not None and graph.has_edge(certificate.closing_vertex, b),
            f"closing vertex {certificate.closing_vertex} is not a neighbor of {b}",
        )


def claim_forest(
    graph: Graph,
    x0: int,
    within: int = None,
    cache: InvariantCache = None,
    limit: Optional[int] = default_treedepth_limit,
) -> EliminationForest:
    """Elimination forest of ``G - x0`` for a non-cutvertex ``x0``: an optimal
    forest of ``B0 - x0`` with optimal forests of every ``Gj - yj`` hung
    below ``yj``. Its vertex height is at most
    ``td(B0 - x0) + max td(Gj - yj)``."""
    if within is None:
        within = graph.vertices
    graph.check_vertex(x0)
    cache = _cache(graph, cache, limit)
    tree = block_decomposition(graph, within=within)
    if tree.is_cutvertex(x0):
        raise PreconditionError(f"vertex {x0} is a cutvertex")
    if len(tree.blocks) == 1:
        raise PreconditionError("graph has a single block")

    index = tree.block_of(x0)
    parent = dict(cache.forest(tree.blocks[index] & ~bit(x0)).parent)
    for branch in branches_at_block(tree, index):
        y = branch.root_attachment
        below = cache.forest(branch.piece & ~bit(y))
        for v, p in below.parent.items():
            parent[v] = y if p is None else p

    forest = EliminationForest.from_parents(graph, parent)
    ok, violation = validate_elimination_forest(forest, vertices=within & ~bit(x0))
    _expect(ok, f"claim forest is not an elimination forest: {violation and violation.detail}")
    return forest

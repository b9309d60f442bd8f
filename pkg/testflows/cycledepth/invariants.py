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
"""Exact invariants: treedepth with an elimination forest witness,
treewidth, circumference and longest cycles.
"""
import logging

from dataclasses import dataclass, field
from typing import Optional

from . import kernels
from .logger import logger
from .graph import (
    Cycle,
    Graph,
    ValidationError,
    bit,
    closure,
    components,
    induced_subgraph,
    iter_vertices,
    lowest,
    popcount,
)
from .decomposition import block_decomposition

#: default exact solver limits (vertices)
default_treedepth_limit = 20
default_treewidth_limit = 18
default_circumference_limit = 18
default_search_limit = 64


class SizeError(Exception):
    pass


def check_size(what: str, size: int, limit: int, hint: str):
    if limit is not None and size > limit:
        raise SizeError(f"{what} has {size} vertices, over the exact solver limit {limit}; {hint}")


@dataclass(frozen=True)
class EliminationForest:
    """Rooted forest on the vertex set of ``host`` given by parent links.

    ``parent`` maps every member vertex to its parent or ``None`` for roots.
    """

    host: Graph
    parent: dict = field(hash=False)
    vertex_height: int

    @classmethod
    def from_parents(cls, host: Graph, parent: dict):
        return cls(host=host, parent=dict(parent), vertex_height=_height(parent))

    @property
    def vertices(self) -> int:
        mask = 0
        for v in self.parent:
            mask |= bit(v)
        return mask

    @property
    def roots(self) -> list:
        return sorted(v for v, p in self.parent.items() if p is None)


def _height(parent: dict) -> int:
    """Maximum root-to-leaf vertex count of acyclic parent links."""
    depth = {}

    def resolve(v):
        chain = []
        while v is not None and v not in depth:
            if v in chain:
                raise ValidationError(f"parent links form a cycle through {v}")
            chain.append(v)
            v = parent.get(v)
        base = 0 if v is None else depth[v]
        for u in reversed(chain):
            base += 1
            depth[u] = base

    for v in parent:
        resolve(v)
    return max(depth.values(), default=0)


@dataclass(frozen=True)
class ForestViolation:
    """First violated elimination forest property."""

    kind: str
    detail: str
    edge: tuple = None
    cycle: tuple = None


def validate_elimination_forest(forest: EliminationForest, vertices: int = None):
    """Check elimination forest properties.

    Returns ``(True, None)`` or ``(False, ForestViolation)``.
    """
    host = forest.host
    parent = forest.parent
    if vertices is None:
        vertices = forest.vertices

    for v in iter_vertices(vertices):
        if v not in parent:
            return False, ForestViolation("vertex", f"vertex {v} is not in the forest")
    for v, p in parent.items():
        if not (0 <= v < host.n) or not vertices & bit(v):
            return False, ForestViolation("vertex", f"vertex {v} is not a graph vertex")
        if p is not None and p not in parent:
            return False, ForestViolation("vertex", f"parent {p} of {v} is not in the forest")

    ancestors = {}
    for v in sorted(parent):
        seen = [v]
        p = parent[v]
        mask = 0
        while p is not None:
            if p in seen:
                cycle = tuple(seen[seen.index(p) :])
                return False, ForestViolation(
                    "cycle", f"parent links form a cycle {cycle}", cycle=cycle
                )
            seen.append(p)
            mask |= bit(p)
            p = parent[p]
        ancestors[v] = mask

    for u, v in host.edges(within=vertices):
        if not (ancestors[u] & bit(v) or ancestors[v] & bit(u)):
            return False, ForestViolation(
                "edge", f"edge {u} {v} does not join an ancestor and a descendant", edge=(u, v)
            )

    height = _height(parent)
    if height != forest.vertex_height:
        return False, ForestViolation(
            "height", f"vertex height is {height} but {forest.vertex_height} is claimed"
        )
    return True, None


class InvariantCache:
    """Memoized treedepth of vertex sets of one host graph.

    Maps connected vertex sets to ``(treedepth, root)`` where ``root`` is
    the smallest vertex whose removal attains the minimum.
    """

    def __init__(self, host: Graph, limit: Optional[int] = default_treedepth_limit):
        self.host = host
        self.limit = limit
        self.memo = {}

    def treedepth(self, vertices: int = None) -> int:
        """Treedepth of ``host[vertices]``."""
        if vertices is None:
            vertices = self.host.vertices
        check_size(
            "graph", popcount(vertices), self.limit, "raise the limit or use treedepth_bounds"
        )
        return max((self._connected(part) for part in components(self.host, vertices)), default=0)

    def _connected(self, vertices: int) -> int:
        hit = self.memo.get(vertices)
        if hit is not None:
            return hit[0]

        host = self.host
        size = popcount(vertices)
        edges = host.edge_count_within(vertices)

        if size <= 2 or edges == size * (size - 1) // 2:
            value, root = size, lowest(vertices)
        else:
            lower = 2 if edges == size - 1 else 3
            value, root = size, lowest(vertices)
            for v in iter_vertices(vertices):
                height = 0
                for part in components(host, vertices & ~bit(v)):
                    height = max(height, self._connected(part))
                    if height + 1 >= value:
                        break
                if height + 1 < value:
                    value, root = height + 1, v
                    if value == lower:
                        break

        self.memo[vertices] = (value, root)
        return value

    def root(self, vertices: int) -> int:
        """Elimination root chosen for connected ``vertices``."""
        self._connected(vertices)
        return self.memo[vertices][1]

    def forest(self, vertices: int = None) -> EliminationForest:
        """Optimal elimination forest of ``host[vertices]``."""
        if vertices is None:
            vertices = self.host.vertices
        self.treedepth(vertices)
        parent = {}
        stack = [(part, None) for part in components(self.host, vertices)]
        while stack:
            part, above = stack.pop()
            root = self.root(part)
            parent[root] = above
            for rest in components(self.host, part & ~bit(root)):
                stack.append((rest, root))
        return EliminationForest.from_parents(self.host, parent)


def treedepth_exact(graph: Graph, limit: Optional[int] = default_treedepth_limit, cache: InvariantCache = None):
    """Return ``(treedepth, forest)`` with an optimal elimination forest."""
    if cache is None:
        cache = InvariantCache(graph, limit=limit)
    value = cache.treedepth()
    logger.debug(f"treedepth {value} for n={graph.n} ({len(cache.memo)} memoized sets)")
    return value, cache.forest()


def treedepth_bounds(graph: Graph):
    """Return ``(lower, upper, forest)`` without exhaustive search.

    A depth-first search tree is an elimination forest which gives the upper
    bound; its deepest root-to-leaf path is a path in the graph with
    ``k`` vertices, so treedepth is at least ``ceil(log2(k + 1))``.
    """
    parent = {}
    depth = {}
    for start in range(graph.n):
        if start in parent:
            continue
        parent[start] = None
        depth[start] = 1
        stack = [(start, iter(graph.adjacency[start]))]
        while stack:
            v, children = stack[-1]
            child = next((u for u in children if u not in parent), None)
            if child is None:
                stack.pop()
                continue
            parent[child] = v
            depth[child] = depth[v] + 1
            stack.append((child, iter(graph.adjacency[child])))
    deepest = max(depth.values(), default=0)
    forest = EliminationForest.from_parents(graph, parent)
    return deepest.bit_length(), forest.vertex_height, forest


def attach_root(forest: EliminationForest, x: int) -> EliminationForest:
    """Elimination forest of ``forest.vertices + x`` with ``x`` as the common
    root above all trees of ``forest``."""
    forest.host.check_vertex(x)
    if x in forest.parent:
        raise ValidationError(f"vertex {x} is already in the forest")
    parent = {v: (x if p is None else p) for v, p in forest.parent.items()}
    parent[x] = None
    return EliminationForest.from_parents(forest.host, parent)


def forest_from_order(graph: Graph, order, vertices: int = None) -> EliminationForest:
    """Elimination forest built from a vertex ordering, first vertex topmost.

    Vertices are added in reverse order; each new vertex becomes the parent of
    the current tree roots of its already added neighbors.
    """
    if vertices is None:
        vertices = graph.vertices
    order = list(order)
    if sorted(order) != list(iter_vertices(vertices)):
        raise ValidationError("order is not a permutation of the vertex set")
    parent = {}
    top = {}

    def find(v):
        while top[v] != v:
            top[v] = top[top[v]]
            v = top[v]
        return v

    for v in reversed(order):
        parent[v] = None
        top[v] = v
        for u in iter_vertices(graph.masks[v] & vertices):
            if u not in top:
                continue
            r = find(u)
            if r != v:
                parent[r] = v
                top[r] = v
    return EliminationForest.from_parents(graph, parent)


def is_star_forest(graph: Graph) -> bool:
    """True iff every component is a star ``K_{1,k}``, i.e. treedepth at most 2."""
    for part in components(graph):
        size = popcount(part)
        if size <= 2:
            continue
        if graph.edge_count_within(part) != size - 1:
            return False
        if not any(popcount(graph.masks[v] & part) == size - 1 for v in iter_vertices(part)):
            return False
    return True


def treewidth_exact(graph: Graph, limit: Optional[int] = default_treewidth_limit) -> int:
    """Exact treewidth, maximum over components; 0 for edgeless graphs and
    -1 for the empty graph."""
    value = -1
    for part in components(graph):
        size = popcount(part)
        if size == 1:
            value = max(value, 0)
            continue
        sub, _ = induced_subgraph(graph, part)
        if sub.edge_count == size - 1:
            value = max(value, 1)
            continue
        if sub.edge_count == size * (size - 1) // 2:
            value = max(value, size - 1)
            continue
        check_size("component", size, limit, "treewidth has no bounds-only mode")
        check_size("component", size, kernels.max_vertices, "graph is too large")
        value = max(value, int(kernels.treewidth_dp(kernels.adjacency_array(sub.masks), sub.n)))
    return value


def _dp_longest(sub: Graph, start: int, allowed: int, targets: int):
    """Longest path by subset DP from ``start`` to a vertex of ``targets``
    within ``allowed`` having at least 3 vertices."""
    adj = kernels.adjacency_array(sub.masks)
    ends = kernels.path_ends(adj, sub.n, start, allowed)
    mask, end = kernels.longest_closing(ends, targets, 3)
    if end < 0:
        return None
    return kernels.trace_path(ends, sub.masks, start, int(mask), int(end))


def _search_longest(sub: Graph, start: int, allowed: int, targets: int, stop_at_target: bool):
    """Longest path by pruned backtracking, same contract as ``_dp_longest``."""
    best = [None]
    best_size = [2]
    limit = popcount(allowed)

    def extend(path, visited):
        v = path[-1]
        if len(path) >= 3 and targets & bit(v) and len(path) > best_size[0]:
            best[0] = tuple(path)
            best_size[0] = len(path)
            if best_size[0] == limit:
                return True
        if stop_at_target and targets & bit(v) and len(path) > 1:
            return False
        free = allowed & ~visited
        reachable = closure(sub, v, free | bit(v)) & ~bit(v)
        if len(path) + popcount(reachable) <= best_size[0]:
            return False
        for u in iter_vertices(sub.masks[v] & free):
            path.append(u)
            if extend(path, visited | bit(u)):
                return True
            path.pop()
        return False

    extend([start], bit(start))
    return best[0]


def _longest_in_block(sub: Graph, start: int, allowed: int, targets: int, through_edge: bool, limits):
    dp_limit, search_limit = limits
    if dp_limit is None:
        dp_limit = default_circumference_limit
    check_size("block", sub.n, search_limit, "raise the search limit")
    if sub.n <= min(dp_limit, kernels.max_vertices):
        return _dp_longest(sub, start, allowed, targets)
    return _search_longest(sub, start, allowed, targets, stop_at_target=through_edge)


def longest_cycle(
    graph: Graph,
    limit: Optional[int] = default_circumference_limit,
    search_limit: Optional[int] = default_search_limit,
) -> Optional[Cycle]:
    """Longest cycle, or ``None`` if the graph is acyclic.

    Every cycle lies inside one block, so blocks are solved separately.
    """
    best = None
    for part in components(graph):
        if popcount(part) < 3:
            continue
        for block in block_decomposition(graph, within=part).blocks:
            size = popcount(block)
            if size < 3 or (best is not None and size <= best.length):
                continue
            sub, labels = induced_subgraph(graph, block)
            if sub.edge_count == size * (size - 1) // 2:
                found = tuple(range(size))
            else:
                found = None
                for start in range(size):
                    if found is not None and size - start <= len(found):
                        break
                    allowed = sub.vertices & ~((1 << start) - 1)
                    path = _longest_in_block(
                        sub, start, allowed, sub.masks[start], False, (limit, search_limit)
                    )
                    if path is not None and (found is None or len(path) > len(found)):
                        found = path
            if found is not None and (best is None or len(found) > best.length):
                best = Cycle(tuple(labels[v] for v in found))
    return best


def circumference(
    graph: Graph,
    limit: Optional[int] = default_circumference_limit,
    search_limit: Optional[int] = default_search_limit,
) -> Optional[int]:
    """Length of a longest cycle, ``None`` standing for +inf when acyclic."""
    cycle = longest_cycle(graph, limit=limit, search_limit=search_limit)
    return None if cycle is None else cycle.length


def longest_cycle_through_edge(
    graph: Graph,
    u: int,
    v: int,
    limit: Optional[int] = default_circumference_limit,
    search_limit: Optional[int] = default_search_limit,
) -> Optional[Cycle]:
    """Longest cycle containing edge ``uv`` or ``None`` if ``uv`` is a bridge."""
    graph.check_edge(u, v)
    part = closure(graph, u, graph.vertices)
    tree = block_decomposition(graph, within=part)
    block = next(b for b in tree.blocks if b & bit(u) and b & bit(v))
    if popcount(block) < 3:
        return None
    sub, labels = induced_subgraph(graph, block)
    index = {w: i for i, w in enumerate(labels)}
    path = _longest_in_block(
        sub, index[u], sub.vertices, bit(index[v]), True, (limit, search_limit)
    )
    if path is None:
        return None
    return Cycle(tuple(labels[w] for w in path))

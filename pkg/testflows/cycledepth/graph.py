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
"""Immutable simple undirected graphs over dense integer vertex ids.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set when vertex ``v``
is a member. Python integers are arbitrary precision, so the same
representation serves small and large graphs alike.
"""
import re
import itertools
import graphviz

from functools import cached_property
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

graph6_header = ">>graph6<<"

edge_list_size_header = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


class GraphError(Exception):
    pass


class ParseError(GraphError):
    """Malformed input, ``offset`` is the offending byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at byte offset {offset}")
        self.message = message
        self.offset = offset


class ValidationError(GraphError):
    pass


class PreconditionError(GraphError):
    pass


def vertex_set(vertices: Iterable[int]) -> int:
    """Return vertex set mask of the given vertices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_vertices(mask: int) -> Iterator[int]:
    """Iterate over members of the vertex set in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    """Return the smallest member of a non-empty vertex set."""
    return (mask & -mask).bit_length() - 1


def bit(v: int) -> int:
    return 1 << v


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``masks[v]`` is the neighbor set of ``v``.
    """

    n: int
    masks: tuple

    def __post_init__(self):
        if len(self.masks) != self.n:
            raise ValidationError(f"expected {self.n} neighbor sets, got {len(self.masks)}")
        for v, mask in enumerate(self.masks):
            if mask >> self.n:
                raise ValidationError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if mask & bit(v):
                raise ValidationError(f"self-loop at vertex {v}")
            for u in iter_vertices(mask):
                if not self.masks[u] & bit(v):
                    raise ValidationError(f"adjacency of {u} and {v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]):
        """Build graph from an edge list, rejecting self-loops and duplicate edges."""
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge {u} {v} has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if masks[u] & bit(v):
                raise ValidationError(f"duplicate edge {min(u, v)} {max(u, v)}")
            masks[u] |= bit(v)
            masks[v] |= bit(u)
        return cls(n=n, masks=tuple(masks))

    @property
    def vertices(self) -> int:
        """Vertex set of the whole graph."""
        return (1 << self.n) - 1

    @cached_property
    def adjacency(self) -> tuple:
        """Per-vertex sorted neighbor tuples."""
        return tuple(tuple(iter_vertices(mask)) for mask in self.masks)

    @cached_property
    def edge_count(self) -> int:
        return sum(popcount(mask) for mask in self.masks) // 2

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return popcount(self.masks[v])

    def degree_sequence(self) -> tuple:
        return tuple(self.degree(v) for v in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.masks[u] & bit(v))

    def edges(self, within: int = None) -> list:
        """Edges ``(u, v)`` with ``u < v`` in ascending order."""
        if within is None:
            within = self.vertices
        edges = []
        for u in iter_vertices(within):
            for v in iter_vertices(self.masks[u] & within & ~((bit(u) << 1) - 1)):
                edges.append((u, v))
        return edges

    def edge_count_within(self, within: int) -> int:
        return sum(popcount(self.masks[v] & within) for v in iter_vertices(within)) // 2

    def check_vertex(self, v: int):
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise ValidationError(f"vertex {v} is not in the graph")

    def check_edge(self, u: int, v: int):
        self.check_vertex(u)
        self.check_vertex(v)
        if not self.has_edge(u, v):
            raise ValidationError(f"edge {u} {v} is not in the graph")


@dataclass(frozen=True)
class Path:
    """Vertex sequence without repeats, consecutive vertices adjacent."""

    vertices: tuple

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def edges(self) -> list:
        return list(zip(self.vertices, self.vertices[1:]))

    def reversed(self):
        return Path(tuple(reversed(self.vertices)))

    def validate(self, graph: Graph):
        """Raise ValidationError unless this is a path in the graph."""
        if not self.vertices:
            raise ValidationError("path has no vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError(f"path {self.vertices} repeats a vertex")
        for v in self.vertices:
            graph.check_vertex(v)
        for u, v in self.edges():
            if not graph.has_edge(u, v):
                raise ValidationError(f"path step {u} {v} is not an edge")
        return self


@dataclass(frozen=True)
class Cycle:
    """Cyclic vertex sequence of at least three distinct vertices."""

    vertices: tuple

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list:
        return list(zip(self.vertices, self.vertices[1:] + self.vertices[:1]))

    def contains_edge(self, u: int, v: int) -> bool:
        return any({u, v} == {x, y} for x, y in self.edges())

    def validate(self, graph: Graph):
        """Raise ValidationError unless this is a cycle in the graph."""
        if len(self.vertices) < 3:
            raise ValidationError(f"cycle {self.vertices} has fewer than 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError(f"cycle {self.vertices} repeats a vertex")
        for v in self.vertices:
            graph.check_vertex(v)
        for u, v in self.edges():
            if not graph.has_edge(u, v):
                raise ValidationError(f"cycle step {u} {v} is not an edge")
        return self


def detect_format(text: str) -> str:
    """Guess input format: 'graph6' or 'edgelist'."""
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(graph6_header):
            return "graph6"
        if len(line.split()) == 1 and not line.isdigit():
            return "graph6"
        return "edgelist"
    return "edgelist"


def parse_graph(text: str, format: str = None) -> Graph:
    """Parse edge-list or graph6 text into a graph."""
    if format is None:
        format = detect_format(text)
    if format == "graph6":
        return parse_graph6(text)
    if format == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format '{format}'")


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with ``#`` comments.

    Labels are relabeled densely in order of first appearance. A ``# n=<n>``
    header fixes the vertex count and keeps labels as given, which preserves
    isolated vertices.
    """
    size = None
    pairs = []
    offset = 0
    for line in text.splitlines(keepends=True):
        start = offset
        offset += len(line.encode("utf-8"))
        content, _, comment = line.partition("#")
        if _ and size is None and not pairs and not content.strip():
            match = edge_list_size_header.match("#" + comment.strip())
            if match:
                size = int(match.group(1))
        tokens = []
        for match in re.finditer(r"\S+", content):
            token = match.group(0)
            if not token.isdigit():
                raise ParseError(
                    f"invalid vertex label '{token}'",
                    start + len(content[: match.start()].encode("utf-8")),
                )
            tokens.append(int(token))
        if not tokens:
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v' but found {len(tokens)} labels", start)
        pairs.append(tuple(tokens))

    if size is not None:
        return Graph.from_edges(size, pairs)

    index = {}
    for label in itertools.chain.from_iterable(pairs):
        index.setdefault(label, len(index))
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in pairs])


def _graph6_size(data: bytes, base: int):
    """Decode N(n) returning vertex count and number of bytes used."""
    if not data:
        raise ParseError("missing vertex count", base)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, skip = 6, 2
    else:
        width, skip = 3, 1
    if len(data) < skip + width:
        raise ParseError("truncated vertex count", base + len(data))
    n = 0
    for byte in data[skip : skip + width]:
        n = (n << 6) | (byte - 63)
    return n, skip + width


def parse_graph6(text: str) -> Graph:
    """Parse a single graph6 string, ``>>graph6<<`` header optional."""
    stripped = text.strip()
    base = len(text) - len(text.lstrip())
    if stripped.startswith(graph6_header):
        stripped = stripped[len(graph6_header) :]
        base += len(graph6_header)
    for i, char in enumerate(stripped):
        if not 63 <= ord(char) <= 126:
            raise ParseError(f"invalid graph6 byte {char!r}", base + i)
    raw = stripped.encode("ascii")

    n, used = _graph6_size(raw, base)
    data = raw[used:]
    bits = n * (n - 1) // 2
    expected = (bits + 5) // 6
    if len(data) != expected:
        raise ParseError(
            f"graph6 data has {len(data)} bytes, expected {expected} for n={n}",
            base + used + min(len(data), expected),
        )

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(graph: Graph, header: bool = False) -> str:
    """Serialize graph to graph6."""
    n = graph.n
    if n < 63:
        size = [n]
    elif n < 258048:
        size = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        size = [63, 63] + [(n >> shift) & 63 for shift in range(30, -1, -6)]

    values = []
    value, k = 0, 0
    for j in range(1, n):
        for i in range(j):
            value = (value << 1) | (1 if graph.masks[i] & bit(j) else 0)
            k += 1
            if k == 6:
                values.append(value)
                value, k = 0, 0
    if k:
        values.append(value << (6 - k))

    text = "".join(chr(v + 63) for v in size + values)
    return (graph6_header + text) if header else text


def to_edge_list(graph: Graph) -> str:
    """Serialize graph to edge-list text with a ``# n=<n>`` header."""
    lines = [f"# n={graph.n}"]
    lines += [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def induced_subgraph(graph: Graph, vertices: int):
    """Return ``(subgraph, labels)`` where ``labels[i]`` is the host vertex
    that became vertex ``i``. Labels are ascending."""
    labels = tuple(iter_vertices(vertices & graph.vertices))
    index = {v: i for i, v in enumerate(labels)}
    masks = []
    for v in labels:
        masks.append(vertex_set(index[u] for u in iter_vertices(graph.masks[v] & vertices)))
    return Graph(n=len(labels), masks=tuple(masks)), labels


def remove_vertices(graph: Graph, *vertices: int):
    """Return ``(G - vertices, labels)``."""
    return induced_subgraph(graph, graph.vertices & ~vertex_set(vertices))


def closure(graph: Graph, start: int, within: int) -> int:
    """Vertex set of the component of ``within`` containing ``start``."""
    seen = bit(start)
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_vertices(frontier):
            reach |= graph.masks[v]
        frontier = reach & within & ~seen
        seen |= frontier
    return seen


def components(graph: Graph, within: int = None) -> list:
    """Vertex sets of the components of ``graph[within]`` ordered by
    smallest contained vertex."""
    if within is None:
        within = graph.vertices
    parts = []
    remaining = within
    while remaining:
        part = closure(graph, lowest(remaining), within)
        parts.append(part)
        remaining &= ~part
    return parts


def connected_components(graph: Graph) -> list:
    return components(graph)


def is_connected(graph: Graph, within: int = None) -> bool:
    if within is None:
        within = graph.vertices
    if not within:
        return True
    return closure(graph, lowest(within), within) == within


highlight_edge_attrs = {"color": "red", "penwidth": "2"}
highlight_node_attrs = {"color": "red"}


def to_dot(graph: Graph, highlight: Optional[Union[Path, Cycle]] = None) -> str:
    """Render graph as DOT, nodes then edges in ascending order."""
    marked_edges = set()
    marked_nodes = set()
    if highlight is not None:
        highlight.validate(graph)
        marked_edges = {(min(u, v), max(u, v)) for u, v in highlight.edges()}
        marked_nodes = set(highlight.vertices)

    dot = graphviz.Graph("G")
    for v in range(graph.n):
        dot.node(str(v), **(highlight_node_attrs if v in marked_nodes else {}))
    for u, v in graph.edges():
        dot.edge(str(u), str(v), **(highlight_edge_attrs if (u, v) in marked_edges else {}))
    return dot.source

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
import random
import itertools
import networkx as nx

from dataclasses import dataclass, replace
from typing import Iterator, Optional

from .graph import Graph, ParseError, is_connected, parse_graph6
from .logger import logger

models = (
    "complete",
    "cycle",
    "path_plus_triangle",
    "random_2connected",
    "random_connected",
    "enumerate_all",
)
random_models = ("random_2connected", "random_connected")
sources = ("atlas", "labeled")

#: largest order covered by the graph atlas and the labeled enumerator
max_enumerated = 7

default_edge_density = 0.2


class GeneratorError(Exception):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    """Graph generator specification.

    The same specification always produces the same graph.
    """

    model: str
    n: int
    seed: int = 0
    edge_density: Optional[float] = None
    source: str = "atlas"

    def __post_init__(self):
        if self.model not in models:
            raise GeneratorError(f"unknown model {self.model!r}, expected one of {', '.join(models)}")
        if not isinstance(self.n, int) or self.n < 1:
            raise GeneratorError(f"n must be an integer >= 1, got {self.n!r}")
        if self.model in ("cycle", "path_plus_triangle", "random_2connected") and self.n < 3:
            raise GeneratorError(f"{self.model} requires n >= 3, got {self.n}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise GeneratorError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.edge_density is not None and not 0.0 <= self.edge_density <= 1.0:
            raise GeneratorError(f"edge_density must be in [0, 1], got {self.edge_density}")
        if self.source not in sources:
            raise GeneratorError(f"unknown source {self.source!r}, expected one of {', '.join(sources)}")
        if self.model == "enumerate_all" and self.n > max_enumerated:
            raise GeneratorError(f"enumerate_all supports n <= {max_enumerated}, got {self.n}")

    @property
    def density(self) -> float:
        return default_edge_density if self.edge_density is None else self.edge_density


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GeneratorError(f"cycle requires n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def bowtie_graph() -> Graph:
    """Two triangles sharing vertex 2."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def path_plus_triangle(n: int) -> Graph:
    """Path on ``n`` vertices plus the edge 0-2."""
    if n < 3:
        raise GeneratorError(f"path_plus_triangle requires n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, 2)])


def _permuted(rng: random.Random, n: int, edges: set) -> Graph:
    labels = list(range(n))
    rng.shuffle(labels)
    return Graph.from_edges(n, [(labels[u], labels[v]) for u, v in sorted(edges)])


def _add_chords(rng: random.Random, n: int, edges: set, density: float):
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < density:
            edges.add((u, v))


def random_two_connected(n: int, seed: int, density: float = default_edge_density) -> Graph:
    """Random 2-connected graph built by ear decomposition: a random cycle
    followed by ears between distinct existing vertices, then chords."""
    rng = random.Random(seed)
    size = rng.randint(3, n)
    edges = {tuple(sorted((i, (i + 1) % size))) for i in range(size)}
    used = size
    while used < n:
        u, v = rng.sample(range(used), 2)
        inner = rng.randint(1, n - used)
        ear = [u] + list(range(used, used + inner)) + [v]
        edges.update(tuple(sorted(pair)) for pair in zip(ear, ear[1:]))
        used += inner
    _add_chords(rng, n, edges, density)
    return _permuted(rng, n, edges)


def random_connected(n: int, seed: int, density: float = default_edge_density) -> Graph:
    """Random spanning tree plus chords."""
    rng = random.Random(seed)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    _add_chords(rng, n, edges, density)
    return _permuted(rng, n, edges)


def _atlas(n: int) -> Iterator[Graph]:
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() != n:
            continue
        if nx.is_connected(g):
            yield Graph.from_edges(n, g.edges())


def _labeled(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        graph = Graph.from_edges(n, [pair for i, pair in enumerate(pairs) if mask >> i & 1])
        if is_connected(graph):
            yield graph


def enumerate_graphs(n: int, source: str = "atlas") -> Iterator[Graph]:
    """Every connected graph of order ``n``.

    ``atlas`` yields one graph per isomorphism class, ``labeled`` every
    labeled graph.
    """
    if not 1 <= n <= max_enumerated:
        raise GeneratorError(f"enumeration supports 1 <= n <= {max_enumerated}, got {n}")
    if source == "atlas":
        return _atlas(n)
    if source == "labeled":
        return _labeled(n)
    raise GeneratorError(f"unknown source {source!r}, expected one of {', '.join(sources)}")


def generate(spec: GeneratorSpec):
    """Graph for ``spec``, or a graph stream for ``enumerate_all``."""
    if spec.model == "complete":
        return complete_graph(spec.n)
    if spec.model == "cycle":
        return cycle_graph(spec.n)
    if spec.model == "path_plus_triangle":
        return path_plus_triangle(spec.n)
    if spec.model == "random_2connected":
        return random_two_connected(spec.n, spec.seed, spec.density)
    if spec.model == "random_connected":
        return random_connected(spec.n, spec.seed, spec.density)
    return enumerate_graphs(spec.n, spec.source)


def corpus(spec: GeneratorSpec, count: int = 1, n_max: int = None) -> Iterator[Graph]:
    """Graph stream for orders ``spec.n`` to ``n_max``.

    Random models yield ``count`` graphs, task ``i`` using order
    ``spec.n + i % span`` and seed ``spec.seed ^ i``. Other models yield
    their graphs once per order and ignore ``count``.
    """
    if n_max is None:
        n_max = spec.n
    if n_max < spec.n:
        raise GeneratorError(f"n_max {n_max} is smaller than n {spec.n}")
    sizes = range(spec.n, n_max + 1)
    logger.debug(f"corpus {spec.model} n={spec.n}..{n_max} count={count}")

    if spec.model in random_models:
        for index in range(count):
            yield generate(replace(spec, n=sizes[index % len(sizes)], seed=spec.seed ^ index))
    elif spec.model == "enumerate_all":
        for n in sizes:
            yield from generate(replace(spec, n=n))
    else:
        for n in sizes:
            yield generate(replace(spec, n=n))


def read_graph6_stream(file) -> Iterator[Graph]:
    """Graphs from a graph6 file, one per line, blank lines skipped."""
    for number, line in enumerate(file, 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except ParseError as e:
            raise ParseError(f"line {number}: {e.message}", e.offset) from e

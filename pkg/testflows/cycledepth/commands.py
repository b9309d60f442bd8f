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
import sys
import json

from .actions import Action
from .config import Config
from .graph import iter_vertices, parse_graph, to_dot, to_graph6
from .decomposition import block_decomposition
from .invariants import (
    InvariantCache,
    longest_cycle,
    treedepth_bounds,
    treedepth_exact,
    treewidth_exact,
)
from .constructive import long_cycle_through_edge
from .generators import GeneratorSpec, corpus, read_graph6_stream
from .harness import (
    Limits,
    bound_table,
    bound_table_csv,
    separation_scan,
    tightness_scan,
    verify_corpus,
)
from .streamingyaml import StreamingYAMLWriter

#: rendering of a missing circumference
acyclic_circumference = "+inf treewidth bound vacuous"


def read_graph(args):
    """Read input graph from file or standard input."""
    with Action(f"Reading graph from {args.input}", graph=args.input):
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as f:
                text = f.read()
        return parse_graph(text, args.format)


def limits(config: Config) -> Limits:
    return Limits(
        treedepth=config.limits.treedepth,
        treewidth=config.limits.treewidth,
        circumference=config.limits.circumference,
        search=config.limits.search,
    )


def output(args, doc: dict):
    """Write ``doc`` as JSON or YAML to standard output."""
    if args.json:
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
        return
    writer = StreamingYAMLWriter(stream=sys.stdout, indent=0)
    for key, value in doc.items():
        writer.add_key_value(key, value)


def write_dot(path: str, source: str):
    with Action(f"Writing DOT to {path}"):
        with open(path, "w", encoding="utf-8") as f:
            f.write(source)


def blocks(args, config: Config):
    """Print blocks, cutvertices, bridges and the block tree as DOT."""
    graph = read_graph(args)
    with Action("Computing block decomposition"):
        tree = block_decomposition(graph)
        dot = tree.to_dot()
    output(
        args,
        {
            "blocks": [list(iter_vertices(block)) for block in tree.blocks],
            "cutvertices": list(iter_vertices(tree.cutvertices)),
            "bridges": [list(bridge) for bridge in tree.bridges()],
            "block_tree": dot,
        },
    )
    if args.dot:
        write_dot(args.dot, dot)


def treedepth(args, config: Config):
    """Print treedepth with an elimination forest."""
    graph = read_graph(args)
    if args.bounds:
        with Action("Computing treedepth bounds"):
            lower, upper, forest = treedepth_bounds(graph)
        doc = {"lower": lower, "upper": upper}
    else:
        with Action("Computing treedepth"):
            value, forest = treedepth_exact(graph, limit=config.limits.treedepth)
        doc = {"treedepth": value}
    doc["parent"] = {str(v): forest.parent[v] for v in sorted(forest.parent)}
    output(args, doc)


def treewidth(args, config: Config):
    """Print treewidth."""
    graph = read_graph(args)
    with Action("Computing treewidth"):
        value = treewidth_exact(graph, limit=config.limits.treewidth)
    output(args, {"treewidth": value})


def circumference(args, config: Config):
    """Print circumference with a longest cycle."""
    graph = read_graph(args)
    with Action("Computing circumference"):
        cycle = longest_cycle(
            graph, limit=config.limits.circumference, search_limit=config.limits.search
        )
    if cycle is None:
        doc = {"circumference": acyclic_circumference, "cycle": None}
    else:
        doc = {"circumference": cycle.length, "cycle": list(cycle.vertices)}
    output(args, doc)
    if args.dot:
        write_dot(args.dot, to_dot(graph, highlight=cycle))


def cycle(args, config: Config):
    """Print a cycle through an edge of length at least the treedepth."""
    graph = read_graph(args)
    a, b = args.edge
    with Action(f"Extracting cycle through edge {a} {b}") as action:
        cache = InvariantCache(graph, limit=config.limits.treedepth)
        certificate = long_cycle_through_edge(graph, a, b, cache=cache, check=config.check_certificates)
        action.note(f"length {certificate.cycle.length}, treedepth {certificate.treedepth}")
    output(args, certificate.to_dict())
    if args.dot:
        write_dot(args.dot, to_dot(graph, highlight=certificate.cycle))


def verify(args, config: Config):
    """Verify a corpus, write JSON lines report and print a summary."""
    if args.graph6:
        graphs = read_graph6_stream(args.graph6)
    else:
        low, high = args.n
        spec = GeneratorSpec(
            model=args.model,
            n=low,
            seed=args.seed,
            edge_density=args.density,
            source=args.source,
        )
        graphs = corpus(spec, count=args.count, n_max=high)

    report = verify_corpus(
        graphs,
        args.checks,
        limits=limits(config),
        check_certificates=config.check_certificates,
        workers=config.workers,
        out=args.out,
    )
    sys.stdout.write(report.summary())
    for graph6 in report.failures:
        sys.stdout.write(f"counterexample {graph6}\n")
    return 0 if report.ok else 1


def bounds(args, config: Config):
    """Print the bound comparison table."""
    rows = bound_table(args.kmax)
    if args.csv:
        sys.stdout.write(bound_table_csv(rows))
        return
    writer = StreamingYAMLWriter(stream=sys.stdout, indent=0)
    for row in rows:
        writer.add_list_element(row.to_dict())


def tightness(args, config: Config):
    """Print 2-connected graphs whose treedepth equals their circumference."""
    with Action(f"Scanning graphs up to order {args.nmax}"):
        graphs = tightness_scan(args.nmax)
    writer = StreamingYAMLWriter(stream=sys.stdout, indent=0)
    for graph in graphs:
        writer.add_list_element({"n": graph.n, "graph6": to_graph6(graph)})


def separation(args, config: Config):
    """Print treedepth against circumference for paths with a triangle."""
    with Action("Scanning path with a triangle"):
        rows = separation_scan(args.orders, limit=config.limits.treedepth)
    writer = StreamingYAMLWriter(stream=sys.stdout, indent=0)
    for row in rows:
        writer.add_list_element(row)

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
import io
import json
import math
import logging

from dataclasses import dataclass, field
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from .actions import Action
from .logger import logger
from .graph import Graph, bit, induced_subgraph, is_connected, parse_graph6, to_graph6
from .decomposition import block_decomposition, is_two_connected
from .invariants import (
    InvariantCache,
    SizeError,
    circumference,
    default_circumference_limit,
    default_search_limit,
    default_treedepth_limit,
    default_treewidth_limit,
    treewidth_exact,
)
from .constructive import (
    InvariantViolation,
    block_tree_path,
    check_certificate,
    long_ab_path,
    long_cycle_through_edge,
)
from .generators import (
    GeneratorError,
    enumerate_graphs,
    max_enumerated,
    path_plus_triangle,
)

#: verification checks in report order
checks = (
    "cycle_certificate",
    "treewidth_circumference",
    "block_path",
    "ab_path",
    "monotonicity",
    "block_law",
)

#: short check names accepted on the command line
check_aliases = {
    "thm12": "cycle_certificate",
    "thm11": "treewidth_circumference",
    "lemma31": "block_path",
    "lemma32": "ab_path",
}


@dataclass(frozen=True)
class Limits:
    """Exact solver limits passed to verification tasks."""

    treedepth: Optional[int] = default_treedepth_limit
    treewidth: Optional[int] = default_treewidth_limit
    circumference: Optional[int] = default_circumference_limit
    search: Optional[int] = default_search_limit


@dataclass(frozen=True)
class BoundRow:
    k: int
    dirac: int
    marshall_wood: int
    circumference_bound: int

    @property
    def dominated(self) -> bool:
        return self.circumference_bound <= self.marshall_wood <= self.dirac

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "dirac": self.dirac,
            "marshall_wood": self.marshall_wood,
            "circumference_bound": self.circumference_bound,
            "dominated": self.dominated,
        }


def bound_table(k_max: int) -> list:
    """Treedepth upper bounds for graphs of circumference ``k`` for
    ``k = 3..k_max``: longest path bound ``ceil(k^2/2)``, its refinement
    ``floor(k/2)(k-1)+1`` and ``k`` for 2-connected graphs."""
    if k_max < 3:
        raise ValueError(f"k_max must be >= 3, got {k_max}")
    return [
        BoundRow(
            k=k,
            dirac=-(-k * k // 2),
            marshall_wood=(k // 2) * (k - 1) + 1,
            circumference_bound=k,
        )
        for k in range(3, k_max + 1)
    ]


def bound_table_csv(rows: list) -> str:
    out = io.StringIO()
    out.write("k,dirac,marshall_wood,circumference_bound,dominated\n")
    for row in rows:
        out.write(
            f"{row.k},{row.dirac},{row.marshall_wood},{row.circumference_bound},"
            f"{str(row.dominated).lower()}\n"
        )
    return out.getvalue()


@dataclass
class VerificationReport:
    """Per-graph records, per-check counters and failing graphs in graph6."""

    records: list = field(default_factory=list)
    counters: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, record: dict):
        self.records.append(record)
        for name, result in record["checks"].items():
            counter = self.counters.setdefault(name, {"pass": 0, "fail": 0, "skip": 0})
            counter[result["status"]] += 1
        if any(result["status"] == "fail" for result in record["checks"].values()):
            self.failures.append(record["graph6"])

    def summary(self) -> str:
        """Fixed-width summary table."""
        lines = [f"{'check':<26}{'pass':>8}{'fail':>8}{'skip':>8}"]
        for name in checks:
            if name not in self.counters:
                continue
            counter = self.counters[name]
            lines.append(
                f"{name:<26}{counter['pass']:>8}{counter['fail']:>8}{counter['skip']:>8}"
            )
        lines.append(f"graphs {len(self.records)}, failures {len(self.failures)}")
        return "\n".join(lines) + "\n"


def _passed(**details):
    return {"status": "pass", **details}


def _failed(message, **details):
    return {"status": "fail", "message": message, **details}


def _skipped(reason):
    return {"status": "skip", "reason": reason}


class _Task:
    """Lazily computed invariants of one corpus graph."""

    def __init__(self, graph: Graph, limits: Limits, check_certificates: bool):
        self.graph = graph
        self.limits = limits
        self.check_certificates = check_certificates
        self.cache = InvariantCache(graph, limit=limits.treedepth)
        self.connected = graph.n >= 2 and is_connected(graph)
        self.two_connected = is_two_connected(graph)
        self._values = {}

    def value(self, name):
        """Invariant ``name`` or raise SizeError."""
        if name not in self._values:
            self._values[name] = getattr(self, f"_{name}")()
        return self._values[name]

    def _td(self):
        return self.cache.treedepth()

    def _tw(self):
        return treewidth_exact(self.graph, limit=self.limits.treewidth)

    def _circumference(self):
        return circumference(
            self.graph, limit=self.limits.circumference, search_limit=self.limits.search
        )

    def optional(self, name):
        try:
            return self.value(name)
        except SizeError:
            return None


def _check_cycle_certificate(task: _Task):
    if not task.two_connected:
        return _skipped("not 2-connected")
    td = task.value("td")
    circ = task.value("circumference")
    if circ is None or td > circ:
        return _failed(f"treedepth {td} exceeds circumference {circ}")
    shortest = None
    for a, b in task.graph.edges():
        certificate = long_cycle_through_edge(
            task.graph, a, b, cache=task.cache, check=task.check_certificates
        )
        check_certificate(task.graph, certificate, cache=task.cache)
        length = certificate.cycle.length
        shortest = length if shortest is None else min(shortest, length)
    return _passed(certificate_min=shortest)


def _check_treewidth_circumference(task: _Task):
    circ = task.value("circumference")
    if circ is None:
        return _skipped("acyclic")
    tw = task.value("tw")
    if tw > circ - 1:
        return _failed(f"treewidth {tw} exceeds circumference {circ} minus 1")
    return _passed()


def _check_block_path(task: _Task):
    if not task.connected:
        return _skipped("not connected with at least 2 vertices")
    graph, cache = task.graph, task.cache
    for x0 in range(graph.n):
        path = block_tree_path(graph, x0, cache=cache, check=task.check_certificates)
        total = sum(path.terms(cache))
        target = cache.treedepth(graph.vertices & ~bit(x0))
        if total < target:
            return _failed(f"block path from {x0} sums to {total} < td(G - {x0}) = {target}")
    return _passed()


def _check_ab_path(task: _Task):
    if not task.two_connected:
        return _skipped("not 2-connected")
    graph, cache = task.graph, task.cache
    for a in range(graph.n):
        for b in range(graph.n):
            if a == b:
                continue
            path = long_ab_path(graph, a, b, cache=cache, check=task.check_certificates)
            path.validate(graph)
            target = cache.treedepth(graph.vertices & ~bit(b))
            if path.start != a or path.end != b or path.length < target:
                return _failed(
                    f"path {path.vertices} from {a} to {b} is shorter than td(G - {b}) = {target}"
                )
    return _passed()


def _check_monotonicity(task: _Task):
    graph, cache = task.graph, task.cache
    if graph.n == 0:
        return _skipped("empty graph")
    td = task.value("td")
    for x in range(graph.n):
        without = cache.treedepth(graph.vertices & ~bit(x))
        if not without <= td <= without + 1:
            return _failed(f"td(G) = {td} but td(G - {x}) = {without}")
    return _passed()


def _check_block_law(task: _Task):
    if not task.connected:
        return _skipped("not connected with at least 2 vertices")
    graph = task.graph
    tw = task.value("tw")
    tree = block_decomposition(graph)
    widths = []
    for block in tree.blocks:
        sub, _ = induced_subgraph(graph, block)
        widths.append(treewidth_exact(sub, limit=task.limits.treewidth))
    if tw != max(widths):
        return _failed(f"treewidth {tw} != maximum block treewidth {max(widths)}")
    return _passed()


_check_functions = {
    "cycle_certificate": _check_cycle_certificate,
    "treewidth_circumference": _check_treewidth_circumference,
    "block_path": _check_block_path,
    "ab_path": _check_ab_path,
    "monotonicity": _check_monotonicity,
    "block_law": _check_block_law,
}


def verify_graph(
    graph: Graph,
    selected: Iterable[str],
    limits: Limits = Limits(),
    check_certificates: bool = False,
    index: int = 0,
) -> dict:
    """Run the ``selected`` checks on one graph and return its report record."""
    task = _Task(graph, limits, check_certificates)
    graph6 = to_graph6(graph)
    results = {}
    for name in checks:
        if name not in selected:
            continue
        with Action(
            f"Running check {name}", level=logging.DEBUG, graph=graph6, task=index, check=name
        ) as action:
            try:
                results[name] = _check_functions[name](task)
            except SizeError as e:
                results[name] = _skipped(str(e))
            except InvariantViolation as e:
                results[name] = _failed(str(e))
            if results[name]["status"] == "fail":
                logger.error(f"check failed: {results[name]['message']}", extra=action.extra)

    td = task.optional("td")
    circ = task.optional("circumference")
    return {
        "index": index,
        "graph6": graph6,
        "n": graph.n,
        "edges": graph.edge_count,
        "two_connected": task.two_connected,
        "td": td,
        "tw": task.optional("tw"),
        "circumference": circ,
        "slack": None if td is None or circ is None else circ - td,
        "checks": results,
    }


def _verify_task(arguments):
    index, graph6, selected, limits, check_certificates = arguments
    return verify_graph(parse_graph6(graph6), selected, limits, check_certificates, index)


def verify_corpus(
    graphs: Iterable[Graph],
    selected: Iterable[str],
    limits: Limits = Limits(),
    check_certificates: bool = False,
    workers: int = 1,
    out=None,
) -> VerificationReport:
    """Verify every graph of the corpus, streaming JSON lines to ``out``.

    Records are written in corpus order for any number of workers.
    """
    selected = set(selected)
    unknown = selected - set(checks)
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    selected = tuple(name for name in checks if name in selected)
    report = VerificationReport()
    tasks = (
        (index, to_graph6(graph), selected, limits, check_certificates)
        for index, graph in enumerate(graphs)
    )

    with Action(f"Verifying corpus with checks {', '.join(selected) or 'none'}") as action:
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                _collect(report, executor.map(_verify_task, tasks, chunksize=16), out)
        else:
            _collect(report, map(_verify_task, tasks), out)
        action.note(f"{len(report.records)} graphs, {len(report.failures)} failures")
    return report


def _collect(report: VerificationReport, records, out):
    for record in records:
        report.add(record)
        if out is not None:
            out.write(json.dumps(record, sort_keys=True) + "\n")
            out.flush()


def tightness_scan(n_max: int) -> list:
    """2-connected graphs of order 3 to ``n_max`` whose treedepth equals
    their circumference, one per isomorphism class."""
    if not 3 <= n_max <= max_enumerated:
        raise GeneratorError(f"n_max must be in 3..{max_enumerated}, got {n_max}")
    tight = []
    for n in range(3, n_max + 1):
        for graph in enumerate_graphs(n):
            if not is_two_connected(graph):
                continue
            if InvariantCache(graph).treedepth() == circumference(graph):
                tight.append(graph)
    logger.debug(f"tightness scan n <= {n_max}: {len(tight)} graphs")
    return tight


def separation_scan(n_values: Iterable[int], limit: Optional[int] = None) -> list:
    """Treedepth and circumference of the path with a triangle on each
    order: circumference stays 3 while treedepth grows like ``log2 n``."""
    rows = []
    for n in n_values:
        graph = path_plus_triangle(n)
        rows.append(
            {
                "n": n,
                "td": InvariantCache(graph, limit=limit).treedepth(),
                "circumference": circumference(graph),
                "log2_n": math.log2(n),
            }
        )
    return rows

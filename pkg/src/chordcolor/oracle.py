"""Independent exponential-time solver used as ground truth.

Builds its own crossing graph from ``crosses`` and never touches the
branching machinery, so agreement with ``solver.solve`` is meaningful.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Mapping

import networkx as nx

from chordcolor.chords import crosses
from chordcolor.instance import (
    Color,
    ColorSet,
    Instance,
    PartialColoring,
    sorted_colors,
    validate_coloring,
)
from chordcolor.result import SolveResult, SolveStats, Verdict

logger = logging.getLogger(__name__)


class BudgetExceeded(Exception):
    """The search visited more nodes than it was allowed to."""

    def __init__(self, budget: int, nodes: int) -> None:
        self.budget = budget
        self.nodes = nodes
        super().__init__(f"node budget {budget} exceeded after {nodes} nodes")


def crossing_graph(instance: Instance) -> nx.Graph:
    graph = nx.Graph()
    vertices = instance.vertices
    graph.add_nodes_from(vertices)
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            if crosses(instance.chord(u), instance.chord(v)):
                graph.add_edge(u, v)
    return graph


class _Backtracker:
    def __init__(self, graph: nx.Graph, budget: int | None) -> None:
        self.graph = graph
        self.budget = budget
        self.order = sorted(graph.nodes, key=lambda v: (-graph.degree[v], v))
        self.nodes = 0
        self.depth = 0

    def search(
        self, domains: Mapping[int, ColorSet], assigned: dict[int, Color]
    ) -> dict[int, Color] | None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.budget, self.nodes)
        self.depth = max(self.depth, len(assigned))

        unassigned = [v for v in self.order if v not in assigned]
        if not unassigned:
            return assigned
        # singleton lists first
        vertex = next((v for v in unassigned if len(domains[v]) == 1), unassigned[0])

        for color in sorted_colors(domains[vertex]):
            narrowed = dict(domains)
            narrowed[vertex] = frozenset((color,))
            if not self._propagate(narrowed, assigned, vertex, color):
                continue
            found = self.search(narrowed, {**assigned, vertex: color})
            if found is not None:
                return found
        return None

    def _propagate(
        self,
        domains: dict[int, ColorSet],
        assigned: Mapping[int, Color],
        vertex: int,
        color: Color,
    ) -> bool:
        for other in self.graph[vertex]:
            if other in assigned or color not in domains[other]:
                continue
            domains[other] = domains[other] - {color}
            if not domains[other]:
                return False
        return True


def oracle_solve(instance: Instance, *, budget: int | None = None) -> SolveResult:
    """Exact verdict by backtracking with unit propagation.

    Raises:
        BudgetExceeded: more than ``budget`` search nodes were needed.
    """
    search = _Backtracker(crossing_graph(instance), budget)
    found = search.search(dict(instance.lists), {})
    stats = SolveStats(nodes=search.nodes, depth=search.depth)
    if found is None:
        return SolveResult(Verdict.NO, None, stats)
    coloring = PartialColoring(found)
    if not validate_coloring(instance, coloring):
        raise RuntimeError("oracle produced an invalid coloring")
    return SolveResult(Verdict.YES, coloring, stats)


def exhaustive_solve(instance: Instance) -> SolveResult:
    """Enumerate the whole product of lists. Only sensible for tiny n."""
    vertices = instance.vertices
    choices = [sorted_colors(instance.lists[v]) for v in vertices]
    tried = 0
    for combination in itertools.product(*choices):
        tried += 1
        coloring = PartialColoring(dict(zip(vertices, combination)))
        if validate_coloring(instance, coloring):
            return SolveResult(Verdict.YES, coloring, SolveStats(nodes=tried))
    logger.debug("exhaustive search rejected all %d colorings", tried)
    return SolveResult(Verdict.NO, None, SolveStats(nodes=tried))

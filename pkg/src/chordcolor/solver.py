"""Divide-and-conquer list 3-coloring of circle graphs.

Above the brute-force threshold the instance is replaced by its family of
fully-separated subinstances; each element splits into two independent
halves of at most ceil(3n/4) chords, solved recursively. The answer is yes
as soon as one element has both halves yes.
"""

from __future__ import annotations

import logging
import math
from contextlib import closing

import networkx as nx

from chordcolor.branching import BranchRecorder, separated_family, split_full
from chordcolor.chords import ContractViolation
from chordcolor.instance import (
    COLOR_ORDER,
    Color,
    Instance,
    PartialColoring,
    coloring_problems,
    restrict,
)
from chordcolor.result import SolveResult, SolveStats, Verdict

logger = logging.getLogger(__name__)

DEFAULT_BASE_THRESHOLD = 8
MIN_BASE_THRESHOLD = 3


def brute_force_small(instance: Instance) -> SolveResult:
    """Exact answer by depth-first search over vertex ids and R < G < B.

    Returns the lexicographically first valid coloring.
    """
    coloring = _brute_force(instance)
    stats = SolveStats(nodes=1, brute_force_calls=1)
    if coloring is None:
        return SolveResult(Verdict.NO, None, stats)
    return SolveResult(Verdict.YES, coloring, stats)


def _brute_force(instance: Instance) -> PartialColoring | None:
    vertices = instance.vertices
    colors: dict[int, Color] = {}

    def extend(index: int) -> bool:
        if index == len(vertices):
            return True
        vertex = vertices[index]
        for color in COLOR_ORDER:
            if color not in instance.lists[vertex]:
                continue
            if any(colors.get(other) is color for other in instance.neighbors(vertex)):
                continue
            colors[vertex] = color
            if extend(index + 1):
                return True
            del colors[vertex]
        return False

    return PartialColoring(dict(colors)) if extend(0) else None


def _components(instance: Instance) -> list[list[int]]:
    graph = nx.Graph()
    graph.add_nodes_from(instance.vertices)
    graph.add_edges_from(
        (v, u) for v in instance.vertices for u in instance.neighbors(v) if v < u
    )
    return sorted(sorted(c) for c in nx.connected_components(graph))


class _Recursion:
    def __init__(
        self,
        base_threshold: int,
        recorder: BranchRecorder,
        split_components: bool,
    ) -> None:
        self.base_threshold = base_threshold
        self.recorder = recorder
        self.split_components = split_components
        self.stats = SolveStats()

    def solve(self, instance: Instance, depth: int) -> PartialColoring | None:
        self.stats.nodes += 1
        self.stats.depth = max(self.stats.depth, depth)

        if instance.n <= self.base_threshold:
            self.stats.brute_force_calls += 1
            return _brute_force(instance)

        if self.split_components:
            components = _components(instance)
            if len(components) > 1:
                return self._solve_components(instance, components, depth)

        limit = math.ceil(3 * instance.n / 4)
        examined = 0
        with closing(separated_family(instance, self.recorder)) as family:
            for element in family:
                examined += 1
                left, right = split_full(element)
                if left.n > limit or right.n > limit:
                    raise ContractViolation(
                        f"halves of sizes {left.n} and {right.n} exceed {limit} "
                        f"for n={instance.n}"
                    )
                self.stats.max_child_ratio = max(
                    self.stats.max_child_ratio, max(left.n, right.n) / instance.n
                )
                left_coloring = self.solve(left, depth + 1)
                if left_coloring is None:
                    continue
                right_coloring = self.solve(right, depth + 1)
                if right_coloring is None:
                    continue
                self.stats.family_sizes.append(examined)
                return element.partial.merge(left_coloring).merge(right_coloring)
        self.stats.family_sizes.append(examined)
        logger.debug("no element of %d answered yes at depth %d", examined, depth)
        return None

    def _solve_components(
        self, instance: Instance, components: list[list[int]], depth: int
    ) -> PartialColoring | None:
        merged = PartialColoring()
        for component in components:
            members = set(component)
            part = restrict(instance, lambda v, _: v in members)
            coloring = self.solve(part, depth + 1)
            if coloring is None:
                return None
            merged = merged.merge(coloring)
        return merged


def solve(
    instance: Instance,
    *,
    base_threshold: int = DEFAULT_BASE_THRESHOLD,
    recorder: BranchRecorder | None = None,
    split_components: bool = False,
) -> SolveResult:
    """Decide ``instance`` and return a witness coloring for yes answers."""
    if base_threshold < MIN_BASE_THRESHOLD:
        raise ValueError(
            f"base_threshold must be at least {MIN_BASE_THRESHOLD}, "
            f"got {base_threshold}"
        )
    recorder = recorder if recorder is not None else BranchRecorder()
    run = _Recursion(base_threshold, recorder, split_components)
    coloring = run.solve(instance, 0)
    run.stats.branching = recorder.to_dict()

    if coloring is None:
        logger.info("n=%d: no (%d nodes)", instance.n, run.stats.nodes)
        return SolveResult(Verdict.NO, None, run.stats)

    problems = coloring_problems(instance, coloring)
    if problems:
        raise ContractViolation(f"assembled coloring is invalid: {problems[0]}")
    logger.info("n=%d: yes (%d nodes)", instance.n, run.stats.nodes)
    return SolveResult(Verdict.YES, coloring, run.stats)

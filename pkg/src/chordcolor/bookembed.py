"""Three-page book embeddings of ordered graphs via circle-graph coloring.

Placing the vertices on a circle in their order turns every edge into a
chord; two edges may share a page iff their chords do not cross. Each vertex
gets a block of endpoint slots, one per incident edge, ordered so that edges
sharing a vertex come out nested and never cross.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from chordcolor.chords import Chord, ChordDiagram, ContractViolation, crosses
from chordcolor.instance import FULL_LIST, Color, Instance
from chordcolor.solver import DEFAULT_BASE_THRESHOLD, solve

Edge = tuple[int, int]

#: Edge index -> vertex id of its chord. The construction uses the identity.
EdgeChordMap = dict[int, int]

PAGE_OF_COLOR = {Color.RED: 1, Color.GREEN: 2, Color.BLUE: 3}
PAGES = (1, 2, 3)


@dataclass(frozen=True)
class OrderedGraph:
    """Vertices ``1 .. vertex_count`` in their integer order, plus edges."""

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be >= 0")
        seen: set[Edge] = set()
        for index, (u, v) in enumerate(self.edges):
            if u == v:
                raise ValueError(f"edge {index} is a self-loop at vertex {u}")
            for w in (u, v):
                if not 1 <= w <= self.vertex_count:
                    raise ValueError(
                        f"edge {index} endpoint {w} outside [1, {self.vertex_count}]"
                    )
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"edge {index} duplicates {key}")
            seen.add(key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class PageAssignment:
    """Page (1, 2 or 3) of every edge, indexed like ``OrderedGraph.edges``."""

    pages: tuple[int, ...]

    def page_of(self, edge: int) -> int:
        return self.pages[edge]

    def edges_on(self, page: int) -> list[int]:
        return [i for i, p in enumerate(self.pages) if p == page]


def interleaves(first: Edge, second: Edge) -> bool:
    """True iff the edges form a < c < b < d in the vertex order."""
    a, b = sorted(first)
    c, d = sorted(second)
    return a < c < b < d or c < a < d < b


def to_circle_instance(graph: OrderedGraph) -> tuple[Instance, EdgeChordMap]:
    """One chord per edge over ``2 * edge_count`` positions, all lists full."""
    incident: dict[int, list[tuple[int, int]]] = {
        u: [] for u in range(1, graph.vertex_count + 1)
    }
    for index, (u, v) in enumerate(graph.edges):
        incident[u].append((v, index))
        incident[v].append((u, index))

    slots: dict[int, list[int]] = {index: [] for index in range(graph.edge_count)}
    position = 0
    for u in range(1, graph.vertex_count + 1):
        backward = sorted((e for e in incident[u] if e[0] < u), reverse=True)
        forward = sorted((e for e in incident[u] if e[0] > u), reverse=True)
        for _, index in backward + forward:
            slots[index].append(position)
            position += 1

    chords = {index: Chord(*ends) for index, ends in slots.items()}
    instance = Instance(
        ChordDiagram(2 * graph.edge_count, chords),
        {index: FULL_LIST for index in chords},
    )
    _check_correspondence(graph, instance)
    return instance, {index: index for index in chords}


def _check_correspondence(graph: OrderedGraph, instance: Instance) -> None:
    for i, j in itertools.combinations(range(graph.edge_count), 2):
        chords_cross = crosses(instance.chord(i), instance.chord(j))
        if chords_cross != interleaves(graph.edges[i], graph.edges[j]):
            raise ContractViolation(
                f"edges {graph.edges[i]} and {graph.edges[j]}: chord crossing "
                "disagrees with interleaving"
            )


def validate_pages(graph: OrderedGraph, pages: PageAssignment | Sequence[int]) -> bool:
    """True iff no two edges on the same page interleave."""
    assigned = pages.pages if isinstance(pages, PageAssignment) else tuple(pages)
    if len(assigned) != graph.edge_count:
        return False
    if any(page not in PAGES for page in assigned):
        return False
    return not any(
        assigned[i] == assigned[j] and interleaves(graph.edges[i], graph.edges[j])
        for i, j in itertools.combinations(range(graph.edge_count), 2)
    )


def embed3(
    graph: OrderedGraph, *, base_threshold: int = DEFAULT_BASE_THRESHOLD
) -> PageAssignment | None:
    """A valid three-page assignment, or None if the order admits none."""
    instance, edge_to_chord = to_circle_instance(graph)
    result = solve(
        instance,
        base_threshold=base_threshold,
    )
    if result.coloring is None:
        return None
    assignment = PageAssignment(
        tuple(
            PAGE_OF_COLOR[result.coloring[edge_to_chord[edge]]]
            for edge in range(graph.edge_count)
        )
    )
    if not validate_pages(graph, assignment):
        raise ContractViolation("solver coloring does not give a valid embedding")
    return assignment


def exhaustive_pages(graph: OrderedGraph) -> PageAssignment | None:
    """First valid assignment in lexicographic page order, by brute force."""
    for pages in itertools.product(PAGES, repeat=graph.edge_count):
        if validate_pages(graph, pages):
            return PageAssignment(pages)
    return None

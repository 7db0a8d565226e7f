"""List-3-coloring instances over a chord diagram, and the reduction rule."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum

from chordcolor.chords import Chord, ChordDiagram, ContractViolation, crosses

logger = logging.getLogger(__name__)


class Color(Enum):
    """The three colors; values are the letters used in instance files."""

    RED = "R"
    GREEN = "G"
    BLUE = "B"


#: Fixed iteration order wherever the algorithm loops over colors.
COLOR_ORDER: tuple[Color, ...] = (Color.RED, Color.GREEN, Color.BLUE)

ColorSet = frozenset[Color]

FULL_LIST: ColorSet = frozenset(COLOR_ORDER)


def sorted_colors(colors: Iterable[Color]) -> list[Color]:
    return sorted(colors, key=COLOR_ORDER.index)


@dataclass(frozen=True)
class Instance:
    """A chord diagram plus a non-empty color list for every live chord."""

    diagram: ChordDiagram
    lists: Mapping[int, ColorSet]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "lists", {v: frozenset(s) for v, s in self.lists.items()}
        )
        if set(self.lists) != set(self.diagram.chords):
            raise ContractViolation("color lists do not match the live chords")
        for vertex, colors in self.lists.items():
            if not colors:
                raise ContractViolation(f"vertex {vertex} has an empty color list")

    @classmethod
    def build(
        cls,
        universe_size: int,
        chords: Mapping[int, tuple[int, int]],
        lists: Mapping[int, Iterable[Color]] | None = None,
    ) -> Instance:
        """Convenience constructor; missing lists default to all three colors."""
        lists = lists or {}
        return cls(
            ChordDiagram(universe_size, {v: Chord(*c) for v, c in chords.items()}),
            {v: frozenset(lists.get(v, FULL_LIST)) for v in chords},
        )

    @property
    def n(self) -> int:
        return self.diagram.n

    @property
    def vertices(self) -> list[int]:
        return self.diagram.vertices

    def chord(self, vertex: int) -> Chord:
        return self.diagram.chords[vertex]

    def neighbors(self, vertex: int) -> list[int]:
        return self.diagram.neighbors(vertex)


@dataclass(frozen=True)
class PartialColoring:
    """Vertex -> color decisions taken while shrinking an instance."""

    colors: Mapping[int, Color] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.colors)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.colors

    def __getitem__(self, vertex: int) -> Color:
        return self.colors[vertex]

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.colors))

    def get(self, vertex: int) -> Color | None:
        return self.colors.get(vertex)

    def items(self) -> list[tuple[int, Color]]:
        return sorted(self.colors.items())

    def merge(self, other: PartialColoring) -> PartialColoring:
        """Union of two colorings; overlapping vertices must agree."""
        merged = dict(self.colors)
        for vertex, color in other.colors.items():
            if merged.setdefault(vertex, color) is not color:
                raise ContractViolation(
                    f"vertex {vertex} colored {merged[vertex].name} "
                    f"and {color.name}"
                )
        return PartialColoring(merged)


@dataclass(frozen=True)
class Reduced:
    """Outcome of exhaustive reduction: the smaller instance and forced colors."""

    instance: Instance
    partial: PartialColoring


@dataclass(frozen=True)
class Infeasible:
    """Reduction emptied the list of ``vertex``."""

    vertex: int


def reduce(instance: Instance) -> Reduced | Infeasible:
    """Apply the singleton-list reduction rule until no singleton remains.

    Each vertex with a one-color list is deleted, its color is recorded, and
    the color is removed from the lists of every crossing vertex. Singletons
    are processed first-in first-out, seeded in ascending vertex order.
    """
    lists = dict(instance.lists)
    live = set(lists)
    forced: dict[int, Color] = {}
    queue = deque(v for v in instance.vertices if len(lists[v]) == 1)
    queued = set(queue)

    while queue:
        vertex = queue.popleft()
        (color,) = lists[vertex]
        live.discard(vertex)
        forced[vertex] = color
        for other in instance.neighbors(vertex):
            if other not in live or color not in lists[other]:
                continue
            lists[other] = lists[other] - {color}
            if not lists[other]:
                logger.debug("reduction emptied the list of vertex %d", other)
                return Infeasible(other)
            if len(lists[other]) == 1 and other not in queued:
                queue.append(other)
                queued.add(other)

    if not forced:
        return Reduced(instance, PartialColoring())
    return Reduced(
        Instance(instance.diagram.restrict(live), {v: lists[v] for v in live}),
        PartialColoring(forced),
    )


def assign(instance: Instance, vertices: Iterable[int], color: Color) -> Instance:
    """Replace the lists of ``vertices`` by ``{color}``."""
    vertices = list(vertices)
    if not vertices:
        return instance
    lists = dict(instance.lists)
    for vertex in vertices:
        if color not in lists[vertex]:
            raise ContractViolation(
                f"color {color.name} is not in the list of vertex {vertex}"
            )
        lists[vertex] = frozenset((color,))
    return Instance(instance.diagram, lists)


def restrict(instance: Instance, keep: Callable[[int, Chord], bool]) -> Instance:
    """Subinstance of the chords satisfying ``keep(vertex, chord)``."""
    kept = [v for v in instance.vertices if keep(v, instance.chord(v))]
    if len(kept) == instance.n:
        return instance
    return Instance(
        instance.diagram.restrict(kept), {v: instance.lists[v] for v in kept}
    )


class ColoringValidator:
    """Checks a coloring against the instance it claims to solve."""

    def __init__(self, original: Instance, coloring: PartialColoring) -> None:
        self.original = original
        self.coloring = coloring
        self.problems: list[str] = []

    def validate(self) -> list[str]:
        """Run every check and return the problems found (empty if valid)."""
        self.problems = []
        self._check_total()
        self._check_lists()
        self._check_conflicts()
        return self.problems

    def _check_total(self) -> None:
        for vertex in self.original.vertices:
            if vertex not in self.coloring:
                self.problems.append(f"vertex {vertex} has no color")
        for vertex in self.coloring:
            if vertex not in self.original.diagram:
                self.problems.append(f"vertex {vertex} is not in the instance")

    def _check_lists(self) -> None:
        for vertex in self.original.vertices:
            color = self.coloring.get(vertex)
            if color is not None and color not in self.original.lists[vertex]:
                self.problems.append(
                    f"vertex {vertex} colored {color.name} outside its list"
                )

    def _check_conflicts(self) -> None:
        vertices = self.original.vertices
        chords = self.original.diagram.chords
        for i, u in enumerate(vertices):
            for v in vertices[i + 1 :]:
                color = self.coloring.get(u)
                if color is None or color is not self.coloring.get(v):
                    continue
                if crosses(chords[u], chords[v]):
                    self.problems.append(
                        f"crossing vertices {u} and {v} are both {color.name}"
                    )


def coloring_problems(original: Instance, coloring: PartialColoring) -> list[str]:
    return ColoringValidator(original, coloring).validate()


def validate_coloring(original: Instance, coloring: PartialColoring) -> bool:
    """True iff ``coloring`` is a valid list 3-coloring of ``original``."""
    problems = coloring_problems(original, coloring)
    for problem in problems:
        logger.debug("invalid coloring: %s", problem)
    return not problems

"""Chord-diagram geometry: endpoints, crossings, arcs and circle partitions.

Endpoints are integer positions ``0 .. universe_size - 1`` laid out clockwise.
Positions are never renumbered: every subdiagram produced during a solve
lives in the coordinate system of the diagram it was cut from.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import NamedTuple


class ContractViolation(Exception):
    """Raised when a documented precondition or invariant does not hold."""


class Chord(NamedTuple):
    """A chord between two endpoint positions."""

    p: int
    q: int


class Side(Enum):
    """The four arcs of a circle partition, in clockwise order."""

    LEFT = "L"
    TOP = "T"
    RIGHT = "R"
    BOTTOM = "B"


_SIDE_ORDER = (Side.LEFT, Side.TOP, Side.RIGHT, Side.BOTTOM)


class ArcEnd(Enum):
    """End marker for :func:`split_arc`."""

    START = "start"
    END = "end"


def crosses(a: Chord, b: Chord) -> bool:
    """Return True iff the two chords intersect.

    Exactly one endpoint of ``b`` must lie strictly inside the interval
    spanned by ``a``; which of the two arcs of ``a`` is used does not matter.
    """
    if len({a.p, a.q, b.p, b.q}) != 4:
        raise ContractViolation(f"chords {tuple(a)} and {tuple(b)} share an endpoint")
    lo, hi = (a.p, a.q) if a.p < a.q else (a.q, a.p)
    return (lo < b.p < hi) != (lo < b.q < hi)


@dataclass(frozen=True)
class CircArc:
    """Positions ``start, start + 1, ..., start + length - 1`` modulo the universe.

    ``length == 0`` is the empty arc anchored at ``start``.
    """

    start: int
    length: int
    universe_size: int

    def __post_init__(self) -> None:
        if self.universe_size < 0:
            raise ContractViolation("universe_size must be >= 0")
        if not 0 <= self.length <= self.universe_size:
            raise ContractViolation(
                f"arc length {self.length} outside [0, {self.universe_size}]"
            )
        if self.universe_size and not 0 <= self.start < self.universe_size:
            raise ContractViolation(
                f"arc start {self.start} outside [0, {self.universe_size})"
            )

    @property
    def end(self) -> int:
        """The boundary just past the last covered position."""
        if not self.universe_size:
            return 0
        return (self.start + self.length) % self.universe_size

    def offset(self, position: int) -> int:
        """Clockwise distance from ``start`` to ``position``."""
        return (position - self.start) % self.universe_size

    def contains(self, position: int) -> bool:
        return self.length > 0 and self.offset(position) < self.length

    def positions(self) -> Iterator[int]:
        for i in range(self.length):
            yield (self.start + i) % self.universe_size

    def overlaps(self, other: CircArc) -> bool:
        if not self.length or not other.length:
            return False
        return self.contains(other.start) or other.contains(self.start)

    def is_subarc_of(self, other: CircArc) -> bool:
        return all(other.contains(pos) for pos in self.positions())


class _CrossingTable:
    """Lazily computed crossing sets over the chords of a root diagram."""

    def __init__(self, chords: Mapping[int, Chord]) -> None:
        self._chords = dict(chords)
        self._crossing: dict[int, frozenset[int]] = {}

    def crossing(self, vertex: int) -> frozenset[int]:
        found = self._crossing.get(vertex)
        if found is None:
            chord = self._chords[vertex]
            found = frozenset(
                other
                for other, other_chord in self._chords.items()
                if other != vertex and crosses(chord, other_chord)
            )
            self._crossing[vertex] = found
        return found


@dataclass(frozen=True)
class ChordDiagram:
    """A fixed endpoint universe plus the live chords, keyed by vertex id."""

    universe_size: int
    chords: Mapping[int, Chord]
    # Shared by every subdiagram cut from the same root.
    _table: _CrossingTable | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "chords", {v: Chord(*c) for v, c in self.chords.items()}
        )
        seen: dict[int, int] = {}
        for vertex, chord in self.chords.items():
            if chord.p == chord.q:
                raise ContractViolation(f"chord of vertex {vertex} is degenerate")
            for pos in chord:
                if not 0 <= pos < self.universe_size:
                    raise ContractViolation(
                        f"position {pos} of vertex {vertex} outside "
                        f"[0, {self.universe_size})"
                    )
                if pos in seen:
                    raise ContractViolation(
                        f"vertices {seen[pos]} and {vertex} share endpoint {pos}"
                    )
                seen[pos] = vertex
        if self._table is None:
            object.__setattr__(self, "_table", _CrossingTable(self.chords))

    @property
    def n(self) -> int:
        return len(self.chords)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.chords)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.chords

    def endpoints(self) -> list[int]:
        """All live endpoint positions in clockwise order from position 0."""
        return sorted(pos for chord in self.chords.values() for pos in chord)

    def neighbors(self, vertex: int) -> list[int]:
        """Live vertices whose chords cross the chord of ``vertex``, by id."""
        if vertex not in self.chords:
            raise KeyError(vertex)
        assert self._table is not None
        return sorted(v for v in self._table.crossing(vertex) if v in self.chords)

    def restrict(self, vertices: Iterable[int]) -> ChordDiagram:
        """Subdiagram holding only ``vertices``; positions stay put."""
        keep = set(vertices)
        return replace(
            self,
            chords={v: c for v, c in self.chords.items() if v in keep},
        )


def classify(chord: Chord, partition: CirclePartition) -> tuple[Side, Side]:
    """Arc names holding the two endpoints, ordered L, T, R, B."""
    a, b = partition.side_of(chord.p), partition.side_of(chord.q)
    if _SIDE_ORDER.index(a) > _SIDE_ORDER.index(b):
        a, b = b, a
    return a, b


def chords_between(
    diagram: ChordDiagram, arc_a: CircArc, arc_b: CircArc
) -> list[int]:
    """Vertex ids of live chords with one endpoint in each arc."""
    if arc_a.overlaps(arc_b):
        raise ContractViolation(f"arcs {arc_a} and {arc_b} overlap")
    return [
        vertex
        for vertex in diagram.vertices
        if (
            arc_a.contains(diagram.chords[vertex].p)
            and arc_b.contains(diagram.chords[vertex].q)
        )
        or (
            arc_b.contains(diagram.chords[vertex].p)
            and arc_a.contains(diagram.chords[vertex].q)
        )
    ]


def endpoint_count(diagram: ChordDiagram, arc: CircArc) -> int:
    """Number of live chord endpoints inside ``arc``."""
    if not arc.length:
        return 0
    return sum(
        arc.contains(pos) for chord in diagram.chords.values() for pos in chord
    )


@dataclass(frozen=True)
class CirclePartition:
    """Four cyclically consecutive arcs L, T, R, B covering the universe."""

    left: CircArc
    top: CircArc
    right: CircArc
    bottom: CircArc

    def __post_init__(self) -> None:
        arcs = self.arcs()
        universe = arcs[0].universe_size
        if any(arc.universe_size != universe for arc in arcs):
            raise ContractViolation("partition arcs disagree on the universe size")
        if sum(arc.length for arc in arcs) != universe:
            raise ContractViolation("partition arcs do not cover the universe")
        for arc, following in zip(arcs, arcs[1:] + arcs[:1], strict=True):
            if arc.end != following.start:
                raise ContractViolation(
                    f"arc {arc} is not followed clockwise by {following}"
                )

    @classmethod
    def from_lengths(
        cls, universe_size: int, start: int, lengths: tuple[int, int, int, int]
    ) -> CirclePartition:
        """Partition starting L at ``start`` with the given arc lengths."""
        arcs = []
        pos = start
        for length in lengths:
            arcs.append(CircArc(pos, length, universe_size))
            pos = (pos + length) % universe_size if universe_size else 0
        return cls(*arcs)

    @property
    def universe_size(self) -> int:
        return self.left.universe_size

    @property
    def cuts(self) -> tuple[int, int, int, int]:
        """Start boundaries of L, T, R and B."""
        return (self.left.start, self.top.start, self.right.start, self.bottom.start)

    def arcs(self) -> tuple[CircArc, CircArc, CircArc, CircArc]:
        return (self.left, self.top, self.right, self.bottom)

    def arc(self, side: Side) -> CircArc:
        return self.arcs()[_SIDE_ORDER.index(side)]

    def side_of(self, position: int) -> Side:
        for side, arc in zip(_SIDE_ORDER, self.arcs(), strict=True):
            if arc.contains(position):
                return side
        raise ContractViolation(f"position {position} outside the universe")

    def rotate(self) -> CirclePartition:
        """Relabel one step counterclockwise: the new L is the old T."""
        return CirclePartition(self.top, self.right, self.bottom, self.left)

    def transfer(self, source: Side, target: Side, length: int) -> CirclePartition:
        """Move ``length`` positions of ``source`` into the adjacent ``target``.

        The moved piece is the end of ``source`` that touches ``target``.
        """
        i, j = _SIDE_ORDER.index(source), _SIDE_ORDER.index(target)
        src, dst = self.arc(source), self.arc(target)
        if not 0 <= length <= src.length:
            raise ContractViolation(f"cannot move {length} positions out of {src}")
        universe = self.universe_size
        if (i + 1) % 4 == j:
            # target follows source clockwise: move the tail of source
            new_src = CircArc(src.start, src.length - length, universe)
            new_dst = CircArc(
                (dst.start - length) % universe, dst.length + length, universe
            )
        elif (j + 1) % 4 == i:
            # target precedes source: move the head of source
            new_src = CircArc(
                (src.start + length) % universe, src.length - length, universe
            )
            new_dst = CircArc(dst.start, dst.length + length, universe)
        else:
            raise ContractViolation(f"{source.name} and {target.name} are not adjacent")
        arcs = list(self.arcs())
        arcs[i], arcs[j] = new_src, new_dst
        return CirclePartition(*arcs)

    def merged(self) -> CirclePartition:
        """L grows over T and R over B, leaving both thin arcs empty."""
        return self.transfer(Side.TOP, Side.LEFT, self.top.length).transfer(
            Side.BOTTOM, Side.RIGHT, self.bottom.length
        )


def rotate(partition: CirclePartition) -> CirclePartition:
    return partition.rotate()


def _boundary_after(endpoints: list[int], k: int) -> int:
    """First boundary after the k-th endpoint (1-based); 0 when k is 0."""
    return endpoints[k - 1] + 1 if k else 0


def quartile_partition(diagram: ChordDiagram) -> CirclePartition:
    """Partition whose L, T and R arcs hold exactly floor(n/2) endpoints each.

    Arcs are filled clockwise from position 0; B takes the remainder.
    """
    if not diagram.n:
        raise ContractViolation("cannot partition an empty diagram")
    k = diagram.n // 2
    ends = diagram.endpoints()
    universe = diagram.universe_size
    b1 = _boundary_after(ends, k)
    b2 = _boundary_after(ends, 2 * k)
    b3 = _boundary_after(ends, 3 * k)
    return CirclePartition.from_lengths(
        universe, 0, (b1, b2 - b1, b3 - b2, universe - b3)
    )


def split_arc(
    diagram: ChordDiagram, arc: CircArc, anchored_toward: ArcEnd = ArcEnd.START
) -> tuple[CircArc, CircArc]:
    """Split ``arc`` into two clockwise pieces with balanced live endpoints.

    The piece touching the anchored end receives ceil(x/2) of the x live
    endpoints; the boundary always falls between two live endpoints.
    Returned in clockwise order.
    """
    offsets = sorted(
        arc.offset(pos)
        for chord in diagram.chords.values()
        for pos in chord
        if arc.contains(pos)
    )
    x = len(offsets)
    if x < 2:
        raise ContractViolation(f"arc {arc} holds {x} live endpoints; need >= 2")
    head = (x + 1) // 2 if anchored_toward is ArcEnd.START else x // 2
    boundary = offsets[head - 1] + 1
    universe = arc.universe_size
    return (
        CircArc(arc.start, boundary, universe),
        CircArc((arc.start + boundary) % universe, arc.length - boundary, universe),
    )

"""Line-oriented text formats for instances, ordered graphs and colorings.

Chord instance::

    n=2
    0 2 RGB
    1 3 RG

Vertex ids follow line order; positions lie in ``[0, 2n)``; color letters are
a non-empty subset of ``RGB`` written in that order. Ordered graph::

    n=4
    1 3
    2 4

Coloring: one ``<vertex-id> <R|G|B>`` line per vertex. ``#`` starts a comment
in every format. Parsers collect every problem before raising.
"""

from __future__ import annotations

import re
from collections.abc import Iterator

from chordcolor.bookembed import OrderedGraph
from chordcolor.chords import Chord, ChordDiagram
from chordcolor.instance import COLOR_ORDER, Color, Instance, PartialColoring

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_COLOR_LETTERS = "".join(c.value for c in COLOR_ORDER)


class InputParseError(Exception):
    """Input text could not be parsed.

    Attributes:
        errors: List of (line_number, cause) tuples; line 0 means the whole input.
    """

    def __init__(self, errors: list[tuple[int, str]]) -> None:
        self.errors = errors
        lines = [f"  line {line}: {cause}" for line, cause in errors]
        super().__init__(f"Input has {len(errors)} error(s):\n" + "\n".join(lines))


def _decode(data: bytes | str) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputParseError([(0, f"not valid UTF-8: {exc.reason}")]) from exc


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _read_header(
    lines: list[tuple[int, str]], errors: list[tuple[int, str]]
) -> int | None:
    if not lines:
        errors.append((0, "missing header 'n=<count>'"))
        return None
    number, line = lines[0]
    match = _HEADER.match(line)
    if match is None:
        errors.append((number, f"expected header 'n=<count>', got {line!r}"))
        return None
    return int(match.group(1))


def _parse_int(token: str, number: int, errors: list[tuple[int, str]]) -> int | None:
    try:
        return int(token)
    except ValueError:
        errors.append((number, f"expected an integer, got {token!r}"))
        return None


def _parse_colors(
    token: str, number: int, errors: list[tuple[int, str]]
) -> frozenset[Color] | None:
    letters = iter(_COLOR_LETTERS)
    if not token or not all(letter in letters for letter in token):
        errors.append(
            (number, f"colors must be a non-empty subset of {_COLOR_LETTERS}, in "
             f"that order; got {token!r}")
        )
        return None
    return frozenset(Color(letter) for letter in token)


def parse_instance(data: bytes | str) -> Instance:
    """Parse a chord instance.

    Raises:
        InputParseError: with every malformed line and its cause.
    """
    errors: list[tuple[int, str]] = []
    lines = list(_content_lines(_decode(data)))
    count = _read_header(lines, errors)
    if count is None:
        raise InputParseError(errors)

    universe = 2 * count
    chords: dict[int, Chord] = {}
    lists: dict[int, frozenset[Color]] = {}
    owner: dict[int, int] = {}
    body = lines[1:]
    for vertex, (number, line) in enumerate(body):
        tokens = line.split()
        if len(tokens) != 3:
            errors.append((number, f"expected '<p> <q> <colors>', got {line!r}"))
            continue
        p = _parse_int(tokens[0], number, errors)
        q = _parse_int(tokens[1], number, errors)
        colors = _parse_colors(tokens[2], number, errors)
        if p is None or q is None or colors is None:
            continue
        if p == q:
            errors.append((number, f"degenerate chord ({p}, {q})"))
            continue
        out_of_range = [pos for pos in (p, q) if not 0 <= pos < universe]
        if out_of_range:
            errors.append(
                (number, f"position {out_of_range[0]} outside [0, {universe})")
            )
            continue
        clashes = [pos for pos in (p, q) if pos in owner]
        if clashes:
            errors.append(
                (number, f"duplicate endpoint {clashes[0]} (first used on line "
                 f"{owner[clashes[0]]})")
            )
            continue
        owner[p] = owner[q] = number
        chords[vertex] = Chord(p, q)
        lists[vertex] = colors

    if len(body) != count:
        errors.append((0, f"header declares {count} chords, found {len(body)}"))
    if errors:
        raise InputParseError(errors)
    return Instance(ChordDiagram(universe, chords), lists)


def serialize_instance(instance: Instance) -> str:
    """Canonical text; positions are compacted into ``[0, 2n)`` keeping order."""
    rank = {pos: i for i, pos in enumerate(instance.diagram.endpoints())}
    lines = [f"n={instance.n}"]
    for vertex in instance.vertices:
        chord = instance.chord(vertex)
        letters = "".join(c.value for c in COLOR_ORDER if c in instance.lists[vertex])
        lines.append(f"{rank[chord.p]} {rank[chord.q]} {letters}")
    return "\n".join(lines) + "\n"


def parse_ordered_graph(data: bytes | str) -> OrderedGraph:
    """Parse an ordered graph; vertices are ``1 .. n`` in their integer order.

    Raises:
        InputParseError: with every malformed line and its cause.
    """
    errors: list[tuple[int, str]] = []
    lines = list(_content_lines(_decode(data)))
    count = _read_header(lines, errors)
    if count is None:
        raise InputParseError(errors)

    edges: list[tuple[int, int]] = []
    first_seen: dict[tuple[int, int], int] = {}
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            errors.append((number, f"expected '<u> <v>', got {line!r}"))
            continue
        u = _parse_int(tokens[0], number, errors)
        v = _parse_int(tokens[1], number, errors)
        if u is None or v is None:
            continue
        if u == v:
            errors.append((number, f"self-loop at vertex {u}"))
            continue
        out_of_range = [w for w in (u, v) if not 1 <= w <= count]
        if out_of_range:
            errors.append((number, f"vertex {out_of_range[0]} outside [1, {count}]"))
            continue
        key = (min(u, v), max(u, v))
        if key in first_seen:
            errors.append(
                (number, f"duplicate edge {key} (first on line {first_seen[key]})")
            )
            continue
        first_seen[key] = number
        edges.append((u, v))

    if errors:
        raise InputParseError(errors)
    return OrderedGraph(count, tuple(edges))


def serialize_ordered_graph(graph: OrderedGraph) -> str:
    lines = [f"n={graph.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_coloring(data: bytes | str) -> PartialColoring:
    """Parse ``<vertex-id> <R|G|B>`` lines.

    Raises:
        InputParseError: with every malformed line and its cause.
    """
    errors: list[tuple[int, str]] = []
    colors: dict[int, Color] = {}
    first_seen: dict[int, int] = {}
    for number, line in _content_lines(_decode(data)):
        tokens = line.split()
        if len(tokens) != 2:
            errors.append((number, f"expected '<vertex-id> <color>', got {line!r}"))
            continue
        vertex = _parse_int(tokens[0], number, errors)
        if tokens[1] not in _COLOR_LETTERS or len(tokens[1]) != 1:
            errors.append((number, f"expected one of R, G, B, got {tokens[1]!r}"))
            continue
        if vertex is None:
            continue
        if vertex in first_seen:
            errors.append(
                (number, f"vertex {vertex} colored twice (first on line "
                 f"{first_seen[vertex]})")
            )
            continue
        first_seen[vertex] = number
        colors[vertex] = Color(tokens[1])
    if errors:
        raise InputParseError(errors)
    return PartialColoring(colors)


def serialize_coloring(coloring: PartialColoring) -> str:
    return "".join(f"{vertex} {color.value}\n" for vertex, color in coloring.items())

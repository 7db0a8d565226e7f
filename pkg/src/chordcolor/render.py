"""SVG drawings of (colored) chord diagrams, built with lxml."""

from __future__ import annotations

import math

from lxml import etree

from chordcolor.constants import MARGIN, PALETTE, RADIUS, SVG_NS, UNCOLORED
from chordcolor.instance import Instance, PartialColoring

# lxml's element type is private; this is the usual way to annotate it.
SVGElement = etree._Element


def create_svg_root(size: int) -> SVGElement:
    """An ``<svg>`` element whose view box is centred on the origin."""
    root = etree.Element(f"{{{SVG_NS}}}svg", nsmap={None: SVG_NS})
    root.set("viewBox", f"{-size // 2} {-size // 2} {size} {size}")
    root.set("width", str(size))
    root.set("height", str(size))
    return root


def add_child(
    parent: SVGElement,
    tag: str,
    attributes: dict[str, str] | None = None,
) -> SVGElement:
    child = etree.SubElement(parent, f"{{{SVG_NS}}}{tag}")
    for key, value in (attributes or {}).items():
        child.set(key, value)
    return child


def svg_to_string(element: SVGElement, pretty_print: bool = True) -> str:
    return etree.tostring(element, encoding="unicode", pretty_print=pretty_print)


def _coordinate(value: float) -> str:
    # + 0.0 turns -0.0 into 0.0
    return f"{round(value, 2) + 0.0:.2f}"


def endpoint_xy(position: int, universe_size: int) -> tuple[str, str]:
    """Position ``p`` sits at angle 2*pi*p/universe, clockwise on screen."""
    angle = 2 * math.pi * position / universe_size
    return _coordinate(RADIUS * math.cos(angle)), _coordinate(RADIUS * math.sin(angle))


def render_svg(
    instance: Instance,
    coloring: PartialColoring | None = None,
    *,
    pretty_print: bool = True,
) -> str:
    """Circle of radius 100 with one segment per chord, stroked by color."""
    root = create_svg_root(2 * (RADIUS + MARGIN))
    add_child(
        root,
        "circle",
        {"cx": "0", "cy": "0", "r": str(RADIUS), "fill": "none", "stroke": "black"},
    )
    universe = instance.diagram.universe_size
    for vertex in instance.vertices:
        chord = instance.chord(vertex)
        x1, y1 = endpoint_xy(chord.p, universe)
        x2, y2 = endpoint_xy(chord.q, universe)
        color = coloring.get(vertex) if coloring is not None else None
        add_child(
            root,
            "line",
            {
                "x1": x1,
                "y1": y1,
                "x2": x2,
                "y2": y2,
                "stroke": UNCOLORED if color is None else PALETTE[color],
                "stroke-width": "2",
                "data-vertex": str(vertex),
            },
        )
    return svg_to_string(root, pretty_print=pretty_print)

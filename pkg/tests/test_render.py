"""Tests for SVG rendering, including a syrupy snapshot."""

from lxml import etree

from chordcolor.constants import PALETTE, SVG_NS, UNCOLORED
from chordcolor.instance import Color, Instance, PartialColoring
from chordcolor.render import endpoint_xy, render_svg

_LINE = f"{{{SVG_NS}}}line"


def _lines(svg: str) -> list[etree._Element]:
    return etree.fromstring(svg.encode()).findall(_LINE)


def test_render_crossing_pair(snapshot):
    inst = Instance.build(4, {0: (0, 2), 1: (1, 3)})
    coloring = PartialColoring({0: Color.RED, 1: Color.GREEN})
    assert render_svg(inst, coloring, pretty_print=False) == snapshot


def test_empty_instance_is_circle_only():
    root = etree.fromstring(render_svg(Instance.build(0, {})).encode())
    assert [child.tag for child in root] == [f"{{{SVG_NS}}}circle"]


def test_single_red_chord():
    inst = Instance.build(2, {0: (0, 1)})
    (line,) = _lines(render_svg(inst, PartialColoring({0: Color.RED})))
    assert line.get("stroke") == PALETTE[Color.RED]
    assert (line.get("x1"), line.get("y1")) == ("100.00", "0.00")
    assert (line.get("x2"), line.get("y2")) == ("-100.00", "0.00")


def test_uncolored_chords_are_gray():
    inst = Instance.build(4, {0: (0, 2), 1: (1, 3)})
    assert {line.get("stroke") for line in _lines(render_svg(inst))} == {UNCOLORED}


def test_endpoints_run_clockwise_on_screen():
    # y grows downwards in SVG, so a quarter turn lands at the bottom
    assert endpoint_xy(1, 4) == ("0.00", "100.00")
    assert endpoint_xy(3, 4) == ("0.00", "-100.00")

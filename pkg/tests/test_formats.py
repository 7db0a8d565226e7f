"""Tests for the text formats: parsing diagnostics and canonical output."""

import pytest

from chordcolor.bookembed import OrderedGraph
from chordcolor.formats import (
    InputParseError,
    parse_coloring,
    parse_instance,
    parse_ordered_graph,
    serialize_coloring,
    serialize_instance,
    serialize_ordered_graph,
)
from chordcolor.generators import ListDensity, gen_random
from chordcolor.instance import Color, Instance, PartialColoring, restrict

R, G, B = Color.RED, Color.GREEN, Color.BLUE


class TestParseInstance:
    def test_basic(self):
        inst = parse_instance(b"n=2\n0 2 RGB\n1 3 RG\n")
        assert inst.n == 2
        assert inst.diagram.universe_size == 4
        assert inst.lists[1] == {R, G}
        assert inst.chord(0) == (0, 2)

    def test_comments_and_blank_lines(self):
        inst = parse_instance("# two chords\nn=2\n\n0 2 B  # first\n1 3 RGB\n")
        assert inst.lists[0] == {B}

    def test_degenerate_chord(self):
        with pytest.raises(InputParseError) as excinfo:
            parse_instance("n=1\n0 0 RGB\n")
        assert excinfo.value.errors == [(2, "degenerate chord (0, 0)")]

    def test_duplicate_endpoint(self):
        with pytest.raises(InputParseError) as excinfo:
            parse_instance("n=2\n0 3 RGB\n1 3 RGB\n")
        ((line, cause),) = excinfo.value.errors
        assert line == 3
        assert "duplicate endpoint 3" in cause

    def test_out_of_range(self):
        with pytest.raises(InputParseError, match="outside"):
            parse_instance("n=1\n0 2 R\n")

    def test_bad_colors(self):
        for colors in ("", "X", "GR", "RR"):
            with pytest.raises(InputParseError):
                parse_instance(f"n=1\n0 1 {colors}\n")

    def test_collects_every_error(self):
        text = "n=3\n0 0 RGB\n1 2 Q\n3 x RGB\n"
        with pytest.raises(InputParseError) as excinfo:
            parse_instance(text)
        assert [line for line, _ in excinfo.value.errors] == [2, 3, 4]

    def test_count_mismatch(self):
        with pytest.raises(InputParseError, match="declares 2 chords"):
            parse_instance("n=2\n0 1 RGB\n")

    def test_missing_header(self):
        with pytest.raises(InputParseError, match="header"):
            parse_instance("0 1 RGB\n")

    def test_invalid_utf8(self):
        with pytest.raises(InputParseError):
            parse_instance(b"n=1\n\xff\n")


class TestSerializeInstance:
    def test_canonical_text_is_stable(self):
        text = "n=3\n0 3 RGB\n1 4 G\n2 5 RB\n"
        assert serialize_instance(parse_instance(text)) == text

    def test_compacts_subinstance(self, k4):
        sub = restrict(k4, lambda v, _: v in (1, 3))
        assert serialize_instance(sub) == "n=2\n0 2 RGB\n1 3 RGB\n"

    @pytest.mark.parametrize("density", list(ListDensity))
    def test_generated_instances_reparse(self, density):
        inst = gen_random(12, 5, density)
        text = serialize_instance(inst)
        assert serialize_instance(parse_instance(text)) == text

    def test_empty(self):
        assert serialize_instance(Instance.build(0, {})) == "n=0\n"


class TestOrderedGraphFormat:
    def test_parse(self):
        graph = parse_ordered_graph("n=4\n1 3\n2 4\n")
        assert graph == OrderedGraph(4, ((1, 3), (2, 4)))

    def test_self_loop(self):
        with pytest.raises(InputParseError, match="self-loop"):
            parse_ordered_graph("n=3\n2 2\n")

    def test_duplicate_edge(self):
        with pytest.raises(InputParseError) as excinfo:
            parse_ordered_graph("n=3\n1 2\n2 1\n")
        assert excinfo.value.errors[0][0] == 3

    def test_vertex_out_of_range(self):
        with pytest.raises(InputParseError, match="outside"):
            parse_ordered_graph("n=3\n0 2\n")

    def test_serialize(self):
        text = "n=4\n1 3\n2 4\n"
        assert serialize_ordered_graph(parse_ordered_graph(text)) == text


class TestColoringFormat:
    def test_parse(self):
        coloring = parse_coloring("0 R\n1 G\n# done\n")
        assert coloring.colors == {0: R, 1: G}

    def test_bad_color(self):
        with pytest.raises(InputParseError, match="one of R, G, B"):
            parse_coloring("0 RG\n")

    def test_repeated_vertex(self):
        with pytest.raises(InputParseError, match="colored twice"):
            parse_coloring("0 R\n0 G\n")

    def test_serialize(self):
        assert serialize_coloring(PartialColoring({1: B, 0: R})) == "0 R\n1 B\n"

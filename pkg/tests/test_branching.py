"""Tests for elimination, semi/full separation and the fully-separated split."""

import pytest

from chordcolor.branching import (
    BranchRecorder,
    SeparatedInstance,
    SeparationKind,
    eliminate,
    full_separate,
    semi_separate,
    separated_family,
    split_full,
)
from chordcolor.chords import CirclePartition, ContractViolation
from chordcolor.instance import Color, Instance, PartialColoring
from chordcolor.oracle import oracle_solve

R, G, B = Color.RED, Color.GREEN, Color.BLUE


def _eighths() -> CirclePartition:
    return CirclePartition.from_lengths(8, 0, (2, 2, 2, 2))


def _growing_right() -> SeparatedInstance:
    """T holds four endpoints; only its left half has chords into R."""
    inst = Instance.build(
        12, {0: (3, 7), 1: (4, 8), 2: (5, 9), 3: (6, 11), 4: (0, 2)}
    )
    partition = CirclePartition.from_lengths(12, 0, (3, 4, 3, 2))
    return SeparatedInstance(inst, partition, SeparationKind.SEMI)


class TestEliminate:
    def test_both_sides_internally_crossing(self, k4):
        assert list(eliminate(k4, [0, 1], [2, 3])) == []

    def test_empty_side_yields_reduction_once(self, c5):
        out = list(eliminate(c5, [], [0]))
        assert len(out) == 1
        assert out[0].instance is c5

    def test_enumerates_both_sides(self):
        inst = Instance.build(4, {0: (0, 2), 1: (1, 3)}, {0: {R, G}})
        out = list(eliminate(inst, [0], [1]))
        assert len(out) == 5
        for branch in out:
            live = branch.instance.diagram
            assert 0 not in live or 1 not in live
        assert out[0].partial.colors == {0: R}
        assert out[0].instance.lists[1] == {G, B}
        # colouring 1 red forces 0 green
        assert out[2].partial.colors == {1: R, 0: G}

    def test_prunes_infeasible(self):
        inst = Instance.build(4, {0: (0, 2), 1: (1, 3)}, {0: {R}, 1: {R}})
        recorder = BranchRecorder()
        assert list(eliminate(inst, [0], [1], recorder)) == []
        assert recorder.pruned["eliminate"] == 2

    def test_requires_complete_crossing(self):
        inst = Instance.build(4, {0: (0, 1), 1: (2, 3)})
        with pytest.raises(ContractViolation):
            list(eliminate(inst, [0], [1]))

    def test_requires_disjoint_sides(self, two_crossing):
        with pytest.raises(ContractViolation):
            list(eliminate(two_crossing, [0], [0]))


class TestSemiSeparate:
    def test_two_crossing(self, two_crossing):
        out = list(semi_separate(two_crossing))
        assert len(out) == 6
        base = CirclePartition.from_lengths(4, 0, (1, 1, 1, 1))
        assert [e.partition for e in out[:3]] == [base] * 3
        assert [e.partition for e in out[3:]] == [base.rotate()] * 3
        assert all(e.kind is SeparationKind.SEMI for e in out)

    def test_k4_is_empty(self, k4):
        assert list(semi_separate(k4)) == []

    def test_already_separated(self):
        inst = Instance.build(8, {0: (0, 1), 1: (2, 3), 2: (4, 5), 3: (6, 7)})
        (only,) = list(semi_separate(inst))
        assert only.partition == _eighths()
        assert only.inst is inst

    def test_empty_instance_raises(self):
        with pytest.raises(ContractViolation):
            list(semi_separate(Instance.build(4, {})))


class TestFullSeparate:
    def test_thin_arcs_already_empty(self):
        inst = Instance.build(8, {0: (0, 1), 1: (4, 5)})
        semi = SeparatedInstance(inst, _eighths(), SeparationKind.SEMI)
        (full,) = list(full_separate(semi))
        assert full.kind is SeparationKind.FULL
        assert full.inst is inst
        assert list(full.partition.left.positions()) == [0, 1, 2, 3]
        assert list(full.partition.right.positions()) == [4, 5, 6, 7]

    def test_right_grows_over_right_half_of_top(self):
        recorder = BranchRecorder()
        (full,) = list(full_separate(_growing_right(), recorder))
        assert list(full.partition.left.positions()) == [0, 1, 2]
        assert list(full.partition.right.positions()) == list(range(3, 12))
        assert recorder.measure_trace[0] == (5, 3)
        assert recorder.max_full_depth == 4

    def test_arcs_only_grow(self, two_crossing):
        for semi in semi_separate(two_crossing):
            for full in full_separate(semi):
                assert semi.partition.left.is_subarc_of(full.partition.left)
                assert semi.partition.right.is_subarc_of(full.partition.right)

    def test_rejects_full_input(self):
        inst = Instance.build(8, {0: (0, 1)})
        full = SeparatedInstance(inst, _eighths().merged(), SeparationKind.FULL)
        with pytest.raises(ContractViolation):
            list(full_separate(full))


class TestSeparatedInstance:
    def test_semi_rejects_left_right_chord(self):
        inst = Instance.build(8, {0: (0, 4)})
        with pytest.raises(ContractViolation):
            SeparatedInstance(inst, _eighths(), SeparationKind.SEMI)

    def test_full_rejects_thin_endpoints(self):
        inst = Instance.build(8, {0: (0, 2)})
        with pytest.raises(ContractViolation):
            SeparatedInstance(inst, _eighths(), SeparationKind.FULL)


class TestSeparatedFamily:
    def test_two_crossing_has_yes_element(self, two_crossing):
        family = list(separated_family(two_crossing))
        assert family
        assert any(oracle_solve(e.inst).is_yes for e in family)

    def test_k4_has_no_yes_element(self, k4):
        assert not any(oracle_solve(e.inst).is_yes for e in separated_family(k4))

    def test_partials_extend(self, c5):
        for element in separated_family(c5):
            answer = oracle_solve(element.inst)
            if answer.coloring is not None:
                merged = element.partial.merge(answer.coloring)
                assert merged.colors.keys() == set(c5.vertices)

    def test_recorder_sink(self, two_crossing):
        records = []
        recorder = BranchRecorder(sink=records.append)
        list(separated_family(two_crossing, recorder))
        assert records[-1]["stream"] == "separated_family"
        assert recorder.streams["semi_separate"] == 1
        assert recorder.max_width["eliminate"] <= 6


class TestSplitFull:
    def test_growing_right_example(self):
        (full,) = list(full_separate(_growing_right()))
        left, right = split_full(full)
        assert left.vertices == [4]
        assert right.vertices == [0, 1, 2, 3]

    def test_empty(self):
        inst = Instance.build(8, {})
        full = SeparatedInstance(
            inst, _eighths().merged(), SeparationKind.FULL, PartialColoring()
        )
        left, right = split_full(full)
        assert left.n == right.n == 0

    def test_rejects_semi(self):
        inst = Instance.build(8, {0: (0, 1)})
        semi = SeparatedInstance(inst, _eighths(), SeparationKind.SEMI)
        with pytest.raises(ContractViolation):
            split_full(semi)

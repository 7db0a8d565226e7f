"""Property-based tests for the branching families and the solver."""

from __future__ import annotations

import itertools
import math

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from chordcolor.branching import (
    MAX_ELIMINATION_WIDTH,
    BranchRecorder,
    SeparatedInstance,
    SeparationKind,
    eliminate,
    full_separate,
    semi_separate,
    separated_family,
    split_full,
)
from chordcolor.chords import (
    CirclePartition,
    chords_between,
    crosses,
    endpoint_count,
    quartile_partition,
)
from chordcolor.instance import (
    COLOR_ORDER,
    Infeasible,
    Instance,
    PartialColoring,
    reduce,
    validate_coloring,
)
from chordcolor.oracle import oracle_solve
from chordcolor.result import Verdict
from chordcolor.solver import solve

PROPERTY_SETTINGS = settings(
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

_LISTS = [
    frozenset(combo)
    for size in (1, 2, 3)
    for combo in itertools.combinations(COLOR_ORDER, size)
]


@st.composite
def _instances(
    draw: st.DrawFn,
    min_size: int = 1,
    max_size: int = 9,
    color_lists: st.SearchStrategy[frozenset] | None = None,
) -> Instance:
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    order = draw(st.permutations(range(2 * n)))
    chords = {v: tuple(sorted(order[2 * v : 2 * v + 2])) for v in range(n)}
    if color_lists is None:
        # singleton lists stay rare
        color_lists = st.sampled_from(_LISTS[3:] * 3 + _LISTS)
    lists = {v: draw(color_lists) for v in range(n)}
    return Instance.build(2 * n, chords, lists)


@st.composite
def _partitions(draw: st.DrawFn, universe_size: int) -> CirclePartition:
    cuts = sorted(
        draw(st.lists(st.integers(0, universe_size), min_size=3, max_size=3))
    )
    start = draw(st.integers(0, universe_size - 1))
    lengths = (cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], universe_size - cuts[2])
    return CirclePartition.from_lengths(universe_size, start, lengths)


def _relabeled(inst: Instance, relabel: dict[int, int]) -> Instance:
    return Instance.build(
        inst.diagram.universe_size,
        {relabel[v]: inst.chord(v) for v in inst.vertices},
        {relabel[v]: inst.lists[v] for v in inst.vertices},
    )


def _answer(original: Instance, partial: PartialColoring, part: Instance) -> bool:
    """Whether ``part`` is yes; its witness plus ``partial`` must solve ``original``."""
    answer = oracle_solve(part)
    if answer.coloring is None:
        return False
    assert validate_coloring(original, partial.merge(answer.coloring))
    return True


class TestCrossingProperties:
    @PROPERTY_SETTINGS
    @given(inst=_instances())
    def test_neighbors_are_symmetric_and_match_crosses(self, inst: Instance) -> None:
        for u, v in itertools.combinations(inst.vertices, 2):
            expected = crosses(inst.chord(u), inst.chord(v))
            assert (v in inst.neighbors(u)) is expected
            assert (u in inst.neighbors(v)) is expected

    @PROPERTY_SETTINGS
    @given(inst=_instances(), data=st.data())
    def test_left_right_chords_cross_top_bottom_chords(
        self, inst: Instance, data: st.DataObject
    ) -> None:
        partition = data.draw(_partitions(inst.diagram.universe_size))
        diagram = inst.diagram
        left_right = chords_between(diagram, partition.left, partition.right)
        top_bottom = chords_between(diagram, partition.top, partition.bottom)
        for u in left_right:
            for v in top_bottom:
                assert crosses(inst.chord(u), inst.chord(v))

    @PROPERTY_SETTINGS
    @given(inst=_instances(max_size=12), data=st.data())
    def test_quartile_arcs_are_balanced(
        self, inst: Instance, data: st.DataObject
    ) -> None:
        kept = data.draw(st.sets(st.sampled_from(inst.vertices), min_size=1))
        diagram = inst.diagram.restrict(kept)
        partition = quartile_partition(diagram)
        k = diagram.n // 2
        counts = [endpoint_count(diagram, arc) for arc in partition.arcs()]
        assert counts[:3] == [k, k, k]
        assert all(count >= k for count in counts)
        assert sum(counts) == 2 * diagram.n
        assert partition.left.start == 0


class TestReductionProperties:
    @PROPERTY_SETTINGS
    @given(inst=_instances())
    def test_reduction_preserves_the_answer(self, inst: Instance) -> None:
        expected = oracle_solve(inst).verdict
        result = reduce(inst)
        if isinstance(result, Infeasible):
            assert expected is Verdict.NO
            return
        reduced = oracle_solve(result.instance)
        assert reduced.verdict is expected
        if reduced.coloring is not None:
            merged = result.partial.merge(reduced.coloring)
            assert validate_coloring(inst, merged)

    @PROPERTY_SETTINGS
    @given(
        inst=_instances(color_lists=st.sampled_from(_LISTS)),
        data=st.data(),
    )
    def test_reduction_ignores_singleton_order(
        self, inst: Instance, data: st.DataObject
    ) -> None:
        relabel = dict(zip(inst.vertices, data.draw(st.permutations(inst.vertices))))
        original = reduce(inst)
        renamed = reduce(_relabeled(inst, relabel))
        if isinstance(original, Infeasible):
            assert isinstance(renamed, Infeasible)
            return
        assert not isinstance(renamed, Infeasible)
        assert {relabel[v]: c for v, c in original.partial.items()} == dict(
            renamed.partial.items()
        )
        assert {relabel[v]: s for v, s in original.instance.lists.items()} == dict(
            renamed.instance.lists
        )


class TestFamilyProperties:
    @PROPERTY_SETTINGS
    @given(inst=_instances(min_size=4, max_size=9))
    def test_family_is_equivalent_to_instance(self, inst: Instance) -> None:
        recorder = BranchRecorder()
        limit = math.ceil(3 * inst.n / 4)
        found = False
        for element in separated_family(inst, recorder):
            left, right = split_full(element)
            assert left.n <= limit
            assert right.n <= limit
            left_answer = oracle_solve(left)
            right_answer = oracle_solve(right)
            if left_answer.coloring is None or right_answer.coloring is None:
                continue
            coloring = element.partial.merge(left_answer.coloring).merge(
                right_answer.coloring
            )
            assert validate_coloring(inst, coloring)
            found = True
        assert found is (oracle_solve(inst).verdict is Verdict.YES)
        assert recorder.max_width.get("eliminate", 0) <= MAX_ELIMINATION_WIDTH
        assert recorder.max_width.get("semi_separate", 0) <= MAX_ELIMINATION_WIDTH


class TestSeparationProperties:
    @PROPERTY_SETTINGS
    @given(inst=_instances(min_size=2, max_size=8))
    def test_elimination_is_equivalent_and_sound(self, inst: Instance) -> None:
        partition = quartile_partition(inst.diagram)
        h_lr = chords_between(inst.diagram, partition.left, partition.right)
        h_tb = chords_between(inst.diagram, partition.top, partition.bottom)
        found = False
        for branch in eliminate(inst, h_lr, h_tb):
            live = branch.instance.diagram
            assert not any(v in live for v in h_lr) or not any(
                v in live for v in h_tb
            )
            found |= _answer(inst, branch.partial, branch.instance)
        assert found is (oracle_solve(inst).verdict is Verdict.YES)

    @PROPERTY_SETTINGS
    @given(inst=_instances(min_size=2, max_size=8))
    def test_semi_separation_is_equivalent_and_sound(self, inst: Instance) -> None:
        k = inst.n // 2
        found = False
        for semi in semi_separate(inst):
            assert semi.kind is SeparationKind.SEMI
            assert endpoint_count(inst.diagram, semi.partition.left) >= k
            assert endpoint_count(inst.diagram, semi.partition.right) >= k
            found |= _answer(inst, semi.partial, semi.inst)
        assert found is (oracle_solve(inst).verdict is Verdict.YES)

    @PROPERTY_SETTINGS
    @given(inst=_instances(min_size=2, max_size=8))
    def test_full_separation_is_equivalent_and_sound(self, inst: Instance) -> None:
        for semi in semi_separate(inst):
            start = SeparatedInstance(semi.inst, semi.partition, SeparationKind.SEMI)
            found = False
            for full in full_separate(start):
                assert full.kind is SeparationKind.FULL
                assert semi.partition.left.is_subarc_of(full.partition.left)
                assert semi.partition.right.is_subarc_of(full.partition.right)
                found |= _answer(semi.inst, full.partial, full.inst)
            assert found is (oracle_solve(semi.inst).verdict is Verdict.YES)

    @PROPERTY_SETTINGS
    @given(inst=_instances(max_size=12))
    def test_full_separation_depth_is_logarithmic(self, inst: Instance) -> None:
        limit = math.log(2 * inst.n, 4 / 3) + 4
        for semi in semi_separate(inst):
            recorder = BranchRecorder()
            for _ in full_separate(semi, recorder):
                pass
            assert recorder.max_full_depth <= limit
            for before, after in recorder.measure_trace:
                assert after < before or before == after == 0


class TestSolverProperties:
    @PROPERTY_SETTINGS
    @given(inst=_instances(max_size=11))
    def test_solver_agrees_with_oracle(self, inst: Instance) -> None:
        result = solve(inst, base_threshold=3)
        assert result.verdict is oracle_solve(inst).verdict
        if result.coloring is not None:
            assert validate_coloring(inst, result.coloring)

    @PROPERTY_SETTINGS
    @given(inst=_instances(max_size=11))
    def test_component_splitting_keeps_the_answer(self, inst: Instance) -> None:
        plain = solve(inst, base_threshold=3)
        split = solve(inst, base_threshold=3, split_components=True)
        assert plain.verdict is split.verdict

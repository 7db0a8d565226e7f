"""Families of separated subinstances.

Every family here is a lazy generator: elements are produced one at a time
and nothing is materialised, so a consumer that stops early pays only for
what it looked at. Each element carries the partial coloring accumulated on
the way to it, which is what makes the final answer constructive.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from chordcolor.chords import (
    ArcEnd,
    CirclePartition,
    ContractViolation,
    Side,
    chords_between,
    classify,
    endpoint_count,
    quartile_partition,
    split_arc,
)
from chordcolor.instance import (
    COLOR_ORDER,
    Infeasible,
    Instance,
    PartialColoring,
    Reduced,
    assign,
    reduce,
    restrict,
)

logger = logging.getLogger(__name__)

#: At most two sides times three colors survive an elimination step.
MAX_ELIMINATION_WIDTH = 6


class SeparationKind(Enum):
    SEMI = "semi"
    FULL = "full"


@dataclass(frozen=True)
class SeparatedInstance:
    """An instance together with a circle partition that separates it.

    ``SEMI``: no live L-R chords. ``FULL``: additionally no live endpoint in
    T or B.
    """

    inst: Instance
    partition: CirclePartition
    kind: SeparationKind
    partial: PartialColoring = field(default_factory=PartialColoring)

    def __post_init__(self) -> None:
        diagram = self.inst.diagram
        left_right = chords_between(diagram, self.partition.left, self.partition.right)
        if left_right:
            raise ContractViolation(
                f"{self.kind.value}-separated instance has L-R chords {left_right}"
            )
        if self.kind is SeparationKind.FULL:
            thin = endpoint_count(diagram, self.partition.top) + endpoint_count(
                diagram, self.partition.bottom
            )
            if thin:
                raise ContractViolation(
                    f"fully-separated instance has {thin} endpoints in T and B"
                )


@dataclass
class BranchRecorder:
    """Counters over the streams produced while building families.

    ``sink`` receives one structured record per closed stream.
    """

    sink: Callable[[dict[str, Any]], None] | None = None
    yielded: dict[str, int] = field(default_factory=dict)
    pruned: dict[str, int] = field(default_factory=dict)
    streams: dict[str, int] = field(default_factory=dict)
    max_width: dict[str, int] = field(default_factory=dict)
    max_full_depth: int = 0
    measure_trace: list[tuple[int, int]] = field(default_factory=list)

    def close_stream(
        self, kind: str, yielded: int, pruned: int = 0, **extra: Any
    ) -> None:
        self.streams[kind] = self.streams.get(kind, 0) + 1
        self.yielded[kind] = self.yielded.get(kind, 0) + yielded
        self.pruned[kind] = self.pruned.get(kind, 0) + pruned
        self.max_width[kind] = max(self.max_width.get(kind, 0), yielded)
        if self.sink is not None:
            self.sink({"stream": kind, "yielded": yielded, "pruned": pruned, **extra})

    def measure_step(self, before: int, after: int, depth: int) -> None:
        self.measure_trace.append((before, after))
        self.max_full_depth = max(self.max_full_depth, depth)

    def to_dict(self) -> dict[str, Any]:
        return {
            "streams": dict(self.streams),
            "yielded": dict(self.yielded),
            "pruned": dict(self.pruned),
            "max_width": dict(self.max_width),
            "max_full_depth": self.max_full_depth,
            "measure_steps": len(self.measure_trace),
        }


def _pairwise_crossing(instance: Instance, side: Sequence[int]) -> bool:
    members = set(side)
    return any(
        other in members for vertex in side for other in instance.neighbors(vertex)
    )


def _check_complete_crossing(
    instance: Instance, x: Sequence[int], y: Sequence[int]
) -> None:
    if set(x) & set(y):
        raise ContractViolation("eliminated chord sets must be disjoint")
    for vertex in x:
        missing = set(y) - set(instance.neighbors(vertex))
        if missing:
            raise ContractViolation(
                f"chord of vertex {vertex} does not cross {sorted(missing)}"
            )


def eliminate(
    instance: Instance,
    x: Sequence[int],
    y: Sequence[int],
    recorder: BranchRecorder | None = None,
) -> Iterator[Reduced]:
    """Branch on which of two completely crossing chord sets is monochromatic.

    In any valid coloring one of ``x`` and ``y`` uses a single color. For each
    side whose chords are pairwise non-crossing and each color allowed by
    every list on that side, the side is colored, the instance reduced, and
    the result yielded unless infeasible. Every result has lost all of ``x``
    or all of ``y``.
    """
    _check_complete_crossing(instance, x, y)
    yielded = pruned = 0
    try:
        if not x or not y:
            result = reduce(instance)
            if isinstance(result, Infeasible):
                pruned += 1
                return
            yielded += 1
            yield result
            return

        for side in (x, y):
            if _pairwise_crossing(instance, side):
                continue
            for color in COLOR_ORDER:
                if not all(color in instance.lists[v] for v in side):
                    continue
                result = reduce(assign(instance, side, color))
                if isinstance(result, Infeasible):
                    pruned += 1
                    continue
                yielded += 1
                if yielded > MAX_ELIMINATION_WIDTH:
                    raise ContractViolation("elimination produced over six branches")
                yield result
    finally:
        if recorder is not None:
            recorder.close_stream("eliminate", yielded, pruned)


def semi_separate(
    instance: Instance, recorder: BranchRecorder | None = None
) -> Iterator[SeparatedInstance]:
    """At most six semi-separated subinstances, equivalent to ``instance``.

    A balanced partition P is built and the L-R chords are played against the
    T-B chords. Survivors that lost their L-R chords keep P; the rest lost
    their T-B chords and get P rotated so that T and B become L and R.
    """
    if not instance.n:
        raise ContractViolation("semi-separation needs at least one chord")
    partition = quartile_partition(instance.diagram)
    rotated = partition.rotate()
    h_lr = chords_between(instance.diagram, partition.left, partition.right)
    h_tb = chords_between(instance.diagram, partition.top, partition.bottom)
    yielded = 0
    try:
        for branch in eliminate(instance, h_lr, h_tb, recorder):
            live = branch.instance.diagram
            chosen = rotated if any(v in live for v in h_lr) else partition
            yielded += 1
            if yielded > MAX_ELIMINATION_WIDTH:
                raise ContractViolation(
                    "semi-separation produced more than six instances"
                )
            yield SeparatedInstance(
                branch.instance, chosen, SeparationKind.SEMI, branch.partial
            )
    finally:
        if recorder is not None:
            recorder.close_stream("semi_separate", yielded)


def measure(instance: Instance, partition: CirclePartition) -> int:
    """Live endpoints in T and B."""
    return endpoint_count(instance.diagram, partition.top) + endpoint_count(
        instance.diagram, partition.bottom
    )


def _check_measure(before: int, after: int) -> None:
    if after > max(before - 1, math.ceil(3 * before / 4)):
        raise ContractViolation(f"measure went from {before} to {after}")


def full_separate(
    semi: SeparatedInstance, recorder: BranchRecorder | None = None
) -> Iterator[SeparatedInstance]:
    """Fully-separated subinstances equivalent to a semi-separated one.

    T and B are emptied by growing L and R; L and R never shrink.
    """
    if semi.kind is not SeparationKind.SEMI:
        raise ContractViolation("full separation expects a semi-separated instance")
    yield from _full_separate(semi.inst, semi.partition, semi.partial, recorder, 0)


def _full_separate(
    instance: Instance,
    partition: CirclePartition,
    partial: PartialColoring,
    recorder: BranchRecorder | None,
    depth: int,
) -> Iterator[SeparatedInstance]:
    diagram = instance.diagram
    top = endpoint_count(diagram, partition.top)
    bottom = endpoint_count(diagram, partition.bottom)
    # ties go to T
    side, x = (Side.TOP, top) if top >= bottom else (Side.BOTTOM, bottom)
    c = top + bottom

    if x == 0:
        if recorder is not None:
            recorder.measure_step(c, 0, depth)
            recorder.close_stream("full_separate", 1, depth=depth)
        yield SeparatedInstance(
            instance, partition.merged(), SeparationKind.FULL, partial
        )
        return

    arc = partition.arc(side)
    if x == 1:
        if not chords_between(diagram, partition.left, arc):
            grown = partition.transfer(side, Side.RIGHT, arc.length)
        else:
            grown = partition.transfer(side, Side.LEFT, arc.length)
        after = measure(instance, grown)
        _check_measure(c, after)
        if recorder is not None:
            recorder.measure_step(c, after, depth)
        yield from _full_separate(instance, grown, partial, recorder, depth + 1)
        return

    first, second = split_arc(diagram, arc, ArcEnd.START)
    # X_L touches L and X_R touches R: clockwise T is L-side first, B is R-side first.
    x_left, x_right = (first, second) if side is Side.TOP else (second, first)
    h_l = chords_between(diagram, partition.left, x_right)
    h_r = chords_between(diagram, x_left, partition.right)
    for branch in eliminate(instance, h_l, h_r, recorder):
        live = branch.instance.diagram
        if not any(v in live for v in h_l):
            grown = partition.transfer(side, Side.RIGHT, x_right.length)
        else:
            grown = partition.transfer(side, Side.LEFT, x_left.length)
        after = measure(branch.instance, grown)
        _check_measure(c, after)
        if recorder is not None:
            recorder.measure_step(c, after, depth)
        yield from _full_separate(
            branch.instance,
            grown,
            partial.merge(branch.partial),
            recorder,
            depth + 1,
        )


def separated_family(
    instance: Instance, recorder: BranchRecorder | None = None
) -> Iterator[SeparatedInstance]:
    """Fully-separated subinstances; ``instance`` is yes iff one of them is.

    The L and R arcs of every element hold at least floor(n/2) endpoints of
    the input's chords.
    """
    size = 0
    try:
        for semi in semi_separate(instance, recorder):
            for full in full_separate(semi, recorder):
                size += 1
                yield full
    finally:
        logger.debug(
            "separated family of n=%d closed after %d elements", instance.n, size
        )
        if recorder is not None:
            recorder.close_stream("separated_family", size, n=instance.n)


def split_full(full: SeparatedInstance) -> tuple[Instance, Instance]:
    """The L-L and R-R halves of a fully-separated instance."""
    if full.kind is not SeparationKind.FULL:
        raise ContractViolation("only fully-separated instances can be split")
    partition = full.partition
    stray = [
        v
        for v in full.inst.vertices
        if classify(full.inst.chord(v), partition)
        not in ((Side.LEFT, Side.LEFT), (Side.RIGHT, Side.RIGHT))
    ]
    if stray:
        raise ContractViolation(f"chords {stray} are neither L-L nor R-R")
    left = restrict(
        full.inst,
        lambda _, chord: classify(chord, partition) == (Side.LEFT, Side.LEFT),
    )
    right = restrict(
        full.inst,
        lambda _, chord: classify(chord, partition) == (Side.RIGHT, Side.RIGHT),
    )
    return left, right

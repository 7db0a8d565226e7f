"""Benchmark harness: solve seeded random instances and record the effort."""

from __future__ import annotations

import json
import logging
import statistics
import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import asdict, dataclass, field
from typing import Any

from chordcolor.branching import BranchRecorder
from chordcolor.generators import ListDensity, gen_random
from chordcolor.oracle import oracle_solve
from chordcolor.solver import DEFAULT_BASE_THRESHOLD, solve

logger = logging.getLogger(__name__)


@dataclass
class BenchRecord:
    size: int
    trial: int
    seed: int
    density: str
    verdict: str
    nodes: int
    depth: int
    family_sizes: list[int] = field(default_factory=list)
    max_child_ratio: float = 0.0
    wall_seconds: float = 0.0
    oracle_agrees: bool | None = None
    branching: dict[str, Any] = field(default_factory=dict)
    measure_trace: list[list[int]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def instance_seed(seed: int, size: int, trial: int) -> int:
    """Seed of one benchmark instance; distinct across sizes and trials."""
    return seed * 1_000_003 + size * 10_007 + trial


StreamSink = Callable[[dict[str, Any]], None]


def _tagged(sink: StreamSink, **tags: Any) -> StreamSink:
    def forward(record: dict[str, Any]) -> None:
        sink({**tags, **record})

    return forward


def run_bench(
    sizes: Iterable[int],
    trials: int,
    seed: int,
    density: ListDensity = ListDensity.FULL,
    *,
    drop_probability: float = 0.5,
    base_threshold: int = DEFAULT_BASE_THRESHOLD,
    check_oracle: bool = False,
    stream_sink: StreamSink | None = None,
) -> Iterator[BenchRecord]:
    """One record per solved instance, sizes in the given order.

    ``stream_sink`` receives every closed branching stream, tagged with the
    size, trial and seed of the instance it belongs to.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    for size in sizes:
        for trial in range(trials):
            current = instance_seed(seed, size, trial)
            instance = gen_random(size, current, density, drop_probability)
            recorder = BranchRecorder(
                sink=None
                if stream_sink is None
                else _tagged(stream_sink, size=size, trial=trial, seed=current)
            )
            started = time.perf_counter()
            result = solve(instance, base_threshold=base_threshold, recorder=recorder)
            elapsed = time.perf_counter() - started
            agrees = None
            if check_oracle:
                agrees = oracle_solve(instance).verdict is result.verdict
                if not agrees:
                    logger.warning("oracle disagrees on n=%d seed=%d", size, current)
            yield BenchRecord(
                size=size,
                trial=trial,
                seed=current,
                density=density.value,
                verdict=result.verdict.value,
                nodes=result.stats.nodes,
                depth=result.stats.depth,
                family_sizes=list(result.stats.family_sizes),
                max_child_ratio=result.stats.max_child_ratio,
                wall_seconds=elapsed,
                oracle_agrees=agrees,
                branching=recorder.to_dict(),
                measure_trace=[list(step) for step in recorder.measure_trace],
            )



def summarize(records: Iterable[BenchRecord]) -> dict[int, dict[str, Any]]:
    """Per-size medians of effort and the share of yes answers."""
    by_size: dict[int, list[BenchRecord]] = {}
    for record in records:
        by_size.setdefault(record.size, []).append(record)
    summary: dict[int, dict[str, Any]] = {}
    for size, group in sorted(by_size.items()):
        checked = [r.oracle_agrees for r in group if r.oracle_agrees is not None]
        summary[size] = {
            "count": len(group),
            "yes": sum(r.verdict == "yes" for r in group),
            "median_nodes": statistics.median(r.nodes for r in group),
            "median_depth": statistics.median(r.depth for r in group),
            "median_wall_seconds": statistics.median(r.wall_seconds for r in group),
            "oracle_agreement": (sum(checked) / len(checked)) if checked else None,
        }
    return summary

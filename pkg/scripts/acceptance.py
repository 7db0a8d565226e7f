"""Run the acceptance checks against the installed chordcolor package.

Usage:
    python scripts/acceptance.py [--quick] [--skip-performance]

--quick            50 instances per size and density instead of 500, and
                   40 ordered graphs instead of 200.
--skip-performance skip the n=60 timing run.

Prints one line per check and exits 1 if any check fails.
"""

from __future__ import annotations

import itertools
import math
import random
import statistics
import sys
import time

from chordcolor.bench import instance_seed
from chordcolor.bookembed import OrderedGraph, embed3, exhaustive_pages
from chordcolor.branching import MAX_ELIMINATION_WIDTH, BranchRecorder
from chordcolor.chords import ContractViolation
from chordcolor.generators import ListDensity, gen_ordered_graph, gen_random
from chordcolor.instance import validate_coloring
from chordcolor.oracle import oracle_solve
from chordcolor.solver import solve


def _complete(vertex_count: int) -> OrderedGraph:
    return OrderedGraph(
        vertex_count,
        tuple(itertools.combinations(range(1, vertex_count + 1), 2)),
    )


def check_random_instances(per_density: int) -> dict[str, int]:
    """Oracle agreement, witnesses and structural bounds on random instances."""
    failures = {
        "oracle": 0,
        "witness": 0,
        "contract": 0,
        "width": 0,
        "depth": 0,
    }
    for n in range(4, 13):
        depth_limit = 4 * math.log2(n) + 8
        for density in ListDensity:
            for trial in range(per_density):
                instance = gen_random(n, instance_seed(0, n, trial), density)
                recorder = BranchRecorder()
                try:
                    result = solve(instance, base_threshold=3, recorder=recorder)
                except ContractViolation as exc:
                    failures["contract"] += 1
                    print(f"  n={n} {density.value} trial {trial}: {exc}")
                    continue
                if result.verdict is not oracle_solve(instance).verdict:
                    failures["oracle"] += 1
                if result.coloring is not None and not validate_coloring(
                    instance, result.coloring
                ):
                    failures["witness"] += 1
                widths = recorder.max_width
                if (
                    widths.get("eliminate", 0) > MAX_ELIMINATION_WIDTH
                    or widths.get("semi_separate", 0) > MAX_ELIMINATION_WIDTH
                ):
                    failures["width"] += 1
                if result.stats.depth > depth_limit:
                    failures["depth"] += 1
    return failures


def check_complete_graphs() -> list[str]:
    problems = []
    for vertex_count, expected in ((4, True), (6, True), (7, False)):
        started = time.perf_counter()
        pages = embed3(_complete(vertex_count))
        elapsed = time.perf_counter() - started
        if (pages is not None) is not expected:
            problems.append(f"K{vertex_count}: wrong answer")
        if elapsed > 30:
            problems.append(f"K{vertex_count}: took {elapsed:.1f}s")
    return problems


def check_ordered_graphs(count: int) -> int:
    rng = random.Random(7)
    disagreements = 0
    for seed in range(count):
        vertex_count = rng.randint(2, 8)
        pairs = vertex_count * (vertex_count - 1) // 2
        graph = gen_ordered_graph(vertex_count, rng.randint(0, min(14, pairs)), seed)
        if (embed3(graph) is None) is not (exhaustive_pages(graph) is None):
            disagreements += 1
            print(f"  disagreement on seed {seed}: {graph.edges}")
    return disagreements


def check_performance(seeds: int = 20, n: int = 60) -> float:
    timings = []
    for seed in range(seeds):
        instance = gen_random(n, seed)
        started = time.perf_counter()
        solve(instance)
        timings.append(time.perf_counter() - started)
        print(f"  seed {seed}: {timings[-1]:.2f}s", flush=True)
    return statistics.median(timings)


def main() -> None:
    quick = "--quick" in sys.argv[1:]
    failed = False

    per_density = 50 if quick else 500
    print(f"Random instances, n=4..12, {per_density} per density...")
    started = time.perf_counter()
    failures = check_random_instances(per_density)
    for name, count in failures.items():
        print(f"  {name}: {'ok' if count == 0 else f'FAILED ({count})'}")
    print(f"  elapsed {time.perf_counter() - started:.1f}s")
    failed |= any(failures.values())

    print("Complete graphs K4, K6, K7...")
    problems = check_complete_graphs()
    print("  ok" if not problems else "  FAILED: " + "; ".join(problems))
    failed |= bool(problems)

    count = 40 if quick else 200
    print(f"Ordered graphs against exhaustive page search ({count})...")
    disagreements = check_ordered_graphs(count)
    print("  ok" if not disagreements else f"  FAILED ({disagreements})")
    failed |= bool(disagreements)

    if "--skip-performance" not in sys.argv[1:]:
        print("Median solve time at n=60...")
        median = check_performance()
        # an engineering target, reported but not fatal
        print(f"  median {median:.2f}s" + ("" if median <= 60 else " (over 60s)"))

    print("\nDone: " + ("FAILED" if failed else "all checks passed"))
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()

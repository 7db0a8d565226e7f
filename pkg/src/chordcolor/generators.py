"""Seeded random instances and ordered graphs.

Every generator owns a ``random.Random(seed)``; the global RNG is never
touched, so output depends on the arguments alone.
"""

from __future__ import annotations

import itertools
import random
from enum import Enum

from chordcolor.bookembed import OrderedGraph
from chordcolor.chords import Chord, ChordDiagram
from chordcolor.instance import COLOR_ORDER, FULL_LIST, Color, Instance


class ListDensity(Enum):
    FULL = "full"
    DROP_ONE = "drop-one"
    MIXED = "mixed"


_NON_EMPTY_SUBSETS: list[frozenset[Color]] = [
    frozenset(combo)
    for size in (1, 2, 3)
    for combo in itertools.combinations(COLOR_ORDER, size)
]


def _draw_list(
    rng: random.Random, density: ListDensity, drop_probability: float
) -> frozenset[Color]:
    if density is ListDensity.FULL:
        return FULL_LIST
    if density is ListDensity.DROP_ONE:
        if rng.random() < drop_probability:
            return FULL_LIST - {rng.choice(COLOR_ORDER)}
        return FULL_LIST
    return rng.choice(_NON_EMPTY_SUBSETS)


def gen_random(
    n: int,
    seed: int,
    density: ListDensity = ListDensity.FULL,
    drop_probability: float = 0.5,
) -> Instance:
    """A uniform random perfect matching of ``2n`` positions with random lists."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 <= drop_probability <= 1.0:
        raise ValueError(f"drop_probability must be in [0, 1], got {drop_probability}")
    rng = random.Random(seed)
    positions = list(range(2 * n))
    rng.shuffle(positions)
    chords = {
        v: Chord(*sorted(positions[2 * v : 2 * v + 2])) for v in range(n)
    }
    lists = {v: _draw_list(rng, density, drop_probability) for v in range(n)}
    return Instance(ChordDiagram(2 * n, chords), lists)


def gen_ordered_graph(vertex_count: int, edge_count: int, seed: int) -> OrderedGraph:
    """``edge_count`` distinct edges drawn uniformly over ``1 .. vertex_count``."""
    pairs = list(itertools.combinations(range(1, vertex_count + 1), 2))
    if not 0 <= edge_count <= len(pairs):
        raise ValueError(
            f"edge_count must be in [0, {len(pairs)}] for {vertex_count} vertices"
        )
    rng = random.Random(seed)
    return OrderedGraph(vertex_count, tuple(sorted(rng.sample(pairs, edge_count))))

"""Test configuration for pytest."""

import pytest

from chordcolor.instance import Instance


@pytest.fixture
def two_crossing() -> Instance:
    """Chords (0,2) and (1,3): one crossing pair."""
    return Instance.build(4, {0: (0, 2), 1: (1, 3)})


@pytest.fixture
def k4() -> Instance:
    """Four mutually crossing chords; not 3-colorable."""
    return Instance.build(8, {0: (0, 4), 1: (1, 5), 2: (2, 6), 3: (3, 7)})


@pytest.fixture
def c5() -> Instance:
    """Five chords whose crossing graph is the cycle 0-1-2-3-4-0."""
    return Instance.build(
        10, {0: (0, 3), 1: (2, 5), 2: (4, 7), 3: (6, 9), 4: (1, 8)}
    )

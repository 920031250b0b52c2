"""Shared fixtures: the worked-example string and its hand-transcribed
composition multiset, used as frozen ground truth across the suite."""

from collections import Counter

import pytest

from compcodes.core import Composition, Readout

EXAMPLE_S = "001010111"

# Full composition multiset of EXAMPLE_S, entry by entry, as (z, w) with
# multiplicity.  45 entries in total.
EXAMPLE_MULTISET = {
    1: {(1, 0): 4, (0, 1): 5},
    2: {(2, 0): 1, (1, 1): 5, (0, 2): 2},
    3: {(2, 1): 3, (1, 2): 3, (0, 3): 1},
    4: {(3, 1): 1, (2, 2): 3, (1, 3): 2},
    5: {(3, 2): 2, (2, 3): 2, (1, 4): 1},
    6: {(4, 2): 1, (3, 3): 1, (2, 4): 2},
    7: {(4, 3): 1, (3, 4): 1, (2, 5): 1},
    8: {(4, 4): 1, (3, 5): 1},
    9: {(4, 5): 1},
}

EXAMPLE_SIGMA = (1, 1, 2, 0, 1)

EXAMPLE_WEIGHTS = (5, 9, 12, 13, 14, 13, 12, 9, 5)


def readout_from_table(table: dict, n: int) -> Readout:
    classes = {k: Counter({Composition(*zw): m for zw, m in entries.items()})
               for k, entries in table.items()}
    return Readout(n, classes)


@pytest.fixture
def example_readout() -> Readout:
    return readout_from_table(EXAMPLE_MULTISET, 9)

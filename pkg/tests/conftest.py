from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from arcembed.plmap import from_pairs, identity_map, negation_map


@pytest.fixture
def ident():
    return identity_map()


@pytest.fixture
def neg():
    return negation_map()


@pytest.fixture
def tent():
    # one-sided tent on [0, 1]
    return from_pairs([(0, 0), ("1/2", 1), (1, 0)])


@pytest.fixture
def f_a():
    # one-sided zigzag on [0, 1]: three departure blocks
    return from_pairs([(0, 0), ("1/4", "1/2"), ("1/2", "-1/4"), (1, "3/4")])


@pytest.fixture
def f_b():
    # negative-radial-departures-only centered map
    return from_pairs([(-1, 1), (0, 0), ("1/2", "1/4"), (1, -1)])


@pytest.fixture
def f_c():
    # both halves rise away from 0: 0 is a local minimum
    return from_pairs([(-1, 0), ("-1/4", "1/2"), (0, 0), ("1/4", "1/2"), (1, 0)])


@pytest.fixture
def f_d():
    # positive-radial-departures-only centered map; right half is f_a
    return from_pairs(
        [(-1, "1/2"), ("-1/2", -1), (0, 0),
         ("1/4", "1/2"), ("1/2", "-1/4"), (1, "3/4")]
    )


@pytest.fixture
def f_e():
    # second right contour point (1/2, -1/2) twins the left (-1/4, -1/2)
    return from_pairs(
        [(-1, 1), ("-1/4", "-1/2"), (0, 0),
         ("1/4", "1/2"), ("1/2", "-1/2"), (1, 1)]
    )

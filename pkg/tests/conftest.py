import random

import pytest

from qamont.plumbing import PlumbingGraph


@pytest.fixture
def rng():
    return random.Random(20260810)


def random_star_graph(rng, max_legs=4, max_leg_len=4,
                      central_range=(-7, -1), leg_range=(-7, -2)):
    """Random star graph with leg weights <= -2 (central weight unrestricted)."""
    legs = tuple(
        tuple(rng.randint(*leg_range) for _ in range(rng.randint(1, max_leg_len)))
        for _ in range(rng.randint(0, max_legs)))
    return PlumbingGraph(rng.randint(*central_range), legs)


def random_cf(rng, max_len=5, low=-5):
    return tuple(rng.randint(low, -2) for _ in range(rng.randint(1, max_len)))

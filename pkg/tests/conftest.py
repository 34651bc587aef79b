import random

import pytest

from nimcolor.graphs import EdgeColoring


@pytest.fixture
def rng():
    return random.Random(20260810)


def random_coloring(rng, max_n=8, max_k=3) -> EdgeColoring:
    n = rng.randrange(3, max_n + 1)
    k = rng.randrange(2, max_k + 1)
    return EdgeColoring.random(n, k, rng)

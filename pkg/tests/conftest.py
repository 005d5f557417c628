import random

import pytest


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_word(rng, max_length, min_length=0):
    return "".join(rng.choice("01") for _ in range(rng.randrange(min_length, max_length + 1)))

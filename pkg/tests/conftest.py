import random

import pytest

from riordanlab import Field


@pytest.fixture
def QQ():
    return Field()


@pytest.fixture
def F7():
    return Field(7)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)

from __future__ import annotations

import random

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)

import random

import pytest
from hypothesis import settings

from quiverstab import presets
from quiverstab.linalg import FieldSpec

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

F2, F3 = FieldSpec(2), FieldSpec(3)
PRESET_NAMES = list(presets.PRESETS)


@pytest.fixture(params=PRESET_NAMES)
def preset(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def sl2():
    alg = presets.algebra("sl2block")
    return alg, presets.objects("sl2block", FieldSpec())

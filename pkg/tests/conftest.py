from __future__ import annotations

import numpy as np
import pytest

from polytone import synth
from polytone.image import GrayImage

# Corpus runs known to converge; bimodal with four nodes oscillates and is
# covered by a dedicated non-convergence test instead.
CORPUS_RUNS = [
    ("dark", 3),
    ("dark", 4),
    ("bright", 3),
    ("bright", 4),
    ("bimodal", 3),
    ("uniform", 3),
    ("uniform", 4),
    ("two_level", 3),
]


def make_corpus() -> dict[str, GrayImage]:
    return {
        "dark": synth.dark_image(),
        "bright": synth.bright_image(),
        "bimodal": synth.bimodal_image(),
        "uniform": synth.uniform_image(rows=256),
        "two_level": synth.two_level_image(),
    }


@pytest.fixture(scope="session")
def corpus() -> dict[str, GrayImage]:
    return make_corpus()


@pytest.fixture
def ramp10() -> GrayImage:
    return GrayImage(width=10, height=1, levels=np.arange(10), max_level=9)


@pytest.fixture
def ramp256() -> GrayImage:
    return synth.ramp_image(255)

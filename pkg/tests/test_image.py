from __future__ import annotations

import numpy as np
import pytest

from polytone.errors import EmptyImage
from polytone.image import GrayImage, histogram


class TestGrayImage:
    def test_basic_construction(self):
        image = GrayImage(width=2, height=2, levels=np.array([0, 64, 128, 255]))
        assert image.pixel_count == 4
        assert image.max_level == 255

    def test_zero_dimensions_rejected(self):
        with pytest.raises(EmptyImage):
            GrayImage(width=0, height=4, levels=np.array([]))

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            GrayImage(width=2, height=2, levels=np.array([1, 2, 3]))

    def test_out_of_range_levels_rejected(self):
        with pytest.raises(ValueError):
            GrayImage(width=2, height=1, levels=np.array([0, 256]))
        with pytest.raises(ValueError):
            GrayImage(width=2, height=1, levels=np.array([-1, 0]))

    def test_fractional_levels_rejected(self):
        with pytest.raises(ValueError):
            GrayImage(width=2, height=1, levels=np.array([0.5, 1.0]))

    def test_integral_floats_accepted(self):
        image = GrayImage(width=2, height=1, levels=np.array([3.0, 4.0]))
        assert image.levels.tolist() == [3, 4]
        assert image.levels.dtype == np.int64

    def test_levels_are_read_only(self):
        image = GrayImage(width=2, height=1, levels=np.array([1, 2]))
        with pytest.raises(ValueError):
            image.levels[0] = 5


class TestHistogram:
    def test_four_distinct_levels(self):
        image = GrayImage(width=2, height=2, levels=np.array([0, 64, 128, 255]))
        hist = histogram(image)
        assert hist.total == 4
        assert hist.counts.size == 256
        assert hist.counts[0] == hist.counts[64] == hist.counts[128] == hist.counts[255] == 1
        assert int(hist.counts.sum()) == 4

    def test_constant_image(self):
        image = GrayImage(width=10, height=10, levels=np.full(100, 42))
        hist = histogram(image)
        assert hist.counts[42] == 100
        assert hist.total == 100

    def test_small_ramp(self):
        image = GrayImage(width=10, height=1, levels=np.arange(10), max_level=9)
        hist = histogram(image)
        assert hist.counts.tolist() == [1] * 10

    def test_mass_conserved_under_enhancement(self):
        from polytone.pipeline import EnhanceConfig, enhance
        from polytone import synth

        image = synth.dark_image()
        out, _ = enhance(image, EnhanceConfig(n=3))
        assert histogram(out).total == histogram(image).total

"""Gray-level raster images and their level histograms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyImage


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Rectangular raster of integer gray levels in [0, max_level].

    Pixels are stored row-major in a read-only 1-D int64 array whose size
    must equal width * height.
    """

    width: int
    height: int
    levels: np.ndarray
    max_level: int = 255

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise EmptyImage(
                f"image dimensions must be positive, got {self.width}x{self.height}"
            )
        if self.max_level < 1:
            raise ValueError(f"max_level must be >= 1, got {self.max_level}")
        levels = np.asarray(self.levels)
        if not np.issubdtype(levels.dtype, np.integer):
            if levels.size and not np.all(levels == np.floor(levels)):
                raise ValueError("gray levels must be integers")
        levels = levels.astype(np.int64).ravel()
        if levels.size != self.width * self.height:
            raise ValueError(
                f"expected {self.width * self.height} samples for "
                f"{self.width}x{self.height}, got {levels.size}"
            )
        if int(levels.min()) < 0 or int(levels.max()) > self.max_level:
            raise ValueError(
                f"levels must lie in [0, {self.max_level}], got "
                f"[{int(levels.min())}, {int(levels.max())}]"
            )
        levels.setflags(write=False)
        object.__setattr__(self, "levels", levels)

    @property
    def pixel_count(self) -> int:
        return int(self.levels.size)


@dataclass(frozen=True, eq=False)
class Histogram:
    """Per-level pixel counts over 0..max_level."""

    counts: np.ndarray
    total: int


def histogram(image: GrayImage) -> Histogram:
    """Count the pixels at each level; counts sum to the pixel count."""
    counts = np.bincount(image.levels, minlength=image.max_level + 1)
    counts.setflags(write=False)
    return Histogram(counts=counts, total=image.pixel_count)

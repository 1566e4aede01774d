"""Deterministic synthetic gray images for experiments and tests."""

from __future__ import annotations

import numpy as np

from .image import GrayImage


def ramp_image(max_level: int = 255) -> GrayImage:
    """One pixel per level, 0..max_level, as a single row."""
    return GrayImage(
        width=max_level + 1,
        height=1,
        levels=np.arange(max_level + 1),
        max_level=max_level,
    )


def uniform_image(rows: int = 256, max_level: int = 255) -> GrayImage:
    """Exact discrete-uniform image: every level appears exactly `rows` times."""
    levels = np.tile(np.arange(max_level + 1), rows)
    return GrayImage(width=max_level + 1, height=rows, levels=levels, max_level=max_level)


def dark_image(width: int = 32, height: int = 32, max_level: int = 255) -> GrayImage:
    """Dark-skewed gradient: levels follow a squared ramp, most pixels dark."""
    t = np.arange(width * height) / (width * height - 1)
    levels = np.rint(max_level * t**2).astype(np.int64)
    return GrayImage(width=width, height=height, levels=levels, max_level=max_level)


def bright_image(width: int = 32, height: int = 32, max_level: int = 255) -> GrayImage:
    """Bright-skewed gradient: levels follow a square-root ramp."""
    t = np.arange(width * height) / (width * height - 1)
    levels = np.rint(max_level * np.sqrt(t)).astype(np.int64)
    return GrayImage(width=width, height=height, levels=levels, max_level=max_level)


def bimodal_image(
    width: int = 32,
    height: int = 32,
    low_center: int = 60,
    high_center: int = 200,
    spread: int = 10,
    max_level: int = 255,
) -> GrayImage:
    """Two level clusters of equal pixel mass around low_center and high_center."""
    count = width * height
    offsets = np.arange(count) % (2 * spread + 1) - spread
    centers = np.where(np.arange(count) < count // 2, low_center, high_center)
    levels = np.clip(centers + offsets, 0, max_level)
    return GrayImage(width=width, height=height, levels=levels, max_level=max_level)


def two_level_image(
    low: int = 0,
    high: int = 255,
    low_count: int = 900,
    high_count: int = 100,
    max_level: int = 255,
) -> GrayImage:
    """Exactly two occupied levels with the given pixel counts, as a single row."""
    levels = np.concatenate(
        [np.full(low_count, low), np.full(high_count, high)]
    )
    return GrayImage(
        width=low_count + high_count, height=1, levels=levels, max_level=max_level
    )


def constant_image(
    level: int = 128, width: int = 8, height: int = 8, max_level: int = 255
) -> GrayImage:
    """Every pixel at the same level."""
    return GrayImage(
        width=width,
        height=height,
        levels=np.full(width * height, level),
        max_level=max_level,
    )

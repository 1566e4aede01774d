"""Shared hypothesis strategies."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from polytone.image import GrayImage


@st.composite
def node_target_instances(draw, max_range: float = 255.0):
    """Strictly increasing nodes (sane gaps) with targets in [0, max_range]."""
    n = draw(st.integers(min_value=2, max_value=10))
    gaps = draw(
        st.lists(
            st.floats(min_value=0.5, max_value=60.0, allow_nan=False),
            min_size=n - 1,
            max_size=n - 1,
        )
    )
    start = draw(st.floats(min_value=0.0, max_value=40.0))
    nodes = np.concatenate(([start], start + np.cumsum(gaps)))
    if nodes[-1] > max_range:
        nodes = nodes * (max_range / nodes[-1])
    values = draw(
        st.lists(
            st.floats(min_value=0.0, max_value=max_range, allow_nan=False),
            min_size=n,
            max_size=n,
        )
    )
    return nodes, np.asarray(values, dtype=np.float64)


@st.composite
def small_images(draw, max_side: int = 8, max_level: int = 31):
    """Tiny integer images for oracle-equivalence checks."""
    width = draw(st.integers(min_value=1, max_value=max_side))
    height = draw(st.integers(min_value=1, max_value=max_side))
    levels = draw(
        st.lists(
            st.integers(min_value=0, max_value=max_level),
            min_size=width * height,
            max_size=width * height,
        )
    )
    return GrayImage(
        width=width, height=height, levels=np.asarray(levels), max_level=max_level
    )


@st.composite
def images_with_nodes(draw, max_side: int = 8, max_level: int = 31):
    """A small image plus a valid anchored node vector for it."""
    image = draw(small_images(max_side=max_side, max_level=max_level))
    lo = int(image.levels.min())
    hi = int(image.levels.max())
    if hi == lo:
        hi = lo + 1  # keep nodes valid; iterate preconditions checked by caller
    n_interior = draw(st.integers(min_value=0, max_value=3))
    interior = sorted(
        draw(
            st.lists(
                st.floats(
                    min_value=lo + 1e-3, max_value=hi - 1e-3, allow_nan=False
                ),
                min_size=n_interior,
                max_size=n_interior,
                unique=True,
            )
        )
    )
    nodes = np.asarray([float(lo)] + interior + [float(hi)])
    return image, nodes

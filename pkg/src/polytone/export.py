"""CSV emission of transform curves and level histograms for external plotting.

Both exports use LF line endings, "." as the decimal separator, and no
locale-dependent formatting.
"""

from __future__ import annotations

import numpy as np

from .curve import PolygonalFunction
from .image import Histogram


def export_function_csv(poly: PolygonalFunction, samples: int) -> str:
    """Sample the clamped transform on an even grid plus every node position.

    Rows are "v,f" sorted by v over [0, range_max]; a row that falls on a
    node carries "node" in a third field.  Grid points that coincide with
    a node are emitted once, as the node row.
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    grid = np.linspace(0.0, poly.range_max, samples)
    positions = np.union1d(grid, poly.nodes)
    node_positions = {float(v) for v in poly.nodes}
    clamped = np.clip(positions, poly.nodes[0], poly.nodes[-1])
    outputs = np.clip(poly.evaluate(clamped), 0.0, poly.range_max)
    lines = ["v,f"]
    for v, f in zip(positions.tolist(), outputs.tolist()):
        mark = ",node" if v in node_positions else ""
        lines.append(f"{v},{f}{mark}")
    return "\n".join(lines) + "\n"


def export_histogram_csv(hist: Histogram) -> str:
    """One "level,count" row for every level 0..max."""
    lines = ["level,count"]
    lines.extend(f"{level},{int(count)}" for level, count in enumerate(hist.counts))
    return "\n".join(lines) + "\n"

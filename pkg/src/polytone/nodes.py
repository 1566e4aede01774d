"""Histogram-driven node placement by fixed-point iteration.

The first and last nodes are anchored at the image's minimum and maximum
levels.  Each interior node is repeatedly replaced by the mean gray level
over its bin: the set of pixels whose level falls in the closed interval
between the two neighbouring nodes.  Bins of adjacent interior nodes
overlap by construction, and every update is simultaneous (Jacobi style):
all bins are taken from the previous iterate, so the result is
independent of update order.  Iteration stops once the largest node move
drops below epsilon.

Bin counts and sums are computed from the level histogram, which is exact
for integer-valued images; the per-pixel definition is kept as a test
oracle only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curve import MIN_RELATIVE_GAP
from .errors import (
    ConstantImage,
    DegenerateRange,
    EmptyImage,
    IndexOutOfRange,
    NodeOrderViolation,
    TooFewDistinctLevels,
)
from .image import GrayImage, histogram


@dataclass(frozen=True)
class NodeSolverConfig:
    """Parameters of the node iteration.

    epsilon is the stopping threshold in gray-level units; when
    initial_interior_nodes is omitted the interior starts equidistant
    between the image min and max.
    """

    n: int
    epsilon: float = 0.5
    max_iterations: int = 100
    initial_interior_nodes: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"node count must be >= 2, got {self.n}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.initial_interior_nodes is not None:
            inner = tuple(float(x) for x in self.initial_interior_nodes)
            if len(inner) != self.n - 2:
                raise ValueError(
                    f"expected {self.n - 2} initial interior nodes, got {len(inner)}"
                )
            if any(b <= a for a, b in zip(inner, inner[1:])):
                raise ValueError("initial interior nodes must be strictly increasing")
            object.__setattr__(self, "initial_interior_nodes", inner)


@dataclass(frozen=True)
class BinStats:
    """Pixel count and level sum over one closed node interval."""

    index: int  # 1-based interior node index, 2..n-1
    lower: float
    upper: float
    pixel_count: int
    level_sum: int

    @property
    def mean(self) -> float:
        if self.pixel_count == 0:
            raise ZeroDivisionError(f"bin {self.index} is empty")
        return self.level_sum / self.pixel_count


@dataclass(frozen=True, eq=False)
class NodeSolverResult:
    """Converged (or iteration-capped) nodes with the full iterate trace."""

    nodes: np.ndarray
    iterations: int
    converged: bool
    trace: tuple[np.ndarray, ...]
    warnings: tuple[str, ...]


def min_max_levels(image: GrayImage) -> tuple[int, int]:
    """Exact minimum and maximum pixel level of the image."""
    if image.levels.size == 0:
        raise EmptyImage("image has no pixels")
    return int(image.levels.min()), int(image.levels.max())


def init_nodes(v_min: float, v_max: float, n: int) -> np.ndarray:
    """n equidistant node positions from v_min to v_max inclusive."""
    if n < 2:
        raise ValueError(f"node count must be >= 2, got {n}")
    if v_min == v_max:
        raise DegenerateRange(f"cannot spread {n} nodes over the empty range at {v_min}")
    if v_min > v_max:
        raise ValueError(f"v_min {v_min} exceeds v_max {v_max}")
    return np.linspace(float(v_min), float(v_max), n)


def _bin_count_and_sum(counts: np.ndarray, lower: float, upper: float) -> tuple[int, int]:
    # Closed interval on both ends; integer levels make ceil/floor exact.
    lo = max(0, math.ceil(lower))
    hi = min(counts.size - 1, math.floor(upper))
    if hi < lo:
        return 0, 0
    window = counts[lo : hi + 1]
    pixel_count = int(window.sum())
    level_sum = int((np.arange(lo, hi + 1, dtype=np.int64) * window).sum())
    return pixel_count, level_sum


def bin_stats(image: GrayImage, nodes, i: int) -> BinStats:
    """Count and sum the pixels with level in the closed interval [v_{i-1}, v_{i+1}].

    The index i is 1-based and must address an interior node (2 <= i <= n-1).
    A pixel whose level sits on a shared endpoint belongs to both adjacent
    bins; the overlap is intentional.
    """
    v = np.asarray(nodes, dtype=np.float64).ravel()
    if not 2 <= i <= v.size - 1:
        raise IndexOutOfRange(f"interior node index {i} outside 2..{v.size - 1}")
    lower, upper = float(v[i - 2]), float(v[i])
    counts = histogram(image).counts
    pixel_count, level_sum = _bin_count_and_sum(counts, lower, upper)
    return BinStats(
        index=i, lower=lower, upper=upper, pixel_count=pixel_count, level_sum=level_sum
    )


def _check_strictly_increasing(v: np.ndarray) -> None:
    span = float(v[-1] - v[0])
    gaps = np.diff(v)
    bad = np.flatnonzero(gaps < MIN_RELATIVE_GAP * abs(span))
    if bad.size:
        k = int(bad[0])
        raise NodeOrderViolation(
            f"updated nodes not strictly increasing between positions {k} and {k + 1} "
            f"({v[k]:g} .. {v[k + 1]:g}); reduce n"
        )


def _jacobi_step(counts: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, list[str]]:
    new = v.copy()
    warnings: list[str] = []
    for k in range(1, v.size - 1):
        pixel_count, level_sum = _bin_count_and_sum(counts, v[k - 1], v[k + 1])
        if pixel_count == 0:
            warnings.append(
                f"bin {k + 1} empty on [{v[k - 1]:g}, {v[k + 1]:g}]; "
                f"node kept at {v[k]:g}"
            )
            continue
        new[k] = level_sum / pixel_count
    _check_strictly_increasing(new)
    return new, warnings


def iterate_nodes(image: GrayImage, nodes) -> tuple[np.ndarray, list[str]]:
    """One simultaneous update of all interior nodes.

    Every interior node moves to the mean level over its current closed
    interval, an empty interval leaves its node in place and records a
    warning, and the endpoints (which must equal the image min and max)
    are returned unchanged.
    """
    v = np.asarray(nodes, dtype=np.float64).ravel()
    l_min, l_max = min_max_levels(image)
    if v[0] != l_min or v[-1] != l_max:
        raise ValueError(
            f"endpoint nodes ({v[0]:g}, {v[-1]:g}) must equal the image "
            f"min/max ({l_min}, {l_max})"
        )
    counts = histogram(image).counts
    return _jacobi_step(counts, v)


def solve_nodes(image: GrayImage, config: NodeSolverConfig) -> NodeSolverResult:
    """Iterate node means until the largest move drops below epsilon.

    The trace records the initial vector and every subsequent iterate, so
    identical inputs reproduce identical traces bit for bit.  Raises
    ConstantImage when the image has no level spread, TooFewDistinctLevels
    when an initial bin holds no pixels, and NodeOrderViolation (tagged
    with the iteration number) when updated means cross.
    """
    l_min, l_max = min_max_levels(image)
    if l_min == l_max:
        raise ConstantImage(f"all pixels share level {l_min}; nothing to enhance")
    if config.initial_interior_nodes is not None:
        inner = np.asarray(config.initial_interior_nodes, dtype=np.float64)
        if inner.size and not (l_min < inner[0] and inner[-1] < l_max):
            raise ValueError(
                f"initial interior nodes must lie strictly inside ({l_min}, {l_max})"
            )
        v = np.concatenate(([float(l_min)], inner, [float(l_max)]))
    else:
        v = init_nodes(l_min, l_max, config.n)

    counts = histogram(image).counts
    for k in range(1, config.n - 1):
        pixel_count, _ = _bin_count_and_sum(counts, v[k - 1], v[k + 1])
        if pixel_count == 0:
            raise TooFewDistinctLevels(
                f"initial bin {k + 1} on [{v[k - 1]:g}, {v[k + 1]:g}] contains no "
                f"pixels; reduce n or supply initial nodes"
            )

    trace = [v.copy()]
    warnings: list[str] = []
    converged = config.n == 2  # no interior nodes to move
    iterations = 0
    while not converged and iterations < config.max_iterations:
        try:
            new, step_warnings = _jacobi_step(counts, v)
        except NodeOrderViolation as err:
            raise NodeOrderViolation(
                f"iteration {iterations + 1}: {err}", iteration=iterations + 1
            ) from err
        iterations += 1
        warnings.extend(f"iteration {iterations}: {w}" for w in step_warnings)
        trace.append(new.copy())
        converged = float(np.max(np.abs(new - v))) < config.epsilon
        v = new

    for arr in trace:
        arr.setflags(write=False)
    nodes_out = trace[-1]
    return NodeSolverResult(
        nodes=nodes_out,
        iterations=iterations,
        converged=converged,
        trace=tuple(trace),
        warnings=tuple(warnings),
    )

"""Piecewise-linear gray-level transforms in the absolute-value basis.

A transform is written as f(v) = sum_i a_i * |v - v_i| over strictly
increasing node abscissas v_1 < ... < v_n.  Requiring f(v_i) = f_i at
every node determines the coefficients in closed form from the segment
difference quotients s_k = (f_{k+1} - f_k) / (v_{k+1} - v_k) and the
wrap-around quotient s = (f_n + f_1) / (v_n - v_1):

    a_1 = (s + s_1) / 2
    a_i = (s_i - s_{i-1}) / 2      for interior i
    a_n = (s - s_{n-1}) / 2

so construction is O(n) with no linear-system solve.  On [v_1, v_n] the
result is the piecewise-linear interpolant through (v_i, f_i); outside
that span the absolute-value form keeps slope +/- sum(a_i), which is why
callers that map whole level ranges clamp their input first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpan, LengthMismatch, NonIncreasingNodes

# Gaps below this fraction of the node span divide into the closed-form
# coefficients, so they are rejected up front.
MIN_RELATIVE_GAP = 1e-9


def _as_nodes(nodes) -> np.ndarray:
    v = np.array(nodes, dtype=np.float64, copy=True).ravel()
    if v.size < 2:
        raise ValueError(f"need at least two nodes, got {v.size}")
    span = float(v[-1] - v[0])
    if span == 0.0:
        raise DegenerateSpan(f"first and last node coincide at {v[0]}")
    gaps = np.diff(v)
    bad = np.flatnonzero(gaps < MIN_RELATIVE_GAP * abs(span))
    if bad.size:
        k = int(bad[0])
        raise NonIncreasingNodes(
            f"nodes must be strictly increasing; gap {k}..{k + 1} is {gaps[k]:g} "
            f"(span {span:g})"
        )
    return v


def _as_targets(values, n: int, range_max: float) -> np.ndarray:
    f = np.array(values, dtype=np.float64, copy=True).ravel()
    if f.size != n:
        raise LengthMismatch(f"{f.size} target values for {n} nodes")
    if np.any(f < 0.0) or np.any(f > range_max):
        raise ValueError(f"target values must lie in [0, {range_max}]")
    return f


@dataclass(frozen=True, eq=False)
class PolygonalFunction:
    """A piecewise-linear transform: nodes, target values, coefficients.

    Instances built by solve_coefficients satisfy f(v_i) == f_i up to
    floating-point rounding; the dataclass itself validates only shapes,
    node ordering, and the target range.  Note that targets inside
    [0, range_max] keep f inside that range between nodes only when they
    are monotone; non-monotone targets are allowed but may overshoot, so
    consumers that need range containment clamp the output.  Immutable
    and safe to share across threads.
    """

    nodes: np.ndarray
    values: np.ndarray
    coeffs: np.ndarray
    range_max: float

    def __post_init__(self):
        v = _as_nodes(self.nodes)
        if self.range_max <= 0:
            raise ValueError(f"range_max must be positive, got {self.range_max}")
        f = _as_targets(self.values, v.size, self.range_max)
        a = np.array(self.coeffs, dtype=np.float64, copy=True).ravel()
        if a.size != v.size:
            raise LengthMismatch(f"{a.size} coefficients for {v.size} nodes")
        for arr, name in ((v, "nodes"), (f, "values"), (a, "coeffs")):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "range_max", float(self.range_max))

    def evaluate(self, v):
        """Return sum_i a_i * |v - v_i| for scalar or array v (no clamping)."""
        v_arr = np.asarray(v, dtype=np.float64)
        out = np.abs(v_arr[..., None] - self.nodes) @ self.coeffs
        if v_arr.ndim == 0:
            return float(out)
        return out

    __call__ = evaluate

    def segment_slopes(self) -> np.ndarray:
        """Slopes of the n-1 segments between consecutive nodes.

        Segment k carries slope sum(a_j, j <= k) - sum(a_j, j > k), which
        equals the difference quotient (f_{k+1} - f_k) / (v_{k+1} - v_k).
        """
        partial = np.cumsum(self.coeffs)
        return 2.0 * partial[:-1] - partial[-1]


def solve_coefficients(nodes, values, range_max) -> PolygonalFunction:
    """Solve for the coefficients that make f pass through every (v_i, f_i).

    Raises NonIncreasingNodes, DegenerateSpan, or LengthMismatch on bad
    input; otherwise the solution is exact and deterministic.
    """
    v = _as_nodes(nodes)
    f = _as_targets(values, v.size, float(range_max))
    slopes = np.diff(f) / np.diff(v)
    total = (f[-1] + f[0]) / (v[-1] - v[0])  # equals sum of all coefficients
    a = np.empty_like(v)
    a[0] = 0.5 * (total + slopes[0])
    a[1:-1] = 0.5 * (slopes[1:] - slopes[:-1])
    a[-1] = 0.5 * (total - slopes[-1])
    return PolygonalFunction(nodes=v, values=f, coeffs=a, range_max=float(range_max))

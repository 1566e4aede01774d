"""Gray-level image enhancement with histogram-driven piecewise-linear tone curves.

The transform is a continuous piecewise-linear function written in the
absolute-value basis f(v) = sum_i a_i * |v - v_i|.  Node abscissas are
placed from the image's own gray-level statistics by a fixed-point
iteration (each interior node moves to the mean level of the pixels
between its neighbours), target values are spread evenly over the output
range, the coefficients follow in closed form, and pixels are mapped
through a lookup table.
"""

from .curve import PolygonalFunction, solve_coefficients
from .errors import (
    ConstantImage,
    DegenerateRange,
    DegenerateSpan,
    EmptyImage,
    IndexOutOfRange,
    LengthMismatch,
    MalformedHeader,
    NodeOrderViolation,
    NonIncreasingNodes,
    PolytoneError,
    SampleOutOfRange,
    TooFewDistinctLevels,
    TruncatedPayload,
)
from .export import export_function_csv, export_histogram_csv
from .image import GrayImage, Histogram, histogram
from .nodes import (
    BinStats,
    NodeSolverConfig,
    NodeSolverResult,
    bin_stats,
    init_nodes,
    iterate_nodes,
    min_max_levels,
    solve_nodes,
)
from .pgm import PgmHeader, parse_header, read_pgm, write_pgm
from .pipeline import (
    EnhanceConfig,
    EnhanceReport,
    LookupTable,
    build_lut,
    build_transform,
    enhance,
    equidistant_targets,
)

__version__ = "0.1.0"

__all__ = [
    "BinStats",
    "ConstantImage",
    "DegenerateRange",
    "DegenerateSpan",
    "EmptyImage",
    "EnhanceConfig",
    "EnhanceReport",
    "GrayImage",
    "Histogram",
    "IndexOutOfRange",
    "LengthMismatch",
    "LookupTable",
    "MalformedHeader",
    "NodeOrderViolation",
    "NodeSolverConfig",
    "NodeSolverResult",
    "NonIncreasingNodes",
    "PgmHeader",
    "PolygonalFunction",
    "PolytoneError",
    "SampleOutOfRange",
    "TooFewDistinctLevels",
    "TruncatedPayload",
    "bin_stats",
    "build_lut",
    "build_transform",
    "enhance",
    "equidistant_targets",
    "export_function_csv",
    "export_histogram_csv",
    "histogram",
    "init_nodes",
    "iterate_nodes",
    "min_max_levels",
    "parse_header",
    "read_pgm",
    "solve_coefficients",
    "solve_nodes",
    "write_pgm",
]

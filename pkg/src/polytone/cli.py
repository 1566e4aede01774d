"""Command-line front end: enhance images, inspect nodes, export plot data.

Exit codes: 0 success, 2 usage error, 3 I/O or format error, 4 degenerate
image (no level spread, or too few distinct levels for n), 5 node order
violation during iteration.  Output files are written to a temporary name
and renamed into place, so a failing run never leaves a partial file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from .errors import (
    ConstantImage,
    EmptyImage,
    MalformedHeader,
    NodeOrderViolation,
    SampleOutOfRange,
    TooFewDistinctLevels,
    TruncatedPayload,
)
from .export import export_function_csv, export_histogram_csv
from .image import GrayImage, histogram
from .nodes import NodeSolverConfig, NodeSolverResult, solve_nodes
from .pgm import read_pgm, write_pgm
from .pipeline import EnhanceConfig, build_transform, enhance

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_DEGENERATE = 4
EXIT_NODE_ORDER = 5

_FORMAT_ERRORS = (MalformedHeader, TruncatedPayload, SampleOutOfRange, EmptyImage)
_DEGENERATE_ERRORS = (ConstantImage, TooFewDistinctLevels)


def _write_atomic(path: str, data: bytes) -> None:
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    fd, tmp_name = tempfile.mkstemp(dir=directory, prefix=target.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp_name, target)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        _write_atomic(output, text.encode("ascii"))


def _load_image(path: str) -> GrayImage:
    return read_pgm(Path(path).read_bytes())


def _node_result_json(result: NodeSolverResult) -> str:
    payload = {
        "nodes": [float(x) for x in result.nodes],
        "iterations": result.iterations,
        "converged": result.converged,
        "trace": [[float(x) for x in step] for step in result.trace],
        "warnings": list(result.warnings),
    }
    return json.dumps(payload, indent=2) + "\n"


def _cmd_enhance(args: argparse.Namespace) -> int:
    image = _load_image(args.input)
    config = EnhanceConfig(
        n=args.n, epsilon=args.epsilon, max_iterations=args.max_iterations
    )
    out_image, report = enhance(image, config)
    _write_atomic(args.output, write_pgm(out_image))
    if args.report:
        payload = {
            "nodes": [float(x) for x in report.function.nodes],
            "targets": [float(x) for x in report.function.values],
            "coefficients": [float(x) for x in report.function.coeffs],
            "iterations": report.node_result.iterations,
            "converged": report.node_result.converged,
            "warnings": list(report.node_result.warnings),
            "lut_checksum": report.lut_checksum,
        }
        _write_atomic(args.report, (json.dumps(payload, indent=2) + "\n").encode("ascii"))
    if args.function_csv:
        _write_atomic(
            args.function_csv,
            export_function_csv(report.function, args.samples).encode("ascii"),
        )
    if args.histogram_csv:
        # histogram of the input image, for before/after comparisons
        _write_atomic(
            args.histogram_csv, export_histogram_csv(histogram(image)).encode("ascii")
        )
    return EXIT_OK


def _cmd_nodes(args: argparse.Namespace) -> int:
    image = _load_image(args.input)
    result = solve_nodes(
        image,
        NodeSolverConfig(
            n=args.n, epsilon=args.epsilon, max_iterations=args.max_iterations
        ),
    )
    _emit(_node_result_json(result), args.output)
    return EXIT_OK


def _cmd_function(args: argparse.Namespace) -> int:
    image = _load_image(args.input)
    config = EnhanceConfig(
        n=args.n, epsilon=args.epsilon, max_iterations=args.max_iterations
    )
    poly, _ = build_transform(image, config)
    _emit(export_function_csv(poly, args.samples), args.output)
    return EXIT_OK


def _cmd_histogram(args: argparse.Namespace) -> int:
    image = _load_image(args.input)
    _emit(export_histogram_csv(histogram(image)), args.output)
    return EXIT_OK


def _add_solver_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=4, help="node count (default 4)")
    parser.add_argument(
        "--epsilon", type=float, default=0.5,
        help="iteration stopping threshold in gray levels (default 0.5)",
    )
    parser.add_argument(
        "--max-iterations", type=int, default=100,
        help="iteration cap (default 100)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polytone",
        description="Gray-level enhancement with histogram-driven piecewise-linear tone curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enhance", help="enhance a PGM image")
    p.add_argument("input", help="input PGM (P2 or P5)")
    p.add_argument("output", help="output PGM (written as P5)")
    _add_solver_flags(p)
    p.add_argument("--report", help="write a JSON report of nodes/coefficients")
    p.add_argument("--function-csv", help="write the transform curve as CSV")
    p.add_argument("--histogram-csv", help="write the input histogram as CSV")
    p.add_argument(
        "--samples", type=int, default=256,
        help="sample count for --function-csv (default 256)",
    )
    p.set_defaults(func=_cmd_enhance)

    p = sub.add_parser("nodes", help="print the solved nodes as JSON")
    p.add_argument("input", help="input PGM (P2 or P5)")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    _add_solver_flags(p)
    p.set_defaults(func=_cmd_nodes)

    p = sub.add_parser("function", help="print the transform curve as CSV")
    p.add_argument("input", help="input PGM (P2 or P5)")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    _add_solver_flags(p)
    p.add_argument(
        "--samples", type=int, default=256, help="sample count (default 256)"
    )
    p.set_defaults(func=_cmd_function)

    p = sub.add_parser("histogram", help="print the level histogram as CSV")
    p.add_argument("input", help="input PGM (P2 or P5)")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_histogram)

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if getattr(args, "n", 2) < 2:
        parser.error(f"--n must be >= 2, got {args.n}")
    if not getattr(args, "epsilon", 1.0) > 0:
        parser.error(f"--epsilon must be positive, got {args.epsilon}")
    if getattr(args, "max_iterations", 1) < 1:
        parser.error(f"--max-iterations must be >= 1, got {args.max_iterations}")
    if getattr(args, "samples", 2) < 2:
        parser.error(f"--samples must be >= 2, got {args.samples}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.func(args)
    except _FORMAT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO
    except _DEGENERATE_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DEGENERATE
    except NodeOrderViolation as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NODE_ORDER


if __name__ == "__main__":
    sys.exit(main())

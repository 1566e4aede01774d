#!/usr/bin/env python3
"""Enhance the synthetic corpus and dump every artifact for inspection.

For each image and node count this writes the enhanced PGM, a JSON report,
the transform-curve CSV, and before/after histogram CSVs, then prints a
summary table of nodes, coefficients, and iteration counts.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

import numpy as np

from polytone import synth
from polytone.errors import PolytoneError
from polytone.export import export_function_csv, export_histogram_csv
from polytone.image import histogram
from polytone.pgm import write_pgm
from polytone.pipeline import EnhanceConfig, enhance

CORPUS = {
    "dark": synth.dark_image,
    "bright": synth.bright_image,
    "bimodal": synth.bimodal_image,
    "uniform": lambda: synth.uniform_image(rows=256),
    "two_level": synth.two_level_image,
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path, help="directory for the artifacts")
    parser.add_argument(
        "--nodes", type=int, nargs="+", default=[3, 4], help="node counts to run"
    )
    parser.add_argument("--samples", type=int, default=256, help="curve CSV samples")
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    rows = []
    for name, make in CORPUS.items():
        image = make()
        (args.outdir / f"{name}.pgm").write_bytes(write_pgm(image))
        (args.outdir / f"{name}_histogram.csv").write_text(
            export_histogram_csv(histogram(image))
        )
        for n in args.nodes:
            tag = f"{name}_n{n}"
            try:
                out, report = enhance(image, EnhanceConfig(n=n))
            except PolytoneError as err:
                rows.append((tag, f"failed: {err}"))
                continue
            (args.outdir / f"{tag}.pgm").write_bytes(write_pgm(out))
            (args.outdir / f"{tag}_function.csv").write_text(
                export_function_csv(report.function, args.samples)
            )
            (args.outdir / f"{tag}_histogram.csv").write_text(
                export_histogram_csv(histogram(out))
            )
            (args.outdir / f"{tag}_report.json").write_text(
                json.dumps(
                    {
                        "nodes": report.function.nodes.tolist(),
                        "targets": report.function.values.tolist(),
                        "coefficients": report.function.coeffs.tolist(),
                        "iterations": report.node_result.iterations,
                        "converged": report.node_result.converged,
                        "warnings": list(report.node_result.warnings),
                        "lut_checksum": report.lut_checksum,
                        "timing_ms": report.timing,
                    },
                    indent=2,
                )
                + "\n"
            )
            summary = (
                f"nodes={np.round(report.function.nodes, 2).tolist()} "
                f"coeffs={np.round(report.function.coeffs, 3).tolist()} "
                f"iters={report.node_result.iterations} "
                f"converged={report.node_result.converged}"
            )
            rows.append((tag, summary))

    width = max(len(tag) for tag, _ in rows)
    for tag, summary in rows:
        print(f"{tag:<{width}}  {summary}")
    print(f"\nartifacts in {args.outdir}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

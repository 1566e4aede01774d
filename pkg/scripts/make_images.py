#!/usr/bin/env python3
"""Write the synthetic experiment corpus as PGM files."""

from __future__ import annotations

import argparse
from pathlib import Path

from polytone import synth
from polytone.pgm import write_pgm

GENERATORS = {
    "dark": synth.dark_image,
    "bright": synth.bright_image,
    "bimodal": synth.bimodal_image,
    "uniform": lambda: synth.uniform_image(rows=256),
    "two_level": synth.two_level_image,
    "ramp": lambda: synth.ramp_image(255),
    "const": synth.constant_image,
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path, help="directory for the PGM files")
    parser.add_argument(
        "--format", choices=("P2", "P5"), default="P5", help="PGM flavor (default P5)"
    )
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for name, make in GENERATORS.items():
        path = args.outdir / f"{name}.pgm"
        path.write_bytes(write_pgm(make(), fmt=args.format))
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Reader and writer for portable graymaps, plain (P2) and raw (P5).

Header comments (# to end of line) are accepted anywhere tokens are,
including inside a plain raster.  Raw rasters use one byte per sample for
maxval < 256 and two big-endian bytes otherwise.  Error classification:
MalformedHeader for structural problems (bad magic, non-numeric fields or
sample tokens, maxval outside 1..65535), TruncatedPayload when samples
run out early, SampleOutOfRange for numeric samples above maxval.  Bytes
trailing a complete raster are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import MalformedHeader, SampleOutOfRange, TruncatedPayload
from .image import GrayImage

_WHITESPACE = b" \t\r\n\v\f"
_COMMENT = re.compile(rb"#[^\n]*")


@dataclass(frozen=True)
class PgmHeader:
    magic: str  # "P2" or "P5"
    width: int
    height: int
    maxval: int


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        c = data[pos]
        if c in _WHITESPACE:
            pos += 1
        elif c == ord("#"):
            end = data.find(b"\n", pos)
            pos = n if end < 0 else end + 1
        else:
            start = pos
            while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
                pos += 1
            return data[start:pos], pos
    raise MalformedHeader("unexpected end of data while reading header")


def parse_header(data: bytes) -> tuple[PgmHeader, int]:
    """Parse the header; return it with the offset of the first raster byte."""
    magic, pos = _next_token(data, 0)
    if magic not in (b"P2", b"P5"):
        raise MalformedHeader(f"unsupported magic {magic!r}; expected P2 or P5")
    fields = []
    for name in ("width", "height", "maxval"):
        token, pos = _next_token(data, pos)
        try:
            fields.append(int(token))
        except ValueError:
            raise MalformedHeader(f"non-numeric {name} field: {token!r}") from None
    width, height, maxval = fields
    if width <= 0 or height <= 0:
        raise MalformedHeader(f"dimensions must be positive, got {width}x{height}")
    if not 1 <= maxval <= 65535:
        raise MalformedHeader(f"maxval must be in 1..65535, got {maxval}")
    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise MalformedHeader("missing whitespace between maxval and raster")
        pos += 1
    return PgmHeader(magic.decode("ascii"), width, height, maxval), pos


def _read_plain_samples(data: bytes, pos: int, count: int) -> np.ndarray:
    tokens = _COMMENT.sub(b" ", data[pos:]).split()
    if len(tokens) < count:
        raise TruncatedPayload(f"expected {count} samples, found {len(tokens)}")
    try:
        values = [int(t) for t in tokens[:count]]
    except ValueError as err:
        raise MalformedHeader(f"non-numeric sample token: {err}") from None
    return np.asarray(values, dtype=np.int64)


def _read_raw_samples(data: bytes, pos: int, count: int, maxval: int) -> np.ndarray:
    bytes_per_sample = 1 if maxval < 256 else 2
    need = count * bytes_per_sample
    payload = data[pos : pos + need]
    if len(payload) < need:
        raise TruncatedPayload(f"expected {need} raster bytes, found {len(payload)}")
    dtype = np.uint8 if bytes_per_sample == 1 else np.dtype(">u2")
    return np.frombuffer(payload, dtype=dtype).astype(np.int64)


def read_pgm(data: bytes) -> GrayImage:
    """Decode P2 or P5 bytes into a GrayImage with max_level = maxval."""
    header, pos = parse_header(data)
    count = header.width * header.height
    if header.magic == "P2":
        samples = _read_plain_samples(data, pos, count)
    else:
        samples = _read_raw_samples(data, pos, count, header.maxval)
    if int(samples.min()) < 0 or int(samples.max()) > header.maxval:
        raise SampleOutOfRange(
            f"samples must lie in [0, {header.maxval}], got "
            f"[{int(samples.min())}, {int(samples.max())}]"
        )
    return GrayImage(
        width=header.width,
        height=header.height,
        levels=samples,
        max_level=header.maxval,
    )


def write_pgm(image: GrayImage, fmt: str = "P5") -> bytes:
    """Encode as raw P5 (default) or plain P2; read_pgm round-trips both."""
    if fmt not in ("P2", "P5"):
        raise ValueError(f"format must be 'P2' or 'P5', got {fmt!r}")
    header = f"{fmt}\n{image.width} {image.height}\n{image.max_level}\n".encode("ascii")
    if fmt == "P5":
        dtype = np.uint8 if image.max_level < 256 else np.dtype(">u2")
        return header + image.levels.astype(dtype).tobytes()
    # plain format: keep every raster line at 70 characters or fewer
    lines: list[str] = []
    line = ""
    for value in image.levels.tolist():
        token = str(value)
        if line and len(line) + 1 + len(token) > 70:
            lines.append(line)
            line = token
        else:
            line = token if not line else f"{line} {token}"
    if line:
        lines.append(line)
    return header + "\n".join(lines).encode("ascii") + b"\n"

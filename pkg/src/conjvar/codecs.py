"""File codecs: binary PGM (P5, 8-bit) images and numeric CSV tables."""

from __future__ import annotations

import csv
import io
from pathlib import Path

import numpy as np

from .errors import FormatError

FLOAT_FMT = "%.17g"


# -- PGM -----------------------------------------------------------------


def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """First ``count`` whitespace-separated header tokens, skipping # comments.

    Returns the tokens and the offset of the raster, which starts after exactly
    one whitespace byte following the last token.
    """
    tokens = []
    i = 0
    n = len(data)
    while len(tokens) < count:
        while i < n and data[i:i + 1].isspace():
            i += 1
        if i < n and data[i:i + 1] == b"#":
            while i < n and data[i:i + 1] not in (b"\n", b"\r"):
                i += 1
            continue
        start = i
        while i < n and not data[i:i + 1].isspace() and data[i:i + 1] != b"#":
            i += 1
        if start == i:
            raise FormatError("truncated PGM header")
        tokens.append(data[start:i])
    if i >= n:
        raise FormatError("PGM header is not followed by raster data")
    return tokens, i + 1


def decode_pgm(data: bytes) -> np.ndarray:
    """Parse a binary 8-bit PGM into a (height, width) uint8 array."""
    if not data.startswith(b"P5"):
        raise FormatError("not a binary PGM (expected magic 'P5')")
    tokens, offset = _header_tokens(data, 4)
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError:
        raise FormatError(f"bad PGM header {tokens!r}") from None
    if width <= 0 or height <= 0:
        raise FormatError(f"bad PGM size {width}x{height}")
    if not 0 < maxval < 256:
        raise FormatError(f"only 8-bit PGM is supported, got maxval {maxval}")
    raster = data[offset:offset + width * height]
    if len(raster) != width * height:
        raise FormatError(f"PGM raster too short: {len(raster)} of {width * height} bytes")
    img = np.frombuffer(raster, dtype=np.uint8).reshape(height, width).copy()
    if maxval != 255:
        img = np.round(img.astype(float) * (255.0 / maxval)).astype(np.uint8)
    return img


def encode_pgm(img: np.ndarray) -> bytes:
    img = np.asarray(img)
    if img.ndim != 2 or img.dtype != np.uint8:
        raise ValueError(f"expected a 2-d uint8 array, got {img.dtype} {img.shape}")
    h, w = img.shape
    return b"P5\n%d %d\n255\n" % (w, h) + img.tobytes()


def read_pgm(path) -> np.ndarray:
    return decode_pgm(Path(path).read_bytes())


def write_pgm(path, img: np.ndarray) -> None:
    Path(path).write_bytes(encode_pgm(img))


def to_unit(img: np.ndarray) -> np.ndarray:
    """uint8 raster to floats in [0, 1]."""
    return np.asarray(img, dtype=float) / 255.0


def to_bytes(img: np.ndarray) -> np.ndarray:
    """Floats in [0, 1] to uint8 by rounding. to_bytes(to_unit(b)) == b."""
    return np.round(np.clip(img, 0.0, 1.0) * 255.0).astype(np.uint8)


# -- CSV -----------------------------------------------------------------


def format_float(x: float) -> str:
    return FLOAT_FMT % x


def write_csv(path, header: list[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(format_float(v) if isinstance(v, (float, np.floating)) else v for v in row)


def read_csv(path) -> tuple[list[str], list[list[str]]]:
    """Header row and raw string rows."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if len(rows) < 2:
        raise FormatError(f"{path}: expected a header row and at least one data row")
    return [c.strip() for c in rows[0]], rows[1:]


def read_numeric_csv(path) -> tuple[list[str], np.ndarray]:
    """Header and a 2-d float array; every row must have as many fields as the header."""
    header, rows = read_csv(path)
    out = np.empty((len(rows), len(header)))
    for i, row in enumerate(rows):
        if len(row) != len(header):
            raise FormatError(f"{path}: row {i + 2} has {len(row)} fields, header has {len(header)}")
        try:
            out[i] = [float(c) for c in row]
        except ValueError:
            raise FormatError(f"{path}: non-numeric value in row {i + 2}") from None
    return header, out


def read_vector_csv(path) -> np.ndarray:
    """First column of a numeric CSV."""
    _, data = read_numeric_csv(path)
    return data[:, 0].copy()

"""Canvas normalization, outline rasterization, and the overlap term.

Two faces are first brought onto a shared canvas (the componentwise max
of their image sizes, each input stretched per axis). Outlines are then
filled into binary masks by even-odd counting at pixel centers, and the
overlap score is read off the masks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .features import FaceInput
from .geometry import Point, polygon_is_simple

# the default raster keeps the longer canvas side at least this many pixels
RASTER_TARGET = 512


class AlphaMode(str, Enum):
    """How the overlap score is read from the two masks.

    LITERAL walks the subtraction branches: the first non-empty leftover
    divided by its own mask's area, and 1.0 when both leftovers are
    empty. It grows with mismatch except at exact identity, and it is
    order-sensitive. COMPLEMENT is intersection over union: symmetric,
    1.0 only for identical masks, 0.0 for disjoint ones.
    """

    LITERAL = "literal"
    COMPLEMENT = "complement"


@dataclass(frozen=True)
class Canvas:
    """Shared pixel frame for a pair, with the per-input scale factors."""

    width: int
    height: int
    scale_a: tuple[float, float] = (1.0, 1.0)
    scale_b: tuple[float, float] = (1.0, 1.0)

    def __post_init__(self) -> None:
        for label, value in (("canvas width", self.width), ("canvas height", self.height)):
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise ValueError(f"{label} must be a positive integer, got {value!r}")
        for sx, sy in (self.scale_a, self.scale_b):
            if not (sx > 0 and sy > 0):
                raise ValueError("scale factors must be positive")


@dataclass(frozen=True, eq=False)
class BinaryMask:
    """Boolean raster of one outline; True marks pixels inside."""

    bits: np.ndarray
    scale: int = 1

    def __post_init__(self) -> None:
        bits = np.asarray(self.bits, dtype=bool)
        if bits.ndim != 2 or bits.shape[0] < 1 or bits.shape[1] < 1:
            raise ValueError(f"mask bits must be a non-empty 2D array, got shape {bits.shape}")
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    @property
    def area(self) -> int:
        return int(np.count_nonzero(self.bits))


def _rescaled(face: FaceInput, sx: float, sy: float, width: int, height: int) -> FaceInput:
    def scale_point(pt: Point) -> Point:
        # clamp away float dust so edge coordinates stay inside the canvas
        x = min(max(pt[0] * sx, 0.0), float(width))
        y = min(max(pt[1] * sy, 0.0), float(height))
        return (x, y)

    return FaceInput(
        id=face.id,
        image_width=width,
        image_height=height,
        landmarks={name: scale_point(pt) for name, pt in face.landmarks.items()},
        outline=tuple(scale_point(pt) for pt in face.outline),
    )


def normalize_pair(face_a: FaceInput, face_b: FaceInput) -> tuple[Canvas, FaceInput, FaceInput]:
    """Bring two faces onto one canvas sized to the larger input.

    Each input's landmarks and outline are multiplied per axis by
    canvas_size / its_size, so a smaller capture is stretched up while
    the larger one is untouched. No further alignment is applied: the
    shared canvas coordinates are the common frame.
    """
    width = max(face_a.image_width, face_b.image_width)
    height = max(face_a.image_height, face_b.image_height)
    scale_a = (width / face_a.image_width, height / face_a.image_height)
    scale_b = (width / face_b.image_width, height / face_b.image_height)
    canvas = Canvas(width, height, scale_a, scale_b)
    norm_a = _rescaled(face_a, scale_a[0], scale_a[1], width, height)
    norm_b = _rescaled(face_b, scale_b[0], scale_b[1], width, height)
    return canvas, norm_a, norm_b


def default_resolution_scale(canvas: Canvas) -> int:
    """Smallest integer upscale that puts the longer canvas side at RASTER_TARGET."""
    return max(1, math.ceil(RASTER_TARGET / max(canvas.width, canvas.height)))


def rasterize(
    outline, canvas: Canvas, resolution_scale: int | None = None
) -> BinaryMask:
    """Fill an outline into a binary mask over the canvas.

    A pixel is inside iff its center is inside the polygon under the
    even-odd rule; ``resolution_scale`` multiplies the canvas resolution
    (mask is width*s by height*s pixels). Deterministic for fixed input.
    """
    if resolution_scale is None:
        scale = default_resolution_scale(canvas)
    else:
        if not isinstance(resolution_scale, int) or isinstance(resolution_scale, bool) \
                or resolution_scale < 1:
            raise ValueError(f"resolution_scale must be a positive integer, got {resolution_scale!r}")
        scale = resolution_scale

    pts = np.asarray(outline, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 3:
        raise ValueError("outline needs at least 3 vertices")
    if not np.all(np.isfinite(pts)):
        raise ValueError("outline has non-finite coordinates")
    if not polygon_is_simple(pts):
        raise ValueError("outline is self-intersecting")

    wpx = canvas.width * scale
    hpx = canvas.height * scale

    x1, y1 = pts[:, 0], pts[:, 1]
    x2, y2 = np.roll(x1, -1), np.roll(y1, -1)

    # row centers in canvas units; an edge crosses a row iff min_y <= yc < max_y
    # (half-open, so a vertex shared by two edges is counted exactly once)
    yc = (np.arange(hpx, dtype=float) + 0.5) / scale
    ylo = np.minimum(y1, y2)[:, None]
    yhi = np.maximum(y1, y2)[:, None]
    crossing = (ylo <= yc[None, :]) & (yc[None, :] < yhi)

    dy = (y2 - y1)[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (yc[None, :] - y1[:, None]) / dy
        xc = x1[:, None] + t * (x2 - x1)[:, None]

    edge_idx, row_idx = np.nonzero(crossing)
    xs = xc[edge_idx, row_idx]
    # first pixel whose center lies at or right of the crossing
    col = np.ceil(xs * scale - 0.5).astype(np.int64)
    np.clip(col, 0, wpx, out=col)

    # parity of crossings left of each center decides inside/outside
    delta = np.zeros((hpx, wpx + 1), dtype=np.int32)
    np.add.at(delta, (row_idx, col), 1)
    bits = (np.cumsum(delta, axis=1)[:, :wpx] & 1).astype(bool)
    return BinaryMask(bits, scale)


def _check_same_shape(a: BinaryMask, b: BinaryMask) -> None:
    if a.bits.shape != b.bits.shape:
        raise ValueError(f"mask dimensions differ: {a.bits.shape} vs {b.bits.shape}")


def mask_subtract(a: BinaryMask, b: BinaryMask) -> BinaryMask:
    """Set difference a minus b."""
    _check_same_shape(a, b)
    return BinaryMask(a.bits & ~b.bits, a.scale)


def mask_intersect(a: BinaryMask, b: BinaryMask) -> BinaryMask:
    _check_same_shape(a, b)
    return BinaryMask(a.bits & b.bits, a.scale)


def mask_union(a: BinaryMask, b: BinaryMask) -> BinaryMask:
    _check_same_shape(a, b)
    return BinaryMask(a.bits | b.bits, a.scale)


def alpha_from_masks(a: BinaryMask, b: BinaryMask, mode: AlphaMode = AlphaMode.COMPLEMENT) -> float:
    """Overlap score of two equally sized masks, in [0, 1]."""
    _check_same_shape(a, b)
    area_a = a.area
    area_b = b.area
    if area_a == 0 or area_b == 0:
        raise ValueError("mask has zero area; outline did not cover any pixel center")
    if mode is AlphaMode.LITERAL:
        leftover_a = int(np.count_nonzero(a.bits & ~b.bits))
        if leftover_a != 0:
            return leftover_a / area_a
        leftover_b = int(np.count_nonzero(b.bits & ~a.bits))
        if leftover_b != 0:
            return leftover_b / area_b
        return 1.0
    if mode is AlphaMode.COMPLEMENT:
        inter = int(np.count_nonzero(a.bits & b.bits))
        union = area_a + area_b - inter
        return inter / union
    raise ValueError(f"unknown alpha mode {mode!r}")


def compute_alpha(
    face_a: FaceInput,
    face_b: FaceInput,
    mode: AlphaMode = AlphaMode.COMPLEMENT,
    resolution_scale: int | None = None,
) -> float:
    """Normalize two faces, rasterize their outlines, and score the overlap."""
    canvas, norm_a, norm_b = normalize_pair(face_a, face_b)
    mask_a = rasterize(norm_a.outline, canvas, resolution_scale)
    mask_b = rasterize(norm_b.outline, canvas, resolution_scale)
    return alpha_from_masks(mask_a, mask_b, mode)

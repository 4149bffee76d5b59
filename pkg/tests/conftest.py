"""Shared builders for hand-made faces used across the test modules."""

from __future__ import annotations

import math

from fuzzyface import FaceInput

# landmark layout as fractions of the image, valid on any canvas size
LANDMARK_FRACTIONS = {
    "eye_left": (0.35, 0.40),
    "eye_right": (0.65, 0.40),
    "nose_base": (0.50, 0.55),
    "mouth_top": (0.50, 0.62),
    "mouth_left": (0.40, 0.66),
    "mouth_right": (0.60, 0.66),
    "ear_left": (0.15, 0.42),
    "ear_right": (0.85, 0.42),
    "brow_left_inner": (0.42, 0.33),
    "brow_left_outer": (0.28, 0.34),
    "brow_right_inner": (0.58, 0.33),
    "brow_right_outer": (0.72, 0.34),
    "chin": (0.50, 0.85),
}


def standard_landmarks(width: int = 100, height: int = 100) -> dict:
    return {name: (fx * width, fy * height) for name, (fx, fy) in LANDMARK_FRACTIONS.items()}


def make_face(face_id: str = "f", width: int = 100, height: int = 100,
              landmarks: dict | None = None, outline=None) -> FaceInput:
    if landmarks is None:
        landmarks = standard_landmarks(width, height)
    if outline is None:
        outline = (
            (0.1 * width, 0.1 * height),
            (0.9 * width, 0.1 * height),
            (0.9 * width, 0.9 * height),
            (0.1 * width, 0.9 * height),
        )
    return FaceInput(
        id=face_id,
        image_width=width,
        image_height=height,
        landmarks=landmarks,
        outline=outline,
    )


def scaled_face(face: FaceInput, c: float) -> FaceInput:
    """Scale dimensions and every coordinate by c; c must keep dims integral."""
    w = face.image_width * c
    h = face.image_height * c
    assert w == int(w) and h == int(h), "pick c so scaled dimensions stay integral"
    return FaceInput(
        id=face.id,
        image_width=int(w),
        image_height=int(h),
        landmarks={name: (x * c, y * c) for name, (x, y) in face.landmarks.items()},
        outline=tuple((x * c, y * c) for x, y in face.outline),
    )


def raster_scale_for(*faces: FaceInput, target: int = 2048) -> int:
    """Resolution multiplier putting the pair's canvas at or above target pixels."""
    canvas = max(max(f.image_width, f.image_height) for f in faces)
    return max(1, math.ceil(target / canvas))

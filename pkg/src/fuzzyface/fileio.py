"""JSON file formats: face inputs, pair manifests, calibrated models.

All writes are whole-file atomic (temp file then rename) and all floats
are serialized with shortest round-trip precision, so loading a saved
document reproduces the exact values.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .calibration import CalibrationState
from .features import FaceInput
from .fuzzymath import MembershipKernel, kernel_from_dict, kernel_to_dict
from .silhouette import AlphaMode

FACE_FILE_VERSION = 1
MANIFEST_VERSION = 1

PAIR_LABELS = ("genuine", "impostor")


class FaceFileError(ValueError):
    """A document failed to parse or validate; the message names the field."""


def dump_json(data) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def atomic_write_text(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _load_document(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FaceFileError(f"{path}: cannot read file ({exc})") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FaceFileError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise FaceFileError(f"{path}: top-level value must be an object")
    return doc


def _check_version(path, doc: dict, expected: int) -> None:
    version = doc.get("version")
    if version != expected:
        raise FaceFileError(f"{path}: unsupported version {version!r} (expected {expected})")


def face_to_dict(face: FaceInput) -> dict:
    return {
        "version": FACE_FILE_VERSION,
        "id": face.id,
        "image": {"width": face.image_width, "height": face.image_height},
        "landmarks": {name: [x, y] for name, (x, y) in sorted(face.landmarks.items())},
        "outline": [[x, y] for x, y in face.outline],
    }


def load_face(path) -> FaceInput:
    """Read and validate one face document."""
    doc = _load_document(path)
    _check_version(path, doc, FACE_FILE_VERSION)
    for key in ("id", "image", "landmarks", "outline"):
        if key not in doc:
            raise FaceFileError(f"{path}: missing field '{key}'")
    image = doc["image"]
    if not isinstance(image, dict) or "width" not in image or "height" not in image:
        raise FaceFileError(f"{path}: field 'image' must be an object with 'width' and 'height'")
    if not isinstance(doc["landmarks"], dict):
        raise FaceFileError(f"{path}: field 'landmarks' must be an object")
    if not isinstance(doc["outline"], list):
        raise FaceFileError(f"{path}: field 'outline' must be a list")
    try:
        return FaceInput(
            id=doc["id"],
            image_width=image["width"],
            image_height=image["height"],
            landmarks=doc["landmarks"],
            outline=doc["outline"],
        )
    except ValueError as exc:
        raise FaceFileError(f"{path}: {exc}") from None


def save_face(face: FaceInput, path) -> None:
    atomic_write_text(path, dump_json(face_to_dict(face)))


@dataclass(frozen=True)
class ManifestPair:
    """One labeled comparison; paths are resolved against the manifest dir."""

    a: Path
    b: Path
    label: str

    def __post_init__(self) -> None:
        if self.label not in PAIR_LABELS:
            raise ValueError(f"pair label must be one of {PAIR_LABELS}, got {self.label!r}")


def load_manifest(path) -> list[ManifestPair]:
    """Read a pair manifest; entry order is preserved (calibration depends on it)."""
    doc = _load_document(path)
    _check_version(path, doc, MANIFEST_VERSION)
    if "pairs" not in doc or not isinstance(doc["pairs"], list):
        raise FaceFileError(f"{path}: missing or malformed field 'pairs'")
    base = Path(path).parent
    pairs = []
    for i, entry in enumerate(doc["pairs"]):
        if not isinstance(entry, dict) or not {"a", "b", "label"} <= set(entry):
            raise FaceFileError(f"{path}: pair {i} must have fields 'a', 'b' and 'label'")
        try:
            pairs.append(
                ManifestPair(base / entry["a"], base / entry["b"], entry["label"])
            )
        except (ValueError, TypeError) as exc:
            raise FaceFileError(f"{path}: pair {i}: {exc}") from None
    return pairs


def manifest_to_dict(entries) -> dict:
    """Entries are (a_name, b_name, label) triples, kept in order."""
    return {
        "version": MANIFEST_VERSION,
        "pairs": [{"a": str(a), "b": str(b), "label": label} for a, b, label in entries],
    }


def save_manifest(entries, path) -> None:
    atomic_write_text(path, dump_json(manifest_to_dict(entries)))


@dataclass(frozen=True)
class CalibratedModel:
    """A trained mixing weight plus the scoring context it was trained under."""

    k: float
    k1: float
    k2: float
    n: int
    skipped: int
    alpha_mode: AlphaMode
    kernel: MembershipKernel

    @classmethod
    def from_state(
        cls, state: CalibrationState, alpha_mode: AlphaMode, kernel: MembershipKernel
    ) -> "CalibratedModel":
        return cls(
            k=state.finalize(),
            k1=state.k1,
            k2=state.k2,
            n=state.n,
            skipped=state.skipped,
            alpha_mode=alpha_mode,
            kernel=kernel,
        )

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "k1": self.k1,
            "k2": self.k2,
            "n": self.n,
            "skipped": self.skipped,
            "alpha_mode": self.alpha_mode.value,
            "kernel": kernel_to_dict(self.kernel),
        }


def load_model(path) -> CalibratedModel:
    doc = _load_document(path)
    for key in ("k", "k1", "k2", "n", "skipped", "alpha_mode", "kernel"):
        if key not in doc:
            raise FaceFileError(f"{path}: missing field '{key}'")
    try:
        model = CalibratedModel(
            k=float(doc["k"]),
            k1=float(doc["k1"]),
            k2=float(doc["k2"]),
            n=int(doc["n"]),
            skipped=int(doc["skipped"]),
            alpha_mode=AlphaMode(doc["alpha_mode"]),
            kernel=kernel_from_dict(doc["kernel"]),
        )
    except ValueError as exc:
        raise FaceFileError(f"{path}: {exc}") from None
    if not (0.0 <= model.k <= 1.0):
        raise FaceFileError(f"{path}: field 'k' must lie in [0, 1], got {model.k!r}")
    return model


def save_model(model: CalibratedModel, path) -> None:
    atomic_write_text(path, dump_json(model.to_dict()))

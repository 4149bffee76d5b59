"""Seeded synthetic face populations and the verification benchmark.

The generator starts from one fixed frontal template (landmarks plus a
face oval truncated at ear height and closed across the ear line) and
layers Gaussian jitter on it: identity-level offsets make distinct
people, capture-level offsets make repeat photos of the same person.
Outline vertices jitter radially (toward or away from the face center)
so the polygon stays simple. All draws come from one seeded generator,
so a config reproduces its population bit for bit.

The evaluator scores every same-identity pair as genuine and every
cross-identity pair as impostor, then reports score statistics, the ROC
curve, the exact rank AUC, and the accuracy at a decision threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .features import REQUIRED_LANDMARKS, FaceInput, extract_features
from .scoring import ScoringConfig, compare

_TEMPLATE_WIDTH = 512
_TEMPLATE_HEIGHT = 512
_FACE_CENTER = (256.0, 265.0)
_FACE_RADII = (62.0, 77.0)
_EAR_LINE_Y = 251.0
_OUTLINE_VERTEX_COUNT = 31
_MAX_DRAW_ATTEMPTS = 100

_TEMPLATE_LANDMARKS: dict[str, tuple[float, float]] = {
    "eye_left": (232.0, 253.0),
    "eye_right": (280.0, 253.0),
    "nose_base": (256.0, 286.0),
    "mouth_top": (256.0, 303.0),
    "mouth_left": (237.0, 307.0),
    "mouth_right": (275.0, 307.0),
    "ear_left": (196.0, 251.0),
    "ear_right": (316.0, 251.0),
    "brow_left_inner": (241.0, 238.0),
    "brow_left_outer": (218.0, 240.0),
    "brow_right_inner": (271.0, 238.0),
    "brow_right_outer": (294.0, 240.0),
    "chin": (256.0, 337.0),
}


def _template_outline() -> np.ndarray:
    """Face oval arc from ear to ear around the chin; closure runs across the ear line."""
    cx, cy = _FACE_CENTER
    rx, ry = _FACE_RADII
    start = math.asin((_EAR_LINE_Y - cy) / ry)
    end = math.pi - start
    angles = np.linspace(start, end, _OUTLINE_VERTEX_COUNT)
    return np.column_stack((cx + rx * np.cos(angles), cy + ry * np.sin(angles)))


_TEMPLATE_OUTLINE = _template_outline()
_OUTLINE_RADIAL = (_TEMPLATE_OUTLINE - np.asarray(_FACE_CENTER)) / np.linalg.norm(
    _TEMPLATE_OUTLINE - np.asarray(_FACE_CENTER), axis=1, keepdims=True
)


class GenerationError(ValueError):
    """Raised when jitter keeps producing invalid faces (sigmas too large)."""


@dataclass(frozen=True)
class PopulationConfig:
    """Size, noise scales (pixels), and seed of a synthetic population."""

    identity_count: int
    captures_per_identity: int
    identity_sigma: float = 6.0
    capture_sigma: float = 1.0
    outline_sigma: float = 2.0
    seed: int = 0

    def __post_init__(self) -> None:
        for label, value in (
            ("identity_count", self.identity_count),
            ("captures_per_identity", self.captures_per_identity),
        ):
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"{label} must be a positive integer, got {value!r}")
        for label, value in (
            ("identity_sigma", self.identity_sigma),
            ("capture_sigma", self.capture_sigma),
            ("outline_sigma", self.outline_sigma),
        ):
            if not (math.isfinite(value) and value >= 0.0):
                raise ValueError(f"{label} must be a non-negative real, got {value!r}")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool) or self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed!r}")


@dataclass(frozen=True)
class LabeledFace:
    """A generated face tagged with the identity it belongs to."""

    identity: str
    face: FaceInput


def _build_face(face_id: str, landmarks: np.ndarray, outline: np.ndarray) -> FaceInput:
    face = FaceInput(
        id=face_id,
        image_width=_TEMPLATE_WIDTH,
        image_height=_TEMPLATE_HEIGHT,
        landmarks={
            name: (float(x), float(y))
            for name, (x, y) in zip(REQUIRED_LANDMARKS, landmarks)
        },
        outline=tuple((float(x), float(y)) for x, y in outline),
    )
    extract_features(face)  # degenerate landmark draws are invalid too
    return face


_TEMPLATE_LANDMARK_ARRAY = np.asarray(
    [_TEMPLATE_LANDMARKS[name] for name in REQUIRED_LANDMARKS], dtype=float
)


def generate_population(config: PopulationConfig) -> list[LabeledFace]:
    """Draw identity_count * captures_per_identity valid faces, reproducibly.

    Identity geometry jitters both the landmarks (per coordinate, by
    identity_sigma) and the outline (radially, by identity_sigma plus
    outline_sigma); captures re-jitter both by capture_sigma, so zero
    capture noise makes every capture of an identity identical. Invalid
    draws are resampled a bounded number of times.
    """
    rng = np.random.default_rng(config.seed)
    population: list[LabeledFace] = []

    for i in range(config.identity_count):
        identity = f"id{i:03d}"
        for attempt in range(_MAX_DRAW_ATTEMPTS):
            base_landmarks = _TEMPLATE_LANDMARK_ARRAY + rng.normal(
                0.0, config.identity_sigma, size=_TEMPLATE_LANDMARK_ARRAY.shape
            )
            radial = rng.normal(0.0, config.identity_sigma, size=_OUTLINE_VERTEX_COUNT)
            radial += rng.normal(0.0, config.outline_sigma, size=_OUTLINE_VERTEX_COUNT)
            base_outline = _TEMPLATE_OUTLINE + radial[:, None] * _OUTLINE_RADIAL
            try:
                _build_face(f"{identity}_probe", base_landmarks, base_outline)
                break
            except ValueError:
                continue
        else:
            raise GenerationError(
                f"could not draw a valid identity after {_MAX_DRAW_ATTEMPTS} attempts; "
                "sigmas are too large for the canvas"
            )

        for j in range(config.captures_per_identity):
            face_id = f"{identity}_c{j:02d}"
            for attempt in range(_MAX_DRAW_ATTEMPTS):
                landmarks = base_landmarks + rng.normal(
                    0.0, config.capture_sigma, size=base_landmarks.shape
                )
                radial = rng.normal(0.0, config.capture_sigma, size=_OUTLINE_VERTEX_COUNT)
                outline = base_outline + radial[:, None] * _OUTLINE_RADIAL
                try:
                    face = _build_face(face_id, landmarks, outline)
                    break
                except ValueError:
                    continue
            else:
                raise GenerationError(
                    f"could not draw a valid capture after {_MAX_DRAW_ATTEMPTS} attempts; "
                    "sigmas are too large for the canvas"
                )
            population.append(LabeledFace(identity, face))

    return population


@dataclass(frozen=True)
class EvalReport:
    """Verification statistics over all genuine and impostor pairs."""

    genuine_scores: tuple[float, ...]
    impostor_scores: tuple[float, ...]
    genuine_mean: float
    genuine_stddev: float
    impostor_mean: float
    impostor_stddev: float
    roc_points: tuple[tuple[float, float], ...]
    auc: float
    threshold: float
    accuracy_at_threshold: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.auc <= 1.0):
            raise ValueError(f"auc must lie in [0, 1], got {self.auc!r}")
        for (f0, t0), (f1, t1) in zip(self.roc_points, self.roc_points[1:]):
            if f1 < f0 or t1 < t0:
                raise ValueError("roc points must be monotone non-decreasing")

    def to_dict(self) -> dict:
        return {
            "genuine_scores": list(self.genuine_scores),
            "impostor_scores": list(self.impostor_scores),
            "genuine_mean": self.genuine_mean,
            "genuine_stddev": self.genuine_stddev,
            "impostor_mean": self.impostor_mean,
            "impostor_stddev": self.impostor_stddev,
            "roc_points": [list(p) for p in self.roc_points],
            "auc": self.auc,
            "threshold": self.threshold,
            "accuracy_at_threshold": self.accuracy_at_threshold,
        }


def rank_auc(genuine_scores, impostor_scores) -> float:
    """Probability a random genuine score outranks a random impostor score.

    Computed exactly via midranks; ties count one half.
    """
    g = np.asarray(genuine_scores, dtype=float)
    m = np.asarray(impostor_scores, dtype=float)
    if g.size == 0 or m.size == 0:
        raise ValueError("rank AUC needs both genuine and impostor scores")
    scores = np.concatenate([g, m])
    uniques, inverse, counts = np.unique(scores, return_inverse=True, return_counts=True)
    first_rank = np.concatenate([[0], np.cumsum(counts)[:-1]])
    midrank = first_rank + (counts + 1) / 2.0  # 1-based average rank of each tie group
    ranks = midrank[inverse]
    u = ranks[: g.size].sum() - g.size * (g.size + 1) / 2.0
    return float(u / (g.size * m.size))


def roc_points(genuine_scores, impostor_scores) -> list[tuple[float, float]]:
    """(false-accept-rate, true-accept-rate) at every distinct threshold.

    Acceptance is score >= threshold; the curve starts at (0, 0) and
    ends at (1, 1).
    """
    g = np.sort(np.asarray(genuine_scores, dtype=float))
    m = np.sort(np.asarray(impostor_scores, dtype=float))
    if g.size == 0 or m.size == 0:
        raise ValueError("ROC needs both genuine and impostor scores")
    thresholds = np.unique(np.concatenate([g, m]))[::-1]
    tar = (g.size - np.searchsorted(g, thresholds, side="left")) / g.size
    far = (m.size - np.searchsorted(m, thresholds, side="left")) / m.size
    return [(0.0, 0.0)] + list(zip(far.tolist(), tar.tolist()))


def report_from_scores(genuine_scores, impostor_scores, threshold: float) -> EvalReport:
    """Assemble the verification report from already computed score lists."""
    g = np.asarray(list(genuine_scores), dtype=float)
    m = np.asarray(list(impostor_scores), dtype=float)
    if g.size == 0:
        raise ValueError("no genuine scores to evaluate")
    if m.size == 0:
        raise ValueError("no impostor scores to evaluate")
    if not (0.0 <= threshold <= 100.0):
        raise ValueError(f"threshold must lie in [0, 100], got {threshold!r}")
    accepted = int(np.count_nonzero(g >= threshold))
    rejected = int(np.count_nonzero(m < threshold))
    return EvalReport(
        genuine_scores=tuple(g.tolist()),
        impostor_scores=tuple(m.tolist()),
        genuine_mean=float(g.mean()),
        genuine_stddev=float(g.std()),
        impostor_mean=float(m.mean()),
        impostor_stddev=float(m.std()),
        roc_points=tuple(roc_points(g, m)),
        auc=rank_auc(g, m),
        threshold=float(threshold),
        accuracy_at_threshold=(accepted + rejected) / (g.size + m.size),
    )


def evaluate(
    population: list[LabeledFace],
    config: ScoringConfig | None = None,
    threshold: float = 90.0,
) -> EvalReport:
    """Score every pair in the population and report verification quality.

    Same-identity pairs are genuine, cross-identity pairs impostor; the
    population must contain at least one of each.
    """
    if config is None:
        config = ScoringConfig()
    genuine = []
    impostor = []
    for i in range(len(population)):
        for j in range(i + 1, len(population)):
            a, b = population[i], population[j]
            score = compare(a.face, b.face, config).similarity
            if a.identity == b.identity:
                genuine.append(score)
            else:
                impostor.append(score)
    if not genuine:
        raise ValueError("population yields no genuine pairs (need an identity with 2+ captures)")
    if not impostor:
        raise ValueError("population yields no impostor pairs (need 2+ identities)")
    return report_from_scores(genuine, impostor, threshold)

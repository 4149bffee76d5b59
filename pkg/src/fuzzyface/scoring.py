"""End-to-end comparison of two faces into a similarity report.

The pipeline: normalize the pair onto a shared canvas, measure the
canonical features on both, take the ratio entropy of each feature pair,
push it through the membership kernel, average the memberships into the
feature score, rasterize the outlines into the overlap score, and blend
the two with the mixing weight k:

    similarity = 100 * (feature_score * k + alpha * (1 - k))
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from statistics import fmean

from .features import FaceInput, FeaturePair, extract_features, pair_features
from .fuzzymath import BellKernel, MembershipKernel, eval_membership, kernel_to_dict, shannon_entropy
from .silhouette import (
    AlphaMode,
    alpha_from_masks,
    default_resolution_scale,
    normalize_pair,
    rasterize,
)


@dataclass(frozen=True)
class ScoringConfig:
    """Pipeline knobs: mixing weight, overlap mode, kernel, raster density.

    ``resolution_scale`` of None picks the default for the pair's canvas.
    """

    k: float = 0.5
    alpha_mode: AlphaMode = AlphaMode.COMPLEMENT
    kernel: MembershipKernel = field(default_factory=BellKernel)
    resolution_scale: int | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.k) and 0.0 <= self.k <= 1.0):
            raise ValueError(f"mixing weight k must lie in [0, 1], got {self.k!r}")
        if not isinstance(self.alpha_mode, AlphaMode):
            raise ValueError(f"alpha_mode must be an AlphaMode, got {self.alpha_mode!r}")
        rs = self.resolution_scale
        if rs is not None and (not isinstance(rs, int) or isinstance(rs, bool) or rs < 1):
            raise ValueError(f"resolution_scale must be a positive integer or None, got {rs!r}")


@dataclass(frozen=True)
class FeatureRow:
    """Per-feature trace: both measurements, their entropy, its membership."""

    name: str
    a: float
    b: float
    entropy: float
    membership: float


@dataclass(frozen=True)
class MatchReport:
    """Full trace of one comparison; checks its own consistency."""

    a_id: str
    b_id: str
    features: tuple[FeatureRow, ...]
    feature_score: float
    alpha: float
    k: float
    similarity: float
    alpha_mode: AlphaMode
    kernel: MembershipKernel
    resolution_scale: int

    def __post_init__(self) -> None:
        if len(self.features) < 1:
            raise ValueError("a report needs at least one feature row")
        for row in self.features:
            if not (0.0 <= row.entropy <= 1.0 and 0.0 <= row.membership <= 1.0):
                raise ValueError(f"feature row '{row.name}' outside [0, 1]: {row!r}")
        if not (0.0 <= self.feature_score <= 1.0 and 0.0 <= self.alpha <= 1.0):
            raise ValueError("feature_score and alpha must lie in [0, 1]")
        if abs(self.feature_score - fmean(r.membership for r in self.features)) > 1e-12:
            raise ValueError("feature_score does not equal the mean membership")
        expected = 100.0 * (self.feature_score * self.k + self.alpha * (1.0 - self.k))
        if abs(self.similarity - expected) > 1e-9:
            raise ValueError("similarity does not match its own terms")

    @property
    def n(self) -> int:
        return len(self.features)

    def to_dict(self) -> dict:
        return {
            "a": self.a_id,
            "b": self.b_id,
            "n": self.n,
            "features": [
                {
                    "name": row.name,
                    "a": row.a,
                    "b": row.b,
                    "entropy": row.entropy,
                    "membership": row.membership,
                }
                for row in self.features
            ],
            "feature_score": self.feature_score,
            "alpha": self.alpha,
            "k": self.k,
            "similarity": self.similarity,
            "alpha_mode": self.alpha_mode.value,
            "kernel": kernel_to_dict(self.kernel),
            "resolution_scale": self.resolution_scale,
        }


def feature_membership(pair: FeaturePair, kernel: MembershipKernel) -> tuple[float, float]:
    """Entropy of the pair's two values and its kernel membership."""
    entropy = shannon_entropy((pair.a, pair.b))
    return entropy, eval_membership(kernel, entropy)


def mean_membership(memberships) -> float:
    """Arithmetic mean of membership values, each required to be in [0, 1]."""
    values = [float(v) for v in memberships]
    if not values:
        raise ValueError("cannot average an empty membership list")
    for v in values:
        if not (0.0 <= v <= 1.0):
            raise ValueError(f"membership outside [0, 1]: {v!r}")
    return fmean(values)


def similarity_score(feature_score: float, alpha: float, k: float) -> float:
    """Blend the two terms into the 0..100 similarity."""
    for label, value in (("feature_score", feature_score), ("alpha", alpha), ("k", k)):
        if not (math.isfinite(value) and 0.0 <= value <= 1.0):
            raise ValueError(f"{label} must lie in [0, 1], got {value!r}")
    return 100.0 * (feature_score * k + alpha * (1.0 - k))


def compare(face_a: FaceInput, face_b: FaceInput, config: ScoringConfig | None = None) -> MatchReport:
    """Run the full pipeline on two faces.

    Features are measured after canvas normalization, so a genuine pair
    photographed at different resolutions still measures equal and the
    result does not depend on image size. Deterministic for fixed inputs
    and config.
    """
    if config is None:
        config = ScoringConfig()

    canvas, norm_a, norm_b = normalize_pair(face_a, face_b)
    pairs = pair_features(extract_features(norm_a), extract_features(norm_b))

    rows = []
    for pair in pairs:
        entropy, membership = feature_membership(pair, config.kernel)
        rows.append(FeatureRow(pair.name, pair.a, pair.b, entropy, membership))
    feature_score = mean_membership([row.membership for row in rows])

    scale = config.resolution_scale
    if scale is None:
        scale = default_resolution_scale(canvas)
    mask_a = rasterize(norm_a.outline, canvas, scale)
    mask_b = rasterize(norm_b.outline, canvas, scale)
    alpha = alpha_from_masks(mask_a, mask_b, config.alpha_mode)

    similarity = similarity_score(feature_score, alpha, config.k)
    return MatchReport(
        a_id=face_a.id,
        b_id=face_b.id,
        features=tuple(rows),
        feature_score=feature_score,
        alpha=alpha,
        k=config.k,
        similarity=similarity,
        alpha_mode=config.alpha_mode,
        kernel=config.kernel,
        resolution_scale=scale,
    )

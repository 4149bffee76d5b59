"""Face similarity from landmark-ratio entropy and silhouette overlap."""

from .calibration import (
    CalibrationSample,
    CalibrationState,
    DegenerateSampleError,
    calibrate,
    solve_weight,
)
from .features import (
    CANONICAL_FEATURES,
    REQUIRED_LANDMARKS,
    FaceInput,
    FeaturePair,
    FeatureVector,
    extract_features,
    pair_features,
)
from .fileio import (
    CalibratedModel,
    FaceFileError,
    ManifestPair,
    face_to_dict,
    load_face,
    load_manifest,
    load_model,
    save_face,
    save_manifest,
    save_model,
)
from .fuzzymath import (
    DEFAULT_KERNELS,
    BellKernel,
    MembershipKernel,
    TrapezoidKernel,
    TriangleKernel,
    eval_membership,
    kernel_from_dict,
    kernel_to_dict,
    shannon_entropy,
)
from .scoring import (
    FeatureRow,
    MatchReport,
    ScoringConfig,
    compare,
    feature_membership,
    mean_membership,
    similarity_score,
)
from .silhouette import (
    AlphaMode,
    BinaryMask,
    Canvas,
    alpha_from_masks,
    compute_alpha,
    default_resolution_scale,
    mask_intersect,
    mask_subtract,
    mask_union,
    normalize_pair,
    rasterize,
)
from .synthbench import (
    EvalReport,
    GenerationError,
    LabeledFace,
    PopulationConfig,
    evaluate,
    generate_population,
    rank_auc,
    report_from_scores,
    roc_points,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaMode",
    "BellKernel",
    "BinaryMask",
    "CANONICAL_FEATURES",
    "CalibratedModel",
    "CalibrationSample",
    "CalibrationState",
    "Canvas",
    "DEFAULT_KERNELS",
    "DegenerateSampleError",
    "EvalReport",
    "FaceFileError",
    "FaceInput",
    "FeaturePair",
    "FeatureRow",
    "FeatureVector",
    "GenerationError",
    "LabeledFace",
    "ManifestPair",
    "MatchReport",
    "MembershipKernel",
    "PopulationConfig",
    "REQUIRED_LANDMARKS",
    "ScoringConfig",
    "TrapezoidKernel",
    "TriangleKernel",
    "alpha_from_masks",
    "calibrate",
    "compare",
    "compute_alpha",
    "default_resolution_scale",
    "eval_membership",
    "evaluate",
    "extract_features",
    "face_to_dict",
    "feature_membership",
    "generate_population",
    "kernel_from_dict",
    "kernel_to_dict",
    "load_face",
    "load_manifest",
    "load_model",
    "mask_intersect",
    "mask_subtract",
    "mask_union",
    "mean_membership",
    "normalize_pair",
    "pair_features",
    "rank_auc",
    "rasterize",
    "report_from_scores",
    "roc_points",
    "save_face",
    "save_manifest",
    "save_model",
    "shannon_entropy",
    "similarity_score",
    "solve_weight",
    "__version__",
]

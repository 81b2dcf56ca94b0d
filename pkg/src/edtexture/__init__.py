"""edtexture: texture classification with distance-transform preprocessing.

The pipeline: threshold a grayscale image at every level i in a range,
apply an exact Euclidean distance transform to each binary mask, extract
texture features from the quantized distance image, concatenate them with
the original image's features, and measure whether cross-validated
recognition improves over the original features alone.
"""

from .classify import CvReport, cross_validate, gnb_fit, gnb_predict, knn1_predict, stratified_kfold, zscore_fit_apply
from .descriptors import (
    FEATURE_LENGTHS,
    GaborBank,
    fourier_features,
    gabor_bank,
    gabor_features,
    glcm_features,
    gldm_features,
    lbp,
    lbpv,
    riu2_map,
)
from .harness import (
    SweepConfig,
    SweepResult,
    SynthSpec,
    combined_vector,
    distance_image,
    extract_features,
    generate_synthetic,
    run_sweep,
    write_curve,
    write_report,
)
from .image_io import LabeledDataset, load_dataset, load_image, to_grayscale, write_pgm
from .transform import DistanceMap, binarize, edt_bruteforce, edt_exact, quantize_distance

__version__ = "0.1.0"

__all__ = [
    "CvReport",
    "DistanceMap",
    "FEATURE_LENGTHS",
    "GaborBank",
    "LabeledDataset",
    "SweepConfig",
    "SweepResult",
    "SynthSpec",
    "binarize",
    "combined_vector",
    "cross_validate",
    "distance_image",
    "edt_bruteforce",
    "edt_exact",
    "extract_features",
    "fourier_features",
    "gabor_bank",
    "gabor_features",
    "generate_synthetic",
    "glcm_features",
    "gldm_features",
    "gnb_fit",
    "gnb_predict",
    "knn1_predict",
    "lbp",
    "lbpv",
    "load_dataset",
    "load_image",
    "quantize_distance",
    "riu2_map",
    "run_sweep",
    "stratified_kfold",
    "to_grayscale",
    "write_curve",
    "write_pgm",
    "write_report",
    "zscore_fit_apply",
]

"""Benchmark orchestration: threshold sweep, feature concatenation,
cross-validated evaluation, synthetic datasets, and CSV reporting.

A sweep evaluates, for every threshold i in a range, the features of the
quantized distance image of ``binarize(img, i)``, either alone (edt_only)
or concatenated after the original-image features (combined), against the
original-image baseline. Original-image features are computed once and
reused across iterations; that cache is semantically invisible.
"""

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from . import descriptors
from .classify import CvReport, cross_validate
from .descriptors import FEATURE_LENGTHS
from .image_io import LabeledDataset
from .transform import (
    binarize,
    edt_exact,
    edt_exact_batch,
    quantize_distance,
    quantize_distance_batch,
)

DESCRIPTOR_NAMES = tuple(FEATURE_LENGTHS)
CLASSIFIER_NAMES = ("knn", "nb")
MODES = ("baseline", "edt_only", "combined")


@dataclass
class SweepConfig:
    descriptor: str
    classifier: str
    mode: str = "combined"
    i_min: int = 1
    i_max: int = 150
    folds: int = 10
    seed: int = 42
    glcm_levels: int = 32
    gabor_kernel_side: int = 31
    threads: int = 1

    def validate(self):
        if self.descriptor not in DESCRIPTOR_NAMES:
            raise ValueError(f"unknown descriptor {self.descriptor!r}")
        if self.classifier not in CLASSIFIER_NAMES:
            raise ValueError(f"unknown classifier {self.classifier!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if not 0 <= self.i_min <= self.i_max <= 255:
            raise ValueError(
                f"need 0 <= i_min <= i_max <= 255, got [{self.i_min}, {self.i_max}]"
            )
        if self.folds < 2:
            raise ValueError(f"folds must be >= 2, got {self.folds}")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")


@dataclass
class SweepResult:
    descriptor: str
    classifier: str
    mode: str
    baseline: CvReport
    per_iteration: list = field(default_factory=list)  # [(i, CvReport)]
    best_i: int = None

    def best_report(self):
        if self.best_i is None:
            return None
        return dict(self.per_iteration)[self.best_i]


@dataclass
class SynthSpec:
    """Recipe for a synthetic labeled texture set.

    ``classes`` is a list of (kind, params) pairs; kinds are checkerboard,
    sinusoid, correlated_noise and gradient_noise. Per-image parameter
    jitter is drawn from a single seeded generator, so an identical spec
    reproduces an identical dataset bit for bit.
    """

    classes: list
    per_class: int = 40
    size: int = 64
    seed: int = 42


DEFAULT_SYNTH_CLASSES = [
    ("checkerboard", {"period": 5}),
    ("sinusoid", {"frequency": 0.15, "angle": 0.6}),
    ("correlated_noise", {"blur_radius": 2}),
    ("gradient_noise", {"direction": 0.8, "noise_amplitude": 60.0}),
]

EXTRA_SYNTH_CLASSES = [
    ("checkerboard", {"period": 9}),
    ("sinusoid", {"frequency": 0.32, "angle": 2.1}),
    ("correlated_noise", {"blur_radius": 5}),
    ("gradient_noise", {"direction": 2.3, "noise_amplitude": 25.0}),
]


def extract_features(img, descriptor, glcm_levels=32, gabor_bank=None):
    """Compute one descriptor's feature vector for one image."""
    if descriptor == "lbp":
        return descriptors.lbp(img)
    if descriptor == "lbpv":
        return descriptors.lbpv(img)
    if descriptor == "glcm":
        return descriptors.glcm_features(img, levels=glcm_levels)
    if descriptor == "gldm":
        return descriptors.gldm_features(img)
    if descriptor == "fourier":
        return descriptors.fourier_features(img)
    if descriptor == "gabor":
        return descriptors.gabor_features(img, bank=gabor_bank)
    raise ValueError(f"unknown descriptor {descriptor!r}")


def distance_image(img, threshold):
    """The 8-bit quantized exact distance map of binarize(img, threshold)."""
    return quantize_distance(edt_exact(binarize(img, threshold)))


def combined_vector(img, threshold, descriptor, glcm_levels=32, gabor_bank=None):
    """Original-image features followed by distance-image features."""
    original = extract_features(img, descriptor, glcm_levels, gabor_bank)
    transformed = extract_features(
        distance_image(img, threshold), descriptor, glcm_levels, gabor_bank
    )
    return np.concatenate([original, transformed])


def generate_synthetic(spec):
    """Render a SynthSpec into a LabeledDataset of uint8 images."""
    if len(spec.classes) < 2:
        raise ValueError("need at least 2 synthetic classes")
    if spec.per_class < 2:
        raise ValueError("need at least 2 images per class")
    if spec.size < 8:
        raise ValueError("synthetic images must be at least 8x8")
    rng = np.random.default_rng(spec.seed)
    images = []
    labels = []
    names = []
    for label, (kind, params) in enumerate(spec.classes):
        names.append(f"{label:02d}_{kind}")
        for _ in range(spec.per_class):
            images.append(_render_texture(kind, params, spec.size, rng))
            labels.append(label)
    return LabeledDataset(images=images, labels=np.array(labels), class_names=names)


def _render_texture(kind, params, size, rng):
    y, x = np.mgrid[0:size, 0:size].astype(np.float64)
    if kind == "checkerboard":
        period = int(params["period"])
        low = int(rng.integers(10, 80))
        high = int(rng.integers(170, 245))
        oy = int(rng.integers(0, period))
        ox = int(rng.integers(0, period))
        cells = ((y.astype(np.int64) + oy) // period + (x.astype(np.int64) + ox) // period) % 2
        return np.where(cells == 1, high, low).astype(np.uint8)
    if kind == "sinusoid":
        freq = params["frequency"] * rng.uniform(0.9, 1.1)
        angle = params["angle"] + rng.uniform(-0.1, 0.1)
        phase = rng.uniform(0.0, 2.0 * np.pi)
        amp = rng.uniform(80.0, 120.0)
        wave = np.sin(2.0 * np.pi * freq * (x * np.cos(angle) + y * np.sin(angle)) + phase)
        return _to_uint8(127.5 + amp * wave)
    if kind == "correlated_noise":
        radius = int(params["blur_radius"])
        noise = rng.uniform(0.0, 255.0, size=(size, size))
        blurred = _box_blur(noise, radius)
        lo, hi = blurred.min(), blurred.max()
        return _to_uint8(255.0 * (blurred - lo) / (hi - lo) if hi > lo else blurred * 0)
    if kind == "gradient_noise":
        angle = params["direction"] + rng.uniform(-0.15, 0.15)
        amp = float(params["noise_amplitude"])
        ramp = x * np.cos(angle) + y * np.sin(angle)
        lo, hi = ramp.min(), ramp.max()
        base = 255.0 * (ramp - lo) / (hi - lo) if hi > lo else ramp * 0
        return _to_uint8(base + rng.uniform(-amp, amp, size=(size, size)))
    raise ValueError(f"unknown synthetic texture kind {kind!r}")


def _to_uint8(arr):
    return np.clip(np.floor(arr + 0.5), 0, 255).astype(np.uint8)


def _box_blur(arr, radius):
    """Separable box mean with edge padding; window side 2*radius + 1."""
    if radius < 1:
        return arr
    k = 2 * radius + 1
    for axis in (0, 1):
        pad = [(0, 0), (0, 0)]
        pad[axis] = (radius + 1, radius)
        c = np.cumsum(np.pad(arr, pad, mode="edge"), axis=axis)
        if axis == 0:
            arr = (c[k:, :] - c[:-k, :]) / k
        else:
            arr = (c[:, k:] - c[:, :-k]) / k
    return arr


# Worker state for the process pool; populated once per worker so the
# per-iteration tasks only carry the threshold.
_WORK = {}


def _init_worker(images, originals, config):
    _WORK["images"] = images
    _WORK["originals"] = originals
    _WORK["config"] = config
    _WORK["bank"] = (
        descriptors.gabor_bank(kernel_side=config.gabor_kernel_side)
        if config.descriptor == "gabor"
        else None
    )


def _distance_images(images, threshold):
    """Quantized distance maps for every image at one threshold.

    Same-shaped images are transformed as one stack (the distance values
    are identical to per-image edt_exact; only the batching differs).
    """
    shapes = {img.shape for img in images}
    if len(shapes) == 1:
        masks = np.stack([binarize(img, threshold) for img in images])
        sq, _ = edt_exact_batch(masks)
        return list(quantize_distance_batch(sq))
    return [distance_image(img, threshold) for img in images]


def _iteration_features(threshold):
    cfg = _WORK["config"]
    transformed = np.vstack(
        [
            extract_features(dist, cfg.descriptor, cfg.glcm_levels, _WORK["bank"])
            for dist in _distance_images(_WORK["images"], threshold)
        ]
    )
    if cfg.mode == "combined":
        return np.hstack([_WORK["originals"], transformed])
    return transformed


def _eval_iteration(args):
    threshold, labels = args
    cfg = _WORK["config"]
    features = _iteration_features(threshold)
    report = cross_validate(features, labels, cfg.classifier, k=cfg.folds, seed=cfg.seed)
    return threshold, report.fold_accuracies


def run_sweep(dataset, config):
    """Run the configured benchmark over a labeled dataset.

    Returns a SweepResult holding the baseline report (original features
    only) and, for edt_only/combined modes, one report per threshold in
    [i_min, i_max] plus the best iteration (highest mean accuracy,
    smallest i on ties). Deterministic for a given config at any thread
    count.
    """
    config.validate()
    if len(dataset) == 0:
        raise ValueError("empty dataset")

    bank = (
        descriptors.gabor_bank(kernel_side=config.gabor_kernel_side)
        if config.descriptor == "gabor"
        else None
    )
    originals = np.vstack(
        [
            extract_features(img, config.descriptor, config.glcm_levels, bank)
            for img in dataset.images
        ]
    )
    baseline = cross_validate(
        originals, dataset.labels, config.classifier, k=config.folds, seed=config.seed
    )
    result = SweepResult(
        descriptor=config.descriptor,
        classifier=config.classifier,
        mode=config.mode,
        baseline=baseline,
    )
    if config.mode == "baseline":
        return result

    thresholds = list(range(config.i_min, config.i_max + 1))
    tasks = [(t, dataset.labels) for t in thresholds]
    if config.threads > 1 and len(thresholds) > 1:
        with ProcessPoolExecutor(
            max_workers=config.threads,
            initializer=_init_worker,
            initargs=(dataset.images, originals, config),
        ) as pool:
            raw = list(pool.map(_eval_iteration, tasks, chunksize=8))
    else:
        _init_worker(dataset.images, originals, config)
        raw = [_eval_iteration(t) for t in tasks]

    raw.sort(key=lambda item: item[0])
    result.per_iteration = [(t, CvReport(acc)) for t, acc in raw]
    best_i, best_mean = None, -1.0
    for t, report in result.per_iteration:
        if report.mean > best_mean:
            best_i, best_mean = t, report.mean
    result.best_i = best_i
    return result


def format_pct(value):
    """Accuracy fraction -> percent string with 2 decimals, half-up.

    0.79625 renders as "79.63".
    """
    return str((Decimal(repr(float(value))) * 100).quantize(Decimal("0.01"), ROUND_HALF_UP))


def write_report(result, path):
    """Write a sweep result as CSV.

    Columns: descriptor,classifier,mode,iteration,acc_mean,acc_std with
    accuracies in percent (2 decimals). The baseline row has an empty
    iteration; sweeps end with a BEST row mirroring "mean (std), best i".
    """
    rows = [["descriptor", "classifier", "mode", "iteration", "acc_mean", "acc_std"]]
    rows.append(
        [
            result.descriptor,
            result.classifier,
            "baseline",
            "",
            format_pct(result.baseline.mean),
            format_pct(result.baseline.std),
        ]
    )
    for t, report in result.per_iteration:
        rows.append(
            [
                result.descriptor,
                result.classifier,
                result.mode,
                str(t),
                format_pct(report.mean),
                format_pct(report.std),
            ]
        )
    if result.best_i is not None:
        best = result.best_report()
        rows.append(
            [
                result.descriptor,
                result.classifier,
                "BEST",
                str(result.best_i),
                format_pct(best.mean),
                format_pct(best.std),
            ]
        )
    _write_csv(rows, path)


def write_curve(result, path):
    """Dump (iteration, mean accuracy) pairs for external plotting."""
    rows = [["iteration", "acc_mean"]]
    for t, report in result.per_iteration:
        rows.append([str(t), format_pct(report.mean)])
    _write_csv(rows, path)


def _write_csv(rows, path):
    try:
        with open(path, "w", newline="\n") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerows(rows)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc

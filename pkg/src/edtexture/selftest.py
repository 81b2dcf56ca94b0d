"""Built-in oracle-equivalence and invariant battery.

Runs a condensed version of the test suite without any test framework so
a deployed install can verify itself (`edtexture selftest`). Each check
prints one PASS/FAIL line; the battery succeeds only if every check does.
"""

import numpy as np

from . import descriptors, reference
from .classify import cross_validate
from .harness import DEFAULT_SYNTH_CLASSES, SynthSpec, generate_synthetic
from .transform import binarize, edt_bruteforce, edt_exact


def _random_gray(rng, h, w):
    return rng.integers(0, 256, size=(h, w), dtype=np.uint8)


def check_edt_oracle(rng, rounds=120):
    for _ in range(rounds):
        h = int(rng.integers(1, 25))
        w = int(rng.integers(1, 25))
        density = rng.uniform(0.01, 0.99)
        mask = rng.random((h, w)) < density
        a = edt_exact(mask)
        b = edt_bruteforce(mask)
        if a.foreground_empty != b.foreground_empty:
            return False
        if not np.array_equal(a.sq_dist, b.sq_dist):
            return False
    return True


def check_edt_edge_cases(rng):
    shapes = [(1, 1), (1, 9), (9, 1), (7, 7)]
    for h, w in shapes:
        for mask in (
            np.zeros((h, w), bool),
            np.ones((h, w), bool),
        ):
            a, b = edt_exact(mask), edt_bruteforce(mask)
            if not np.array_equal(a.sq_dist, b.sq_dist):
                return False
            if a.foreground_empty != b.foreground_empty:
                return False
    single = np.zeros((9, 9), bool)
    single[4, 4] = True
    if edt_exact(single).sq_dist[0, 0] != 32:
        return False
    return True


def check_threshold_monotonicity(rng, images=10):
    for _ in range(images):
        img = _random_gray(rng, 12, 12)
        prev = None
        for t in range(256):
            mask = binarize(img, t)
            if prev is not None and (prev & ~mask).any():
                return False
            prev = mask
    return True


def check_descriptor_oracles(rng, images=8):
    for _ in range(images):
        img = _random_gray(rng, 10, 10)
        if not np.allclose(descriptors.lbp(img), reference.lbp_histogram(img), rtol=0, atol=1e-12):
            return False
        if not np.allclose(descriptors.lbpv(img), reference.lbpv_histogram(img), rtol=1e-9, atol=1e-12):
            return False
        if not np.allclose(descriptors.glcm_features(img), reference.glcm_features(img), rtol=1e-9, atol=1e-12):
            return False
        if not np.allclose(descriptors.gldm_features(img), reference.gldm_features(img), rtol=1e-9, atol=1e-12):
            return False
    return True


def check_riu2_partition():
    bins = [descriptors.riu2_map(c) for c in range(256)]
    uniform = sum(1 for b in bins if b <= 8)
    return uniform == 58 and (256 - uniform) == 198


def check_spectral_invariants(rng, images=6):
    for _ in range(images):
        img = _random_gray(rng, 16, 16)
        feats = descriptors.fourier_features(img)
        e_a = feats[:28].reshape(4, 7)
        e_b = feats[28:]
        spectrum = np.fft.fft2(img.astype(np.float64))
        total = (spectrum.real**2 + spectrum.imag**2).sum()
        parseval = img.size * (img.astype(np.float64) ** 2).sum()
        if abs(total - parseval) > 1e-6 * parseval:
            return False
        if np.abs(e_a.sum(axis=1) - e_b).max() > 1e-9:
            return False
        if (np.diff(e_b) < -1e-15).any():
            return False
    return True


def check_gabor_dc(rng):
    bank = descriptors.gabor_bank(kernel_side=15)
    img = np.full((40, 40), 137, dtype=np.uint8)
    return float(descriptors.gabor_features(img, bank).max()) <= 1e-9


def check_classifier_sanity(rng):
    n, dim = 60, 6
    a = rng.normal(0.0, 1.0, size=(n, dim))
    b = rng.normal(10.0, 1.0, size=(n, dim))
    features = np.vstack([a, b])
    labels = np.array([0] * n + [1] * n)
    for clf in ("knn", "nb"):
        report = cross_validate(features, labels, clf, k=5, seed=3)
        if report.mean < 1.0:
            return False
    return True


def check_sweep_determinism(rng):
    from .harness import SweepConfig, run_sweep

    spec = SynthSpec(classes=DEFAULT_SYNTH_CLASSES[:2], per_class=6, size=24, seed=5)
    dataset = generate_synthetic(spec)
    config = SweepConfig(
        descriptor="lbp", classifier="knn", mode="combined", i_min=40, i_max=42, folds=3
    )
    first = run_sweep(dataset, config)
    second = run_sweep(dataset, config)
    if first.baseline.mean != second.baseline.mean or first.best_i != second.best_i:
        return False
    return all(
        ra.mean == rb.mean and np.array_equal(ra.fold_accuracies, rb.fold_accuracies)
        for (_, ra), (_, rb) in zip(first.per_iteration, second.per_iteration)
    )


CHECKS = [
    ("edt matches brute-force oracle on random masks", check_edt_oracle),
    ("edt edge cases (empty/full/single pixel)", check_edt_edge_cases),
    ("binarization threshold monotonicity", check_threshold_monotonicity),
    ("descriptors match naive references", check_descriptor_oracles),
    ("riu2 partition is 58 uniform / 198 non-uniform", check_riu2_partition),
    ("spectral invariants (Parseval, wedge partition)", check_spectral_invariants),
    ("gabor bank has zero DC response", check_gabor_dc),
    ("classifiers separate 10-sigma blobs perfectly", check_classifier_sanity),
    ("sweep is deterministic", check_sweep_determinism),
]


def run_selftest(seed=20240901, out=print):
    """Run every check; returns 0 if all pass, 1 otherwise."""
    failures = 0
    for name, check in CHECKS:
        rng = np.random.default_rng(seed)
        try:
            ok = check(rng) if check.__code__.co_argcount else check()
        except Exception as exc:  # a crash is a failure, not an abort
            ok = False
            out(f"FAIL {name} (raised {type(exc).__name__}: {exc})")
            failures += 1
            continue
        out(f"{'PASS' if ok else 'FAIL'} {name}")
        failures += 0 if ok else 1
    out(f"selftest: {len(CHECKS) - failures}/{len(CHECKS)} checks passed")
    return 0 if failures == 0 else 1

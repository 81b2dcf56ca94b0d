"""Nearest-neighbor and Gaussian naive Bayes classification with
stratified k-fold cross-validation.

All tie-breaks (equidistant neighbors, equal posteriors) resolve to the
lowest index, so every prediction is deterministic.
"""

from dataclasses import dataclass, field

import numpy as np

GNB_VAR_SMOOTHING = 1e-9
ZSCORE_EPS = 1e-12


@dataclass
class CvReport:
    """Per-fold accuracies with their mean and sample standard deviation."""

    fold_accuracies: np.ndarray
    mean: float = field(init=False)
    std: float = field(init=False)

    def __post_init__(self):
        acc = np.asarray(self.fold_accuracies, dtype=np.float64)
        self.fold_accuracies = acc
        self.mean = float(acc.mean())
        # sample std over folds; a single fold has no spread estimate
        self.std = float(acc.std(ddof=1)) if acc.size > 1 else 0.0


@dataclass
class GnbModel:
    """Per-class Gaussian parameters: means, smoothed variances, log priors."""

    means: np.ndarray       # (classes, features)
    variances: np.ndarray   # (classes, features)
    log_priors: np.ndarray  # (classes,)


def zscore_fit_apply(train, test):
    """Standardize columns using statistics of ``train`` only.

    Both matrices are transformed as (x - mu) / (sigma + eps) with the
    per-column mean and population std of the training rows; constant
    training columns map to 0 everywhere (eps guard, no special cases).
    """
    train = np.asarray(train, dtype=np.float64)
    test = np.asarray(test, dtype=np.float64)
    if train.shape[1] != test.shape[1]:
        raise ValueError(
            f"column count mismatch: train has {train.shape[1]}, test has {test.shape[1]}"
        )
    if train.shape[0] < 2:
        raise ValueError("need at least 2 training rows to standardize")
    mu = train.mean(axis=0)
    sigma = train.std(axis=0)
    scale = sigma + ZSCORE_EPS
    train_std = (train - mu) / scale
    test_std = (test - mu) / scale
    dead = sigma == 0
    if dead.any():
        train_std[:, dead] = 0.0
        test_std[:, dead] = 0.0
    return train_std, test_std


def knn1_predict(train, train_labels, query):
    """Label of the training row nearest to ``query`` in Euclidean distance.

    Ties go to the lowest row index.
    """
    train = np.asarray(train, dtype=np.float64)
    if train.shape[0] == 0:
        raise ValueError("empty training set")
    diff = train - np.asarray(query, dtype=np.float64)
    sq = (diff * diff).sum(axis=1)
    return int(np.asarray(train_labels)[int(np.argmin(sq))])


def gnb_fit(train, labels):
    """Fit per-class Gaussian means/variances and empirical log priors.

    Variances are population variances plus 1e-9 times the largest
    per-feature variance of the whole training set, so constant features
    keep finite likelihoods. Every class needs at least 2 rows.
    """
    train = np.asarray(train, dtype=np.float64)
    labels = np.asarray(labels)
    classes = np.unique(labels)
    n_classes = int(classes.max()) + 1
    counts = np.bincount(labels, minlength=n_classes)
    if (counts < 2).any():
        bad = int(np.argmin(counts))
        raise ValueError(
            f"class {bad} has {counts[bad]} sample(s); gnb_fit needs >= 2 per class"
        )

    smoothing = GNB_VAR_SMOOTHING * train.var(axis=0).max()
    means = np.empty((n_classes, train.shape[1]))
    variances = np.empty((n_classes, train.shape[1]))
    for c in range(n_classes):
        rows = train[labels == c]
        means[c] = rows.mean(axis=0)
        variances[c] = rows.var(axis=0) + smoothing
    log_priors = np.log(counts / counts.sum())
    return GnbModel(means=means, variances=variances, log_priors=log_priors)


def gnb_predict(model, query):
    """Class with the highest Gaussian log posterior; ties to lowest index."""
    query = np.asarray(query, dtype=np.float64)
    if query.shape[0] != model.means.shape[1]:
        raise ValueError(
            f"query has {query.shape[0]} features, model expects {model.means.shape[1]}"
        )
    diff = query[None, :] - model.means
    log_lik = -0.5 * (
        np.log(2.0 * np.pi * model.variances) + diff * diff / model.variances
    ).sum(axis=1)
    return int(np.argmax(model.log_priors + log_lik))


def stratified_kfold(labels, k, seed):
    """Split indices into k folds preserving class proportions.

    Each class's indices are shuffled (seeded) and dealt round-robin over
    a fold cursor shared across classes, so per-class counts across folds
    differ by at most 1. Deterministic given (labels, k, seed).
    """
    labels = np.asarray(labels)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    counts = np.bincount(labels)
    if (counts < 2).any():
        bad = int(np.argmin(counts))
        raise ValueError(
            f"class {bad} has {counts[bad]} sample(s); stratification needs >= 2 per class"
        )

    rng = np.random.default_rng(seed)
    folds = [[] for _ in range(k)]
    cursor = 0
    for c in range(counts.size):
        idx = np.flatnonzero(labels == c)
        rng.shuffle(idx)
        for i in idx:
            folds[cursor % k].append(int(i))
            cursor += 1
    if any(len(f) == 0 for f in folds):
        raise ValueError(f"{labels.size} samples cannot fill {k} non-empty folds")
    return [np.array(sorted(f), dtype=np.int64) for f in folds]


def _predict_fold(classifier, train, train_labels, test):
    if classifier == "knn":
        return np.array([knn1_predict(train, train_labels, q) for q in test])
    if classifier == "nb":
        model = gnb_fit(train, train_labels)
        return np.array([gnb_predict(model, q) for q in test])
    raise ValueError(f"unknown classifier {classifier!r} (expected 'knn' or 'nb')")


def cross_validate(features, labels, classifier, k=10, seed=42):
    """Stratified k-fold accuracy of a classifier on a feature matrix.

    Column standardization is fit on the k-1 training folds only, then
    applied to both sides, so no information leaks from the test fold.
    """
    features = np.asarray(features, dtype=np.float64)
    labels = np.asarray(labels)
    if not np.isfinite(features).all():
        raise ValueError("feature matrix contains non-finite values")
    folds = stratified_kfold(labels, k, seed)
    accuracies = np.empty(len(folds))
    for fi, test_idx in enumerate(folds):
        train_idx = np.concatenate([f for fj, f in enumerate(folds) if fj != fi])
        train, test = zscore_fit_apply(features[train_idx], features[test_idx])
        predicted = _predict_fold(classifier, train, labels[train_idx], test)
        accuracies[fi] = float((predicted == labels[test_idx]).mean())
    return CvReport(fold_accuracies=accuracies)

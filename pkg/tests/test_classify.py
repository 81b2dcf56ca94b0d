import numpy as np
import pytest

from edtexture import reference as ref
from edtexture.classify import (
    GnbModel,
    cross_validate,
    gnb_fit,
    gnb_predict,
    knn1_predict,
    stratified_kfold,
    zscore_fit_apply,
)


class TestZscore:
    def test_basic_column(self):
        train, test = zscore_fit_apply(np.array([[1.0], [3.0]]), np.array([[2.0]]))
        assert np.allclose(train.ravel(), [-1.0, 1.0])
        assert abs(test[0, 0]) < 1e-10

    def test_constant_column_zeroed_in_both(self):
        train, test = zscore_fit_apply(np.full((3, 2), 7.0), np.array([[9.0, -4.0]]))
        assert not train.any()
        assert not test.any()

    def test_no_clamping_outside_train_range(self):
        train, test = zscore_fit_apply(np.array([[0.0], [2.0]]), np.array([[10.0]]))
        assert np.isclose(test[0, 0], (10.0 - 1.0) / (1.0 + 1e-12))

    def test_train_stats_exact(self, rng):
        train = rng.normal(3.0, 5.0, size=(40, 6))
        out, _ = zscore_fit_apply(train, train[:3])
        assert np.allclose(out.mean(axis=0), 0.0, atol=1e-12)
        assert np.allclose(out.std(axis=0), 1.0, atol=1e-9)

    def test_column_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            zscore_fit_apply(np.zeros((3, 2)), np.zeros((3, 3)))


class TestKnn1:
    def test_exact_match_row(self, rng):
        train = rng.normal(size=(10, 4))
        labels = rng.integers(0, 3, 10)
        for i in (0, 4, 9):
            assert knn1_predict(train, labels, train[i]) == labels[i]

    def test_tie_breaks_to_lowest_index(self):
        train = np.array([[0.0, 1.0], [0.0, -1.0]])
        assert knn1_predict(train, np.array([1, 0]), np.array([0.0, 0.0])) == 1

    def test_matches_exhaustive_scan(self, rng):
        for _ in range(50):
            train = rng.normal(size=(20, 3))
            labels = rng.integers(0, 4, 20)
            query = rng.normal(size=3)
            assert knn1_predict(train, labels, query) == ref.nearest_neighbor_label(
                train.tolist(), labels.tolist(), query.tolist()
            )

    def test_column_permutation_invariance(self, rng):
        train = rng.normal(size=(15, 5))
        labels = rng.integers(0, 3, 15)
        query = rng.normal(size=5)
        perm = rng.permutation(5)
        assert knn1_predict(train, labels, query) == knn1_predict(
            train[:, perm], labels, query[perm]
        )

    def test_empty_training_set(self):
        with pytest.raises(ValueError, match="empty"):
            knn1_predict(np.zeros((0, 2)), np.array([], dtype=int), np.zeros(2))


class TestGnb:
    def test_mean_and_variance(self):
        model = gnb_fit(np.array([[0.0], [2.0], [5.0], [7.0]]), np.array([0, 0, 1, 1]))
        assert np.isclose(model.means[0, 0], 1.0)
        assert np.isclose(model.variances[0, 0], 1.0, atol=1e-6)  # + tiny smoothing

    def test_priors(self):
        feats = np.arange(30, dtype=float).reshape(30, 1)
        model = gnb_fit(feats, np.repeat([0, 1, 2], 10))
        assert np.allclose(np.exp(model.log_priors), 1 / 3)

    def test_constant_feature_stays_finite(self):
        feats = np.column_stack([np.ones(8), np.arange(8, dtype=float)])
        model = gnb_fit(feats, np.repeat([0, 1], 4))
        assert np.isfinite(model.variances).all()
        assert model.variances.min() > 0
        assert np.isfinite(gnb_predict(model, np.array([1.0, 3.0])))

    def test_class_with_one_sample(self):
        with pytest.raises(ValueError, match=">= 2"):
            gnb_fit(np.zeros((3, 2)), np.array([0, 0, 1]))

    def test_two_class_1d_example(self):
        model = gnb_fit(
            np.array([[-1.0], [1.0], [9.0], [11.0]]), np.array([0, 0, 1, 1])
        )
        assert gnb_predict(model, np.array([0.2])) == 0
        assert gnb_predict(model, np.array([9.8])) == 1

    def test_tie_breaks_to_lowest_class(self):
        model = gnb_fit(
            np.array([[-1.0], [1.0], [-1.0], [1.0]]), np.array([0, 0, 1, 1])
        )
        assert gnb_predict(model, np.array([0.0])) == 0

    def test_agrees_with_log_posterior_oracle(self, rng):
        train = np.vstack([rng.normal(0, 1, (15, 2)), rng.normal(3, 2, (15, 2))])
        labels = np.repeat([0, 1], 15)
        model = gnb_fit(train, labels)
        for _ in range(100):
            q = rng.normal(1.5, 3, size=2)
            post = ref.gaussian_log_posterior(
                q.tolist(), model.means.tolist(), model.variances.tolist(), model.log_priors.tolist()
            )
            assert gnb_predict(model, q) == int(np.argmax(post))

    def test_prior_shift_invariance(self, rng):
        train = rng.normal(size=(20, 3))
        labels = rng.integers(0, 2, 20)
        labels[:2] = [0, 1]
        labels[2:4] = [0, 1]
        model = gnb_fit(train, labels)
        shifted = GnbModel(
            means=model.means, variances=model.variances, log_priors=model.log_priors + 5.0
        )
        for _ in range(30):
            q = rng.normal(size=3)
            assert gnb_predict(model, q) == gnb_predict(shifted, q)

    def test_dimension_mismatch(self):
        model = gnb_fit(np.zeros((4, 2)), np.array([0, 0, 1, 1]))
        with pytest.raises(ValueError, match="features"):
            gnb_predict(model, np.zeros(3))


class TestStratifiedKfold:
    def test_balanced_10x20(self):
        labels = np.repeat(np.arange(10), 20)
        folds = stratified_kfold(labels, 10, seed=42)
        assert len(folds) == 10
        for fold in folds:
            assert len(fold) == 20
            assert np.all(np.bincount(labels[fold], minlength=10) == 2)

    def test_same_seed_identical(self):
        labels = np.repeat(np.arange(4), 13)
        a = stratified_kfold(labels, 5, seed=9)
        b = stratified_kfold(labels, 5, seed=9)
        assert all(np.array_equal(x, y) for x, y in zip(a, b))

    def test_partition(self, rng):
        labels = rng.integers(0, 3, 47)
        labels[:6] = [0, 0, 1, 1, 2, 2]
        folds = stratified_kfold(labels, 4, seed=0)
        joined = np.concatenate(folds)
        assert np.array_equal(np.sort(joined), np.arange(47))

    def test_per_class_counts_differ_by_at_most_one(self, rng):
        labels = np.repeat(np.arange(5), [7, 11, 4, 9, 6])
        folds = stratified_kfold(labels, 3, seed=1)
        for c in range(5):
            per_fold = [int((labels[f] == c).sum()) for f in folds]
            assert max(per_fold) - min(per_fold) <= 1

    def test_class_smaller_than_k_spreads_round_robin(self):
        labels = np.repeat(np.arange(6), 2)
        folds = stratified_kfold(labels, 4, seed=3)
        for c in range(6):
            per_fold = [int((labels[f] == c).sum()) for f in folds]
            assert max(per_fold) <= 1

    def test_k_too_small(self):
        with pytest.raises(ValueError, match=">= 2"):
            stratified_kfold(np.array([0, 0, 1, 1]), 1, seed=0)

    def test_class_below_two_samples(self):
        with pytest.raises(ValueError, match=">= 2"):
            stratified_kfold(np.array([0, 0, 1]), 2, seed=0)

    def test_unfillable_folds(self):
        with pytest.raises(ValueError, match="folds"):
            stratified_kfold(np.array([0, 0, 1, 1]), 10, seed=0)


class TestCrossValidate:
    def test_duplicated_rows_perfect_knn(self, rng):
        base = rng.normal(size=(10, 4))
        feats = np.repeat(base, 2, axis=0)
        labels = np.repeat(np.arange(10), 2)
        report = cross_validate(feats, labels, "knn", k=2, seed=0)
        assert report.mean == 1.0
        assert report.fold_accuracies.tolist() == [1.0, 1.0]

    def test_separated_blobs_both_classifiers(self, rng):
        a = rng.normal(0.0, 1.0, size=(100, 8))
        b = rng.normal(10.0, 1.0, size=(100, 8))
        feats = np.vstack([a, b])
        labels = np.repeat([0, 1], 100)
        for clf in ("knn", "nb"):
            report = cross_validate(feats, labels, clf, k=10, seed=42)
            assert report.mean == 1.0

    def test_permuted_labels_chance_level(self, rng):
        feats = rng.normal(size=(200, 6))
        labels = rng.permutation(np.repeat(np.arange(4), 50))
        for clf in ("knn", "nb"):
            report = cross_validate(feats, labels, clf, k=10, seed=42)
            assert 0.15 <= report.mean <= 0.35

    def test_deterministic(self, rng):
        feats = rng.normal(size=(40, 5))
        labels = np.repeat(np.arange(4), 10)
        a = cross_validate(feats, labels, "knn", k=5, seed=11)
        b = cross_validate(feats, labels, "knn", k=5, seed=11)
        assert np.array_equal(a.fold_accuracies, b.fold_accuracies)
        assert a.mean == b.mean and a.std == b.std

    def test_report_stats(self):
        from edtexture.classify import CvReport

        report = CvReport(fold_accuracies=np.array([0.5, 1.0, 0.75]))
        assert np.isclose(report.mean, 0.75)
        assert np.isclose(report.std, np.std([0.5, 1.0, 0.75], ddof=1))

    def test_rejects_nonfinite(self):
        feats = np.zeros((4, 2))
        feats[0, 0] = np.nan
        with pytest.raises(ValueError, match="non-finite"):
            cross_validate(feats, np.array([0, 0, 1, 1]), "knn", k=2, seed=0)

    def test_unknown_classifier(self, rng):
        feats = rng.normal(size=(8, 2))
        with pytest.raises(ValueError, match="classifier"):
            cross_validate(feats, np.repeat([0, 1], 4), "svm", k=2, seed=0)

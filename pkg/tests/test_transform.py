import numpy as np
import pytest

from edtexture.transform import (
    DistanceMap,
    binarize,
    edt_bruteforce,
    edt_exact,
    edt_exact_batch,
    quantize_distance,
    quantize_distance_batch,
)


def assert_maps_equal(a, b):
    assert a.foreground_empty == b.foreground_empty
    assert np.array_equal(a.sq_dist, b.sq_dist)


class TestBinarize:
    def test_direct_rule(self):
        img = np.array([[5, 10], [200, 1]], dtype=np.uint8)
        assert binarize(img, 10).tolist() == [[True, True], [False, True]]

    def test_threshold_255_is_all_foreground(self, rng):
        img = rng.integers(0, 256, size=(6, 7), dtype=np.uint8)
        assert binarize(img, 255).all()

    def test_below_minimum_is_all_background(self):
        img = np.full((4, 4), 12, dtype=np.uint8)
        assert not binarize(img, 5).any()

    def test_threshold_range(self):
        with pytest.raises(ValueError):
            binarize(np.zeros((2, 2), np.uint8), 256)

    def test_foreground_grows_with_threshold(self, rng):
        for _ in range(20):
            img = rng.integers(0, 256, size=(9, 9), dtype=np.uint8)
            prev = binarize(img, 0)
            for t in range(1, 256):
                cur = binarize(img, t)
                assert not (prev & ~cur).any()
                prev = cur


class TestEdtExamples:
    def test_all_foreground_is_zero(self):
        dm = edt_exact(np.ones((4, 6), bool))
        assert not dm.foreground_empty
        assert not dm.sq_dist.any()

    def test_1d_nearest(self):
        dm = edt_exact(np.array([[1, 0, 0, 0, 1]], dtype=bool))
        assert dm.sq_dist.tolist() == [[0, 1, 4, 1, 0]]

    def test_center_pixel_corner_distance(self):
        mask = np.zeros((5, 5), bool)
        mask[2, 2] = True
        sq = edt_exact(mask).sq_dist
        assert sq[0, 0] == sq[0, 4] == sq[4, 0] == sq[4, 4] == 8

    def test_top_row_foreground(self):
        mask = np.zeros((3, 3), bool)
        mask[0] = True
        sq = edt_exact(mask).sq_dist
        assert sq.tolist() == [[0, 0, 0], [1, 1, 1], [4, 4, 4]]

    def test_empty_foreground_convention(self):
        for f in (edt_exact, edt_bruteforce):
            dm = f(np.zeros((3, 5), bool))
            assert dm.foreground_empty
            assert not dm.sq_dist.any()

    def test_distances_view(self):
        dm = edt_exact(np.array([[1, 0, 0]], dtype=bool))
        assert np.allclose(dm.distances, [[0.0, 1.0, 2.0]])
        assert dm.width == 3 and dm.height == 1


class TestEdtOracle:
    def test_random_masks_match_bruteforce(self, rng):
        for _ in range(200):
            h, w = (int(v) for v in rng.integers(1, 17, 2))
            mask = rng.random((h, w)) < rng.uniform(0.02, 0.98)
            assert_maps_equal(edt_exact(mask), edt_bruteforce(mask))

    def test_edge_masks(self):
        for h, w in [(1, 1), (1, 8), (8, 1), (5, 5)]:
            for mask in (np.zeros((h, w), bool), np.ones((h, w), bool)):
                assert_maps_equal(edt_exact(mask), edt_bruteforce(mask))
        border = np.zeros((7, 9), bool)
        border[0] = border[-1] = border[:, 0] = border[:, -1] = True
        assert_maps_equal(edt_exact(border), edt_bruteforce(border))

    def test_batch_matches_per_image(self, rng):
        masks = rng.random((40, 11, 13)) < rng.uniform(0.0, 0.7, (40, 1, 1))
        masks[0] = False
        masks[1] = True
        sq, empty = edt_exact_batch(masks)
        for i in range(masks.shape[0]):
            single = edt_exact(masks[i])
            assert np.array_equal(sq[i], single.sq_dist)
            assert empty[i] == single.foreground_empty

    def test_rejects_wrong_rank(self):
        with pytest.raises(ValueError):
            edt_exact(np.zeros(4, bool))
        with pytest.raises(ValueError):
            edt_bruteforce(np.zeros((2, 2, 2), bool))


class TestEdtProperties:
    def test_zero_set_is_foreground(self, rng):
        for _ in range(30):
            mask = rng.random((10, 10)) < 0.3
            if not mask.any():
                continue
            sq = edt_exact(mask).sq_dist
            assert np.array_equal(sq == 0, mask)

    def test_transpose_isometry(self, rng):
        for _ in range(30):
            mask = rng.random((7, 12)) < 0.25
            assert np.array_equal(edt_exact(mask.T).sq_dist, edt_exact(mask).sq_dist.T)

    def test_horizontal_flip_isometry(self, rng):
        for _ in range(30):
            mask = rng.random((9, 8)) < 0.25
            assert np.array_equal(
                edt_exact(mask[:, ::-1]).sq_dist, edt_exact(mask).sq_dist[:, ::-1]
            )

    def test_distance_bound(self, rng):
        for _ in range(30):
            h, w = (int(v) for v in rng.integers(1, 20, 2))
            mask = rng.random((h, w)) < 0.1
            sq = edt_exact(mask).sq_dist
            assert sq.max() <= (w - 1) ** 2 + (h - 1) ** 2

    def test_anti_monotone_in_threshold(self, rng):
        # larger foreground can only bring every pixel closer
        for _ in range(10):
            img = rng.integers(0, 256, size=(12, 12), dtype=np.uint8)
            lo = int(img.min())
            prev = edt_exact(binarize(img, lo)).sq_dist
            for t in range(lo + 1, 256):
                cur = edt_exact(binarize(img, t)).sq_dist
                assert (cur <= prev).all()
                prev = cur


class TestQuantize:
    def test_linear_rescale(self):
        dm = DistanceMap(np.array([[0, 4, 16]], dtype=np.int64))
        assert quantize_distance(dm).tolist() == [[0, 128, 255]]

    def test_constant_map_is_zero(self):
        dm = DistanceMap(np.zeros((3, 3), dtype=np.int64))
        assert not quantize_distance(dm).any()

    def test_empty_foreground_is_zero(self):
        dm = DistanceMap(np.zeros((3, 3), dtype=np.int64), foreground_empty=True)
        assert not quantize_distance(dm).any()

    def test_output_range_and_dtype(self, rng):
        for _ in range(20):
            mask = rng.random((9, 9)) < 0.2
            out = quantize_distance(edt_exact(mask))
            assert out.dtype == np.uint8
            if mask.any() and not mask.all():
                assert out.max() == 255

    def test_batch_matches_single(self, rng):
        masks = rng.random((12, 8, 8)) < 0.3
        sq, _ = edt_exact_batch(masks)
        batched = quantize_distance_batch(sq)
        for i in range(12):
            assert np.array_equal(batched[i], quantize_distance(edt_exact(masks[i])))

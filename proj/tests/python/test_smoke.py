import numpy as np
import pytest

import slicmag


def checker(h, w, c0=(220, 40, 30), c1=(30, 40, 220), block=8):
    img = np.zeros((h, w, 3), dtype=np.uint8)
    yy, xx = np.mgrid[0:h, 0:w]
    left = (xx // block) % 2 == 0
    img[left] = c0
    img[~left] = c1
    return img


def test_resize_shape_and_constant():
    flat = np.full((16, 16, 3), 93, dtype=np.uint8)
    out = slicmag.resize(flat, 48, 32)
    assert out.shape == (32, 48, 3)
    assert np.all(out == 93)


def test_enlarge_and_baseline_dims():
    img = checker(32, 32)
    out = slicmag.enlarge(img, scale=4, k=8, max_iters=4)
    base = slicmag.enlarge_baseline(img, scale=4)
    assert out.shape == (128, 128, 3)
    assert base.shape == (128, 128, 3)


def test_enlarge_solid_is_solid():
    img = np.full((16, 16, 3), (120, 60, 200), dtype=np.uint8)
    out = slicmag.enlarge(img, scale=2, k=4, max_iters=4)
    assert np.abs(out.astype(int) - (120, 60, 200)).max() <= 1


def test_segment_partition():
    img = checker(64, 64, block=32)
    labels = slicmag.segment(img, k=4, max_iters=10)
    assert labels.shape == (64, 64)
    assert labels.min() == 0
    assert set(np.unique(labels)) == set(range(labels.max() + 1))


def test_psnr_identity_and_known_value():
    a = np.random.default_rng(7).integers(0, 245, (32, 32, 3), dtype=np.uint8)
    assert slicmag.psnr(a, a) == float("inf")
    b = (a.astype(int) + 10).astype(np.uint8)  # never clips: values stay <= 254
    assert slicmag.psnr(a, b) == pytest.approx(28.1308, abs=1e-3)


def test_save_load_roundtrip(tmp_path):
    img = checker(20, 24)
    path = str(tmp_path / "x.png")
    slicmag.save(img, path)
    assert np.array_equal(slicmag.load(path), img)


def test_load_missing_raises(tmp_path):
    with pytest.raises(OSError):
        slicmag.load(str(tmp_path / "missing.png"))


def test_bad_shape_rejected():
    with pytest.raises(ValueError):
        slicmag.resize(np.zeros((4, 4, 4), dtype=np.uint8), 8, 8)

"""Correction pipeline: estimate map -> full-resolution illuminant field -> divide.

The map is upsampled by duplicating each cell over its region, smoothed
with a mean filter to soften the transitions between regions, re-normalized
per pixel, and divided out of the scene componentwise.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .core import DomainError, RegionGrid, as_estimate_map, as_linear_image, normalize

#: Default smoothing window; the nearest odd size to a 50 x 50 kernel area.
DEFAULT_SMOOTH_K = 49

LocalEstimator = Callable[[np.ndarray, RegionGrid], np.ndarray]


def upsample(map_: np.ndarray, grid: RegionGrid) -> np.ndarray:
    """Duplicate each map cell over its region; exact, no interpolation."""
    m = as_estimate_map(map_)
    rows = grid.pixel_region_rows()
    cols = grid.pixel_region_cols()
    return m[rows[:, None], cols[None, :], :]


def smooth(field: np.ndarray, k: int = DEFAULT_SMOOTH_K) -> np.ndarray:
    """Mean-filter each channel over a k x k window with replicate padding.

    k must be odd and no larger than either field dimension. Runs in
    O(H*W) per channel via an integral image; every output value is the
    exact window mean, so a constant field is unchanged for any k.
    """
    f = np.asarray(field, dtype=np.float64)
    if f.ndim != 3 or f.shape[2] != 3:
        raise DomainError(f"expected an HxWx3 field, got shape {f.shape}")
    h, w = f.shape[:2]
    if k % 2 != 1 or k < 1 or k > min(h, w):
        raise DomainError(f"window size {k} must be odd and in [1, min(H, W)]")
    if k == 1:
        return f.copy()
    r = k // 2
    padded = np.pad(f, ((r, r), (r, r), (0, 0)), mode="edge")
    # integral image with a zero border so window sums are pure differences
    s = np.zeros((padded.shape[0] + 1, padded.shape[1] + 1, 3), dtype=np.float64)
    np.cumsum(padded, axis=0, out=s[1:, 1:])
    np.cumsum(s[1:, 1:], axis=1, out=s[1:, 1:])
    win = s[k:, k:] - s[:-k, k:] - s[k:, :-k] + s[:-k, :-k]
    return win / float(k * k)


def normalize_field(field: np.ndarray) -> np.ndarray:
    """Rescale every pixel vector to L2 norm sqrt(3)."""
    return normalize(field)


def correct(scene: np.ndarray, field: np.ndarray) -> np.ndarray:
    """Divide the scene by the illuminant field componentwise (no clipping)."""
    img = as_linear_image(scene)
    f = np.asarray(field, dtype=np.float64)
    if f.shape != img.shape:
        raise DomainError(f"field shape {f.shape} does not match scene {img.shape}")
    if not np.isfinite(f).all() or (f <= 0).any():
        raise DomainError("illuminant field must be strictly positive and finite")
    return img / f


def mem_correct(
    scene: np.ndarray,
    estimator: LocalEstimator,
    k: int = DEFAULT_SMOOTH_K,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Run the full correction chain and return all intermediates.

    estimator(scene, grid) must produce a 6 x 10 x 3 estimate map. The map
    is upsampled, mean-filtered with window k, re-normalized per pixel and
    divided out. Returns (corrected scene, estimate map, smoothed field).
    """
    from .core import make_region_grid

    img = as_linear_image(scene, min_height=6, min_width=10)
    grid = make_region_grid(img.shape[0], img.shape[1])
    map_ = as_estimate_map(estimator(img, grid))
    field = normalize_field(smooth(upsample(map_, grid), k))
    return correct(img, field), map_, field

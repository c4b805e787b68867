"""Shared domain types and colour geometry.

Images are H x W x 3 float arrays of non-negative linear-RGB intensities.
Illuminant vectors are 3-vectors of positive components; only their
direction matters, and the house convention stores them scaled to L2 norm
sqrt(3) so that pure white is exactly (1, 1, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

MAP_ROWS = 6
MAP_COLS = 10
MAP_CELLS = MAP_ROWS * MAP_COLS

#: Target L2 norm of a stored illuminant vector (white -> (1,1,1)).
ILLUMINANT_NORM = math.sqrt(3.0)

_RAD2DEG = 180.0 / math.pi


class DomainError(ValueError):
    """An input violates a documented precondition or invariant."""


def as_linear_image(img, *, min_height: int = 1, min_width: int = 1) -> np.ndarray:
    """Validate and return ``img`` as an H x W x 3 float64 array.

    Raises DomainError on wrong shape, non-finite or negative components,
    or dimensions below the stated minima.
    """
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise DomainError(f"expected an HxWx3 image, got shape {arr.shape}")
    if arr.shape[0] < min_height or arr.shape[1] < min_width:
        raise DomainError(
            f"image {arr.shape[0]}x{arr.shape[1]} is below the"
            f" required minimum {min_height}x{min_width}"
        )
    if not np.isfinite(arr).all():
        raise DomainError("image contains non-finite components")
    if (arr < 0).any():
        raise DomainError("image contains negative components")
    return arr


def as_illuminant(v) -> np.ndarray:
    """Validate and return ``v`` as a finite, positive 3-vector (float64)."""
    vec = np.asarray(v, dtype=np.float64)
    if vec.shape != (3,):
        raise DomainError(f"expected a 3-vector, got shape {vec.shape}")
    if not np.isfinite(vec).all():
        raise DomainError("illuminant vector has non-finite components")
    if (vec <= 0).any():
        raise DomainError("illuminant vector components must be positive")
    return vec


def as_estimate_map(m) -> np.ndarray:
    """Validate a 6 x 10 x 3 estimate map: positive, finite, cells at norm sqrt(3)."""
    arr = np.asarray(m, dtype=np.float64)
    if arr.shape != (MAP_ROWS, MAP_COLS, 3):
        raise DomainError(f"expected a {MAP_ROWS}x{MAP_COLS}x3 map, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise DomainError("estimate map has non-finite components")
    if (arr <= 0).any():
        raise DomainError("estimate map components must be positive")
    norms = np.linalg.norm(arr, axis=-1)
    if np.abs(norms - ILLUMINANT_NORM).max() > 1e-9:
        raise DomainError("estimate map cells must have L2 norm sqrt(3)")
    return arr


def normalize(v) -> np.ndarray:
    """Rescale vectors along the last axis to L2 norm sqrt(3).

    Accepts a single 3-vector or any (..., 3) array and preserves direction
    exactly. Idempotent. Raises DomainError on zero or non-finite norms.
    """
    arr = np.asarray(v, dtype=np.float64)
    if arr.shape[-1] != 3:
        raise DomainError(f"expected (..., 3) vectors, got shape {arr.shape}")
    norms = np.linalg.norm(arr, axis=-1, keepdims=True)
    if not np.isfinite(norms).all() or (norms == 0).any():
        raise DomainError("cannot normalize a zero or non-finite vector")
    return arr * (ILLUMINANT_NORM / norms)


def angular_error(a, b) -> np.ndarray | float:
    """Angle between RGB vectors in degrees, in [0, 180].

    Broadcasts over leading axes: inputs of shape (..., 3) yield (...)
    angles. Scale-invariant in either argument. The normalized dot product
    is clamped to [-1, 1] before arccos to absorb floating-point drift.
    """
    av = np.asarray(a, dtype=np.float64)
    bv = np.asarray(b, dtype=np.float64)
    if av.shape[-1] != 3 or bv.shape[-1] != 3:
        raise DomainError("angular_error expects (..., 3) RGB vectors")
    if not (np.isfinite(av).all() and np.isfinite(bv).all()):
        raise DomainError("angular_error inputs must be finite")
    na = np.linalg.norm(av, axis=-1)
    nb = np.linalg.norm(bv, axis=-1)
    if (na <= 0).any() or (nb <= 0).any():
        raise DomainError("angular_error inputs must have positive norm")
    dot = np.einsum("...i,...i->...", av, bv) / (na * nb)
    ang = np.arccos(np.clip(dot, -1.0, 1.0)) * _RAD2DEG
    return float(ang) if ang.ndim == 0 else ang


@dataclass(frozen=True)
class RegionGrid:
    """Partition of an H x W image into 6 x 10 rectangular regions.

    ``row_bounds`` has 7 offsets and ``col_bounds`` 11; region (i, j)
    covers rows [row_bounds[i], row_bounds[i+1]) and likewise for columns.
    All rows are floor(H/6) tall except the last, which absorbs H mod 6;
    columns follow the same rule with floor(W/10).
    """

    height: int
    width: int
    row_bounds: tuple[int, ...]
    col_bounds: tuple[int, ...]

    def region_slices(self, i: int, j: int) -> tuple[slice, slice]:
        return (
            slice(self.row_bounds[i], self.row_bounds[i + 1]),
            slice(self.col_bounds[j], self.col_bounds[j + 1]),
        )

    def iter_regions(self):
        """Yield (cell_index, row_slice, col_slice) in row-major order."""
        for i in range(MAP_ROWS):
            for j in range(MAP_COLS):
                rs, cs = self.region_slices(i, j)
                yield i * MAP_COLS + j, rs, cs

    def row_of(self, r: int) -> int:
        """Region row index containing pixel row ``r``."""
        return int(np.searchsorted(self.row_bounds, r, side="right")) - 1

    def col_of(self, c: int) -> int:
        return int(np.searchsorted(self.col_bounds, c, side="right")) - 1

    def pixel_region_rows(self) -> np.ndarray:
        """Region row index for every pixel row, shape (H,)."""
        return np.searchsorted(np.asarray(self.row_bounds), np.arange(self.height), side="right") - 1

    def pixel_region_cols(self) -> np.ndarray:
        return np.searchsorted(np.asarray(self.col_bounds), np.arange(self.width), side="right") - 1


def make_region_grid(height: int, width: int) -> RegionGrid:
    """Build the deterministic 6 x 10 partition of an image.

    Remainder pixels go to the last row and last column only, so e.g. a
    216 x 325 image has uniform 36-pixel rows, nine 32-pixel columns and a
    final 37-pixel column.
    """
    if height < MAP_ROWS or width < MAP_COLS:
        raise DomainError(
            f"grid needs at least {MAP_ROWS}x{MAP_COLS} pixels, got {height}x{width}"
        )
    rh = height // MAP_ROWS
    cw = width // MAP_COLS
    row_bounds = tuple(i * rh for i in range(MAP_ROWS)) + (height,)
    col_bounds = tuple(j * cw for j in range(MAP_COLS)) + (width,)
    return RegionGrid(height, width, row_bounds, col_bounds)


@dataclass(frozen=True)
class GammaPolicy:
    """Power-law display encoding. encode(x) = x**(1/exponent), decode inverts."""

    exponent: float = 2.2

    def __post_init__(self):
        if not (math.isfinite(self.exponent) and self.exponent > 0):
            raise DomainError("gamma exponent must be positive and finite")


DEFAULT_GAMMA = GammaPolicy(2.2)


def _check_unit_range(img) -> np.ndarray:
    arr = np.asarray(img, dtype=np.float64)
    if not np.isfinite(arr).all():
        raise DomainError("gamma transform input must be finite")
    if (arr < 0).any() or (arr > 1).any():
        raise DomainError("gamma transform input must lie in [0, 1]")
    return arr


def gamma_encode(img, policy: GammaPolicy = DEFAULT_GAMMA) -> np.ndarray:
    """Componentwise x**(1/exponent) on values in [0, 1]."""
    return _check_unit_range(img) ** (1.0 / policy.exponent)


def gamma_decode(img, policy: GammaPolicy = DEFAULT_GAMMA) -> np.ndarray:
    """Inverse of gamma_encode: componentwise x**exponent on [0, 1]."""
    return _check_unit_range(img) ** policy.exponent

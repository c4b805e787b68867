"""Multi-estimate-map colour constancy toolkit.

Estimates scene illumination per region (classical statistics estimators
or a small trainable convolutional regressor), scores estimates with
angular-error metrics, and corrects images by dividing out a smoothed
region-wise illuminant map.
"""

from .core import (
    DEFAULT_GAMMA,
    ILLUMINANT_NORM,
    MAP_CELLS,
    MAP_COLS,
    MAP_ROWS,
    DomainError,
    GammaPolicy,
    RegionGrid,
    angular_error,
    as_estimate_map,
    as_illuminant,
    as_linear_image,
    gamma_decode,
    gamma_encode,
    make_region_grid,
    normalize,
)

__all__ = [
    "DEFAULT_GAMMA",
    "ILLUMINANT_NORM",
    "MAP_CELLS",
    "MAP_COLS",
    "MAP_ROWS",
    "DomainError",
    "GammaPolicy",
    "RegionGrid",
    "angular_error",
    "as_estimate_map",
    "as_illuminant",
    "as_linear_image",
    "gamma_decode",
    "gamma_encode",
    "make_region_grid",
    "normalize",
]

__version__ = "0.1.0"

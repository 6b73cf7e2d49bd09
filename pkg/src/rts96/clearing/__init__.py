from .losses import link_loss, pwl_envelope, pwl_error_bound, pwl_loss_curve
from .nodal import ClearingError, ClearingOptions, DispatchResult, build_nodal_lp, clear_nodal
from .zonal import Corridor, ZonalCase, ZonalResult, clear_zonal, reduce_zonal

__all__ = [
    "ClearingError",
    "ClearingOptions",
    "Corridor",
    "DispatchResult",
    "build_nodal_lp",
    "clear_nodal",
    "link_loss",
    "pwl_envelope",
    "pwl_error_bound",
    "pwl_loss_curve",
    "reduce_zonal",
    "ZonalCase",
    "ZonalResult",
    "clear_zonal",
]

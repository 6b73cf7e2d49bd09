"""HVDC link losses: two converter stations plus the DC line, lumped per link.

With flow ``f`` in per unit (converter current taken equal to power at 1 pu
voltage) the link loss is::

    (a_inv + a_rec + r) * f**2 + 2*b*|f| + 2*c

The convex part is over-approximated in the LP by secants through equally
spaced breakpoints on ``[0, rating]``.
"""

from __future__ import annotations

from typing import List, Tuple

import numpy as np

from ..case.model import HvdcLink


def quadratic_coef(link: HvdcLink) -> float:
    return link.a_inv + link.a_rec + link.r_pu


def constant_loss(link: HvdcLink) -> float:
    return 2.0 * link.c_coef


def link_loss(link: HvdcLink, f_pu):
    """Exact lumped loss (pu) at signed per-unit flow ``f_pu``."""
    f = np.abs(f_pu)
    return quadratic_coef(link) * f * f + 2.0 * link.b_coef * f + 2.0 * link.c_coef


def rating_pu(link: HvdcLink, base_mva: float = 100.0) -> float:
    return link.rating_mw / base_mva


def pwl_loss_curve(link: HvdcLink, n_segments: int, base_mva: float = 100.0) -> List[Tuple[float, float]]:
    """Secant segments ``(slope, intercept)`` of the flow-dependent loss.

    The envelope is ``2c + max_k(slope_k*|f| + intercept_k)``; it matches the
    exact loss at every breakpoint and overshoots by at most
    ``a*(rating/n)**2/4`` in between.
    """
    if n_segments < 1:
        raise ValueError("n_segments must be >= 1")
    a = quadratic_coef(link)
    lin = 2.0 * link.b_coef
    rating = rating_pu(link, base_mva)
    if rating <= 0.0:
        return [(lin, 0.0)]
    points = np.linspace(0.0, rating, n_segments + 1)
    segments = []
    for lo, hi in zip(points[:-1], points[1:]):
        segments.append((a * (lo + hi) + lin, -a * lo * hi))
    return segments


def pwl_envelope(link: HvdcLink, n_segments: int, f_pu, base_mva: float = 100.0):
    f = np.abs(np.asarray(f_pu, dtype=float))
    segs = pwl_loss_curve(link, n_segments, base_mva)
    vals = np.max([s * f + i for s, i in segs], axis=0)
    return vals + constant_loss(link)


def pwl_error_bound(link: HvdcLink, n_segments: int, base_mva: float = 100.0) -> float:
    h = rating_pu(link, base_mva) / n_segments
    return quadratic_coef(link) * h * h / 4.0


def max_loss(link: HvdcLink, base_mva: float = 100.0) -> float:
    """Loss at full rating; the envelope never exceeds it on ``[0, rating]``."""
    return float(link_loss(link, rating_pu(link, base_mva)))

"""Pure numpy simplex iteration kernel.

Same contract as the compiled ``_kernel_cy.iterate``; see that module for the
argument layout. Column ``j`` of the constraint matrix is given in CSC form by
``indices[indptr[j]:indptr[j+1]]`` / ``data[...]``.
"""

from __future__ import annotations

import numpy as np

OPTIMAL, UNBOUNDED, LIMIT = 0, 1, 2
BASIC, AT_LOWER, AT_UPPER, FREE = 0, 1, 2, 3
TIE_TOL = 1e-12


def _dense(indptr, indices, data, m, ncols):
    A = np.zeros((m, ncols))
    cols = np.repeat(np.arange(ncols), np.diff(indptr))
    A[indices, cols] = data
    return A


def iterate(
    Binv,
    basis,
    state,
    x,
    d,
    lo,
    hi,
    indptr,
    indices,
    data,
    max_iter,
    pivot_tol,
    dual_tol,
    counters,
    bland_after,
):
    """Run up to ``max_iter`` primal simplex pivots in place.

    Returns ``(code, iterations)`` with code OPTIMAL, UNBOUNDED or LIMIT.
    ``counters`` holds ``[degenerate run length, bland mode flag]``.
    """
    m = Binv.shape[0]
    ncols = x.shape[0]
    A = _dense(indptr, indices, data, m, ncols)
    movable = lo < hi

    for it in range(max_iter):
        at_lo = (state == AT_LOWER) & movable & (d < -dual_tol)
        at_hi = (state == AT_UPPER) & movable & (d > dual_tol)
        free = (state == FREE) & (np.abs(d) > dual_tol)
        eligible = at_lo | at_hi | free
        if not eligible.any():
            return OPTIMAL, it
        if counters[1]:
            q = int(np.flatnonzero(eligible)[0])
        else:
            q = int(np.argmax(np.where(eligible, np.abs(d), -1.0)))
        direction = 1.0 if d[q] < 0 else -1.0

        lo_q, hi_q = indptr[q], indptr[q + 1]
        alpha = Binv[:, indices[lo_q:hi_q]] @ data[lo_q:hi_q]
        a = direction * alpha
        xb = x[basis]
        lob = lo[basis]
        hib = hi[basis]
        t = np.full(m, np.inf)
        dec = (a > pivot_tol) & np.isfinite(lob)
        inc = (a < -pivot_tol) & np.isfinite(hib)
        t[dec] = (xb[dec] - lob[dec]) / a[dec]
        t[inc] = (hib[inc] - xb[inc]) / (-a[inc])
        np.maximum(t, 0.0, out=t)
        t_min = t.min() if m else np.inf
        flip = hi[q] - lo[q]
        if not np.isfinite(t_min) and not np.isfinite(flip):
            return UNBOUNDED, it

        if flip <= t_min:
            step = flip
            x[q] = hi[q] if direction > 0 else lo[q]
            x[basis] = xb - direction * step * alpha
            state[q] = AT_UPPER if direction > 0 else AT_LOWER
        else:
            step = t_min
            ties = np.flatnonzero(t <= t_min + TIE_TOL)
            if counters[1]:
                r = int(ties[np.argmin(basis[ties])])
            else:
                r = int(ties[np.argmax(np.abs(alpha[ties]))])
            leaving = basis[r]
            x[q] = x[q] + direction * step
            x[basis] = xb - direction * step * alpha
            if a[r] > 0:
                x[leaving] = lo[leaving]
                state[leaving] = AT_LOWER
            else:
                x[leaving] = hi[leaving]
                state[leaving] = AT_UPPER if movable[leaving] else AT_LOWER

            pivot = alpha[r]
            rho = Binv[r].copy()
            d -= (d[q] / pivot) * (rho @ A)
            d[q] = 0.0
            Binv[r] /= pivot
            alpha[r] = 0.0
            Binv -= np.outer(alpha, Binv[r])
            basis[r] = q
            state[q] = BASIC

        if step <= TIE_TOL:
            counters[0] += 1
            if counters[0] >= bland_after:
                counters[1] = 1
        else:
            counters[0] = 0
            counters[1] = 0
    return LIMIT, max_iter

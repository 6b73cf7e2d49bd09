# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled simplex iteration kernel.

Arguments (all updated in place):

Binv      (m, m) explicit basis inverse
basis     (m,) column index basic in each row
state     (ncols,) 0 basic, 1 at lower, 2 at upper, 3 free at zero
x         (ncols,) current values, basic ones included
d         (ncols,) reduced costs for the active objective
lo, hi    (ncols,) bounds, +-inf allowed
indptr, indices, data   CSC columns of [A | slacks | artificials]
counters  [degenerate run length, bland mode flag]
"""

from libc.math cimport fabs, INFINITY, isfinite

import numpy as np

DEF OPTIMAL = 0
DEF UNBOUNDED = 1
DEF LIMIT = 2
DEF BASIC = 0
DEF AT_LOWER = 1
DEF AT_UPPER = 2
DEF FREE = 3
DEF TIE_TOL = 1e-12


def iterate(
    double[:, ::1] Binv,
    long[::1] basis,
    long[::1] state,
    double[::1] x,
    double[::1] d,
    double[::1] lo,
    double[::1] hi,
    long[::1] indptr,
    long[::1] indices,
    double[::1] data,
    long max_iter,
    double pivot_tol,
    double dual_tol,
    long[::1] counters,
    long bland_after,
):
    cdef Py_ssize_t m = Binv.shape[0]
    cdef Py_ssize_t ncols = x.shape[0]
    cdef Py_ssize_t i, j, k, q, r, leaving, it
    cdef double best, score, direction, a, t, t_min, flip, step, pivot, ratio, s, best_alpha
    cdef long best_basis
    cdef double[::1] alpha = np.empty(m)
    cdef double[::1] tr = np.empty(m)
    cdef double[::1] rho = np.empty(m)
    cdef double[::1] prow

    for it in range(max_iter):
        # pricing
        q = -1
        best = 0.0
        for j in range(ncols):
            if state[j] == BASIC:
                continue
            score = 0.0
            if state[j] == AT_LOWER:
                if lo[j] < hi[j] and d[j] < -dual_tol:
                    score = -d[j]
            elif state[j] == AT_UPPER:
                if lo[j] < hi[j] and d[j] > dual_tol:
                    score = d[j]
            elif fabs(d[j]) > dual_tol:
                score = fabs(d[j])
            if score > 0.0:
                if counters[1]:
                    q = j
                    break
                if score > best:
                    best = score
                    q = j
        if q < 0:
            return OPTIMAL, it
        direction = 1.0 if d[q] < 0 else -1.0

        # entering column in the current basis
        for i in range(m):
            s = 0.0
            for k in range(indptr[q], indptr[q + 1]):
                s += Binv[i, indices[k]] * data[k]
            alpha[i] = s

        # ratio test
        t_min = INFINITY
        for i in range(m):
            a = direction * alpha[i]
            t = INFINITY
            j = basis[i]
            if a > pivot_tol and isfinite(lo[j]):
                t = (x[j] - lo[j]) / a
            elif a < -pivot_tol and isfinite(hi[j]):
                t = (hi[j] - x[j]) / (-a)
            if t < 0.0:
                t = 0.0
            tr[i] = t
            if t < t_min:
                t_min = t
        flip = hi[q] - lo[q]
        if not isfinite(t_min) and not isfinite(flip):
            return UNBOUNDED, it

        if flip <= t_min:
            step = flip
            for i in range(m):
                x[basis[i]] -= direction * step * alpha[i]
            if direction > 0:
                x[q] = hi[q]
                state[q] = AT_UPPER
            else:
                x[q] = lo[q]
                state[q] = AT_LOWER
        else:
            step = t_min
            r = -1
            best_alpha = -1.0
            best_basis = ncols
            for i in range(m):
                if tr[i] <= t_min + TIE_TOL:
                    if counters[1]:
                        if basis[i] < best_basis:
                            best_basis = basis[i]
                            r = i
                    elif fabs(alpha[i]) > best_alpha:
                        best_alpha = fabs(alpha[i])
                        r = i
            leaving = basis[r]
            x[q] += direction * step
            for i in range(m):
                x[basis[i]] -= direction * step * alpha[i]
            if direction * alpha[r] > 0:
                x[leaving] = lo[leaving]
                state[leaving] = AT_LOWER
            else:
                x[leaving] = hi[leaving]
                state[leaving] = AT_UPPER if lo[leaving] < hi[leaving] else AT_LOWER

            pivot = alpha[r]
            for i in range(m):
                rho[i] = Binv[r, i]
            ratio = d[q] / pivot
            if ratio != 0.0:
                for j in range(ncols):
                    s = 0.0
                    for k in range(indptr[j], indptr[j + 1]):
                        s += rho[indices[k]] * data[k]
                    d[j] -= ratio * s
            d[q] = 0.0

            prow = Binv[r]
            for k in range(m):
                prow[k] /= pivot
            for i in range(m):
                if i == r or alpha[i] == 0.0:
                    continue
                a = alpha[i]
                for k in range(m):
                    Binv[i, k] -= a * prow[k]
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

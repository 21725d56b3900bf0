# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled Ehrlich-Aberth kernel.

Same algorithm, same constants, same deterministic jitter stream as the
reference implementation in spectral_patch._roots_py; keep both in lockstep.
"""

import numpy as np

from libc.math cimport cos, sin

BACKEND_NAME = "compiled"

ctypedef double complex dcomplex

cdef double _TWO_PI = 6.283185307179586476925286766559
cdef double _PHASE = 0.77
cdef double _EPS4 = 8.881784197001252e-16
cdef unsigned long long _GAMMA = 0x9E3779B97F4A7C15ULL
cdef unsigned long long _SEED = 0x5EED1E57C0FFEE11ULL


cdef inline double _next_unit(unsigned long long *state):
    cdef unsigned long long z
    state[0] = state[0] + _GAMMA
    z = state[0]
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    z = z ^ (z >> 31)
    return z / 18446744073709551616.0


cdef bint _solve(dcomplex[::1] c, double tol, int max_iter,
                 dcomplex[::1] monic, double[::1] floorc,
                 dcomplex[::1] z, dcomplex[::1] w):
    """Iterate on one polynomial; roots land in z. Returns convergence."""
    cdef Py_ssize_t n = c.shape[0] - 1
    cdef Py_ssize_t i, j, k
    cdef double radius, mag, theta, x, s
    cdef unsigned long long state = _SEED
    cdef dcomplex lead, zi, p, dp, corr, repulse, den, d
    cdef bint settled
    cdef int sweep

    lead = c[n]
    for k in range(n + 1):
        monic[k] = c[k] / lead
    if n == 1:
        z[0] = -monic[0]
        return True

    radius = 0.0
    for k in range(n):
        mag = abs(monic[k])
        if mag > radius:
            radius = mag
    radius = 1.0 + radius
    for k in range(n + 1):
        floorc[k] = (2.0 * k + 1.0) * abs(monic[k])

    for j in range(n):
        theta = _TWO_PI * (j + 0.5 + 0.25 * (_next_unit(&state) - 0.5)) / n + _PHASE
        z[j] = radius * cos(theta) + 1j * (radius * sin(theta))

    for sweep in range(max_iter):
        settled = True
        for i in range(n):
            zi = z[i]
            x = abs(zi)
            p = monic[n]
            dp = 0
            s = floorc[n]
            for k in range(n - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + monic[k]
                s = s * x + floorc[k]
            if abs(p) <= _EPS4 * s:
                w[i] = 0
                continue
            if dp == 0:
                w[i] = 1e-3 * radius + 1j * (5e-4 * radius)
                settled = False
                continue
            corr = p / dp
            repulse = 0
            for j in range(n):
                if j != i:
                    d = zi - z[j]
                    if d != 0:
                        repulse = repulse + 1.0 / d
            den = 1.0 - corr * repulse
            if den == 0:
                w[i] = corr
            else:
                w[i] = corr / den
            if abs(w[i]) > tol * (1.0 + x):
                settled = False
        for i in range(n):
            z[i] = z[i] - w[i]
        if settled:
            return True
    return False


def aberth_roots(coeffs, double tol, int max_iter):
    """Compiled counterpart of _roots_py.aberth_roots."""
    c_arr = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef Py_ssize_t n = c_arr.shape[0] - 1
    if n <= 0:
        return np.empty(0, dtype=np.complex128), True
    roots_arr = np.empty(n, dtype=np.complex128)
    monic_arr = np.empty(n + 1, dtype=np.complex128)
    floor_arr = np.empty(n + 1, dtype=np.float64)
    work_arr = np.empty(n, dtype=np.complex128)
    cdef bint ok = _solve(c_arr, tol, max_iter, monic_arr, floor_arr,
                          roots_arr, work_arr)
    return roots_arr, bool(ok)


def aberth_roots_batch(coeff_rows, double tol, int max_iter):
    """Compiled counterpart of _roots_py.aberth_roots_batch."""
    rows = np.ascontiguousarray(coeff_rows, dtype=np.complex128)
    cdef Py_ssize_t count = rows.shape[0]
    cdef Py_ssize_t width = rows.shape[1]
    roots = np.empty((count, width - 1), dtype=np.complex128)
    ok = np.empty(count, dtype=bool)
    monic_arr = np.empty(width, dtype=np.complex128)
    floor_arr = np.empty(width, dtype=np.float64)
    work_arr = np.empty(width - 1, dtype=np.complex128)
    cdef Py_ssize_t r
    for r in range(count):
        ok[r] = _solve(rows[r], tol, max_iter, monic_arr, floor_arr,
                       roots[r], work_arr)
    return roots, ok

"""Pure-Python root-finding backend.

Ehrlich-Aberth simultaneous iteration: every root is refined at once, each
Newton correction damped by the repulsion of the other current iterates.
Start points sit on a circle of radius 1 + max |monic coefficient| (a Cauchy
bound, so all roots lie inside) with a small deterministic angular jitter.
The jitter stream is splitmix64 with a fixed seed, reset on every call, so
identical input always produces bitwise identical output.

spectral_patch._roots_cy implements the same algorithm, same constants, in
compiled form; keep the two in lockstep when editing.
"""

import math

import numpy as np

BACKEND_NAME = "python"

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
# Arbitrary fixed seed. Changing it changes every documented output stream.
_SEED = 0x5EED1E57C0FFEE11
# Global phase keeps start points off the coordinate axes, where symmetric
# root sets can stall the iteration.
_PHASE = 0.77
# 4x double machine epsilon: residuals below _EPS4 * (Horner magnitude sum)
# are rounding noise, so the iterate cannot be improved in this precision.
_EPS4 = 8.881784197001252e-16


def _unit_stream(count):
    """First `count` samples of the splitmix64 stream, mapped into [0, 1)."""
    state = _SEED
    out = []
    for _ in range(count):
        state = (state + _GAMMA) & _MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        z ^= z >> 31
        out.append(z / 2.0**64)
    return out


def aberth_roots(coeffs, tol, max_iter):
    """All complex roots of a dense polynomial, unordered and unclustered.

    coeffs: ascending complex coefficients, nonzero leading entry.
    Returns (roots ndarray, converged flag). A root counts as settled when
    its correction falls below tol * (1 + |iterate|) or its residual sinks
    to the evaluation rounding floor (multiple roots never push the
    correction below tol, so the floor test is what terminates them).
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    n = c.shape[0] - 1
    if n <= 0:
        return np.empty(0, dtype=np.complex128), True
    monic = [complex(v / c[n]) for v in c]
    if n == 1:
        return np.array([-monic[0]], dtype=np.complex128), True

    radius = 1.0 + max(abs(v) for v in monic[:n])
    floor_c = [(2.0 * k + 1.0) * abs(monic[k]) for k in range(n + 1)]
    jitter = _unit_stream(n)
    z = [
        complex(
            radius * math.cos(2.0 * math.pi * (j + 0.5 + 0.25 * (jitter[j] - 0.5)) / n + _PHASE),
            radius * math.sin(2.0 * math.pi * (j + 0.5 + 0.25 * (jitter[j] - 0.5)) / n + _PHASE),
        )
        for j in range(n)
    ]
    w = [0j] * n

    for _ in range(max_iter):
        settled = True
        for i in range(n):
            zi = z[i]
            x = abs(zi)
            # Horner pass for p, p', and the rounding-floor magnitude sum.
            p = monic[n]
            dp = 0j
            s = floor_c[n]
            for k in range(n - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + monic[k]
                s = s * x + floor_c[k]
            if abs(p) <= _EPS4 * s:
                w[i] = 0j
                continue
            if dp == 0:
                # Dead-centre of a root cluster; take a fixed sidestep.
                w[i] = complex(1e-3 * radius, 5e-4 * radius)
                settled = False
                continue
            corr = p / dp
            repulse = 0j
            for j in range(n):
                if j != i:
                    d = zi - z[j]
                    if d != 0:
                        repulse += 1.0 / d
            den = 1.0 - corr * repulse
            w[i] = corr if den == 0 else corr / den
            if abs(w[i]) > tol * (1.0 + x):
                settled = False
        for i in range(n):
            z[i] -= w[i]
        if settled:
            return np.array(z, dtype=np.complex128), True
    return np.array(z, dtype=np.complex128), False


def aberth_roots_batch(coeff_rows, tol, max_iter):
    """Row-wise aberth_roots. Rows share one degree (leading entries nonzero).

    Returns (roots array of shape (rows, degree), converged bool array).
    """
    rows = np.asarray(coeff_rows, dtype=np.complex128)
    count, width = rows.shape
    roots = np.empty((count, width - 1), dtype=np.complex128)
    ok = np.empty(count, dtype=bool)
    for r in range(count):
        roots[r], ok[r] = aberth_roots(rows[r], tol, max_iter)
    return roots, ok

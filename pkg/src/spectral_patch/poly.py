"""Dense univariate polynomials over the complex numbers.

Coefficients are stored ascending; the zero polynomial is the empty tuple.
Construction trims trailing coefficients of magnitude at most the default
eq_tol, so a Poly is always either empty or has a leading coefficient that
beats that threshold. All values are validated finite on the way in.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from . import _kernel
from .config import DEFAULT_CONFIG, NumericConfig
from .errors import DegreeTooLow, NoConvergence, NotMonic, ZeroPolynomial

#: Trailing-coefficient trim threshold used by all polynomial arithmetic.
TRIM_TOL = DEFAULT_CONFIG.eq_tol


def require_finite(value) -> complex:
    """Coerce to complex and reject NaN or infinite components."""
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError("non-finite complex value: %r" % (value,))
    return value


class Poly:
    """Immutable dense polynomial. Operators give add/sub/mul/scale."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[complex] = ()):
        cs = [require_finite(c) for c in coeffs]
        while cs and abs(cs[-1]) <= TRIM_TOL:
            cs.pop()
        self.coeffs: tuple[complex, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1.0,))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> complex:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, z) -> complex:
        z = require_finite(z)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return Poly(summed)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            prod = np.convolve(
                np.asarray(self.coeffs, dtype=np.complex128),
                np.asarray(other.coeffs, dtype=np.complex128),
            )
            return Poly(prod.tolist())
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, factor) -> "Poly":
        factor = require_finite(factor)
        return Poly(tuple(factor * c for c in self.coeffs))

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def approx_eq(self, other: "Poly", tol: float) -> bool:
        width = max(len(self.coeffs), len(other.coeffs))
        for i in range(width):
            a = self.coeffs[i] if i < len(self.coeffs) else 0j
            b = other.coeffs[i] if i < len(other.coeffs) else 0j
            if abs(a - b) > tol:
                return False
        return True

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "Poly(%r)" % (list(self.coeffs),)


def poly_eval(p: Poly, z) -> complex:
    """Horner evaluation; the zero polynomial evaluates to 0."""
    return p(z)


def canonical_index_order(
    values: Sequence[complex], eq_tol: float = DEFAULT_CONFIG.eq_tol
) -> list[int]:
    """Index order sorting complex values by (re, im), where real parts that
    chain within eq_tol of each other count as tied and fall back to the
    imaginary part. Permutation invariant for any input."""
    order = sorted(range(len(values)), key=lambda i: (values[i].real, values[i].imag))
    result: list[int] = []
    group: list[int] = []
    last_re = None
    for idx in order:
        re = values[idx].real
        if group and re - last_re > eq_tol:
            group.sort(key=lambda i: (values[i].imag, values[i].real))
            result.extend(group)
            group = []
        group.append(idx)
        last_re = re
    if group:
        group.sort(key=lambda i: (values[i].imag, values[i].real))
        result.extend(group)
    return result


def canonical_sort(
    values: Sequence[complex], eq_tol: float = DEFAULT_CONFIG.eq_tol
) -> list[complex]:
    return [values[i] for i in canonical_index_order(values, eq_tol)]


def cluster_complex(
    values: Sequence[complex],
    cluster_tol: float = DEFAULT_CONFIG.cluster_tol,
    eq_tol: float = DEFAULT_CONFIG.eq_tol,
    radii: Sequence[float] | None = None,
) -> list[tuple[complex, int]]:
    """Merge values lying within cluster_tol (transitively) into single
    entries with summed multiplicity, centroid representatives, canonical
    order. Deterministic under permutation of the input.

    When per-value inclusion radii are supplied, two values also merge when
    their disks overlap: they cannot be certified distinct.
    """
    pairs = [(complex(v), 0.0 if radii is None else float(radii[k]))
             for k, v in enumerate(values)]
    pairs.sort(key=lambda t: (t[0].real, t[0].imag, t[1]))
    vals = [v for v, _ in pairs]
    rads = [r for _, r in pairs]
    n = len(vals)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            gap = abs(vals[i] - vals[j])
            if gap <= cluster_tol or gap <= rads[i] + rads[j]:
                parent[find(i)] = find(j)

    groups: dict[int, list[complex]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(vals[i])
    reps = [sum(members) / len(members) for members in groups.values()]
    mults = [len(members) for members in groups.values()]
    order = canonical_index_order(reps, eq_tol)
    return [(reps[i], mults[i]) for i in order]


def poly_roots(p: Poly, cfg: NumericConfig = DEFAULT_CONFIG) -> list[tuple[complex, int]]:
    """All roots with multiplicities, canonical order.

    Multiplicity is recovered by clustering. Roots merge when they lie
    within cluster_tol of each other, or when their residual-based
    inclusion disks (radius deg(p)*|p(root)|/|p'(root)|) overlap: a
    multiple root leaves the iterates straddling it at a spacing set by
    rounding noise, and the disk test recognises that the solver cannot
    certify such iterates as distinct roots.
    """
    if p.is_zero:
        raise ZeroPolynomial("roots of the zero polynomial are undefined")
    if p.degree == 0:
        return []
    raw, ok = _kernel.aberth_roots(
        np.asarray(p.coeffs, dtype=np.complex128), cfg.eq_tol, cfg.max_iter
    )
    if not ok:
        raise NoConvergence(
            "root iteration did not converge within %d sweeps" % cfg.max_iter
        )
    deg = p.degree
    monic = [c / p.leading for c in p.coeffs]
    weights = [(2.0 * k + 1.0) * abs(monic[k]) for k in range(deg + 1)]
    radii = []
    for r in raw:
        zi = complex(r)
        x = abs(zi)
        val = monic[deg]
        dval = 0j
        noise = weights[deg]
        for k in range(deg - 1, -1, -1):
            dval = dval * zi + val
            val = val * zi + monic[k]
            noise = noise * x + weights[k]
        # residual no smaller than its own rounding floor, and a factor 2
        # of headroom: a pair straddling a double root has disks that only
        # touch in exact arithmetic
        res = max(abs(val), 8.881784197001252e-16 * noise)
        radii.append(math.inf if dval == 0 else 2.0 * deg * res / abs(dval))
    return cluster_complex(
        [complex(r) for r in raw], cfg.cluster_tol, cfg.eq_tol, radii
    )


def sylvester_grid(p_desc: Sequence, q_desc: Sequence, zero):
    """Sylvester-style grid for resultant(p, q), entries taken from the
    coefficient sequences (descending). Rows carry q first, then p; this
    row order fixes the sign convention used throughout the package
    (resultant(z - a, z - b) comes out as b - a)."""
    dp = len(p_desc) - 1
    dq = len(q_desc) - 1
    size = dp + dq
    rows = []
    for shift in range(dp):
        rows.append(
            [zero] * shift + list(q_desc) + [zero] * (size - dq - 1 - shift)
        )
    for shift in range(dq):
        rows.append(
            [zero] * shift + list(p_desc) + [zero] * (size - dp - 1 - shift)
        )
    return rows


def resultant(p: Poly, q: Poly) -> complex:
    """Resultant via the Sylvester determinant. Zero exactly when the two
    polynomials share a root (up to numeric tolerance)."""
    if p.is_zero or q.is_zero:
        raise ZeroPolynomial("resultant with the zero polynomial is undefined")
    if p.degree == 0 and q.degree == 0:
        return 1 + 0j
    grid = sylvester_grid(
        list(reversed(p.coeffs)), list(reversed(q.coeffs)), 0j
    )
    return complex(np.linalg.det(np.asarray(grid, dtype=np.complex128)))


def discriminant(p: Poly, cfg: NumericConfig = DEFAULT_CONFIG) -> complex:
    """Discriminant of a monic polynomial of degree >= 2.

    Signed so that the quadratic lambda^2 + b*lambda + c gives b^2 - 4c.
    """
    n = p.degree
    if n < 2:
        raise DegreeTooLow("discriminant needs degree >= 2, got %d" % n)
    if abs(p.leading - 1) > cfg.eq_tol:
        raise NotMonic("leading coefficient %r is not 1 at tolerance" % (p.leading,))
    sign = -1.0 if (n * (n - 1) // 2) % 2 else 1.0
    return sign * resultant(p, p.derivative())

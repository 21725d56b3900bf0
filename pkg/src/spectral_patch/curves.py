"""Spectral curves of polynomial matrices on one affine patch.

A rank-r matrix of polynomials in z has a characteristic polynomial
chi(lambda, z), and the vanishing locus of chi is an r-sheeted branched
cover of the z-plane. This module locates the branch points (roots of the
lambda-discriminant of chi), tracks sheets along paths by nearest-neighbour
continuation, extracts monodromy permutations around branch points, and
realizes the inverse direction of the correspondence: from characteristic
data back to a matrix (companion form) whose spectral cover is the given
curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernel
from .config import DEFAULT_CONFIG, NumericConfig
from .errors import (
    AmbiguousMatching,
    AtBranchPoint,
    NoBranchPoints,
    NoConvergence,
    NonReducedCurve,
)
from .matrix import (
    CharData,
    ConstMatrix,
    PolyMatrix,
    hitchin_map,
    mat_eval,
    poly_grid_det,
)
from .moduli import canonical_eigen, similar
from .poly import (
    Poly,
    canonical_sort,
    poly_roots,
    require_finite,
    sylvester_grid,
)

#: Sample count used by the round-trip verdict.
ROUNDTRIP_SAMPLES = 20


@dataclass(frozen=True)
class SpectralCurve:
    """Characteristic data plus its branch locus.

    disc is the lambda-discriminant of chi as a polynomial in z; the branch
    points are its clustered roots.
    """

    char: CharData
    disc: Poly
    branch_points: tuple[tuple[complex, int], ...]

    @property
    def rank(self) -> int:
        return self.char.rank


@dataclass(frozen=True)
class SheetAssignment:
    """Sheet values over one basepoint, canonical order."""

    basepoint: complex
    sheets: tuple[complex, ...]


@dataclass(frozen=True)
class MonodromyPermutation:
    """One-line permutation carried by a loop around branch_point: the sheet
    starting at index i comes back as the sheet at index perm[i]."""

    branch_point: complex
    perm: tuple[int, ...]
    radius: float
    nodes: int


def lambda_discriminant(char: CharData) -> Poly:
    """Discriminant of chi in lambda, as a Poly in z.

    Same Sylvester convention and sign as poly.discriminant, but computed
    over the polynomial ring with the cofactor determinant. Rank 1 has no
    sheet collisions at all; by convention its discriminant is 1.
    """
    r = char.rank
    if r == 1:
        return Poly.one()
    p_desc: list[Poly] = [Poly.one()] + [char.coeffs[k] for k in range(r - 1, -1, -1)]
    dp_desc: list[Poly] = [Poly.constant(float(r))]
    for k in range(r - 1, 0, -1):
        dp_desc.append(char.coeffs[k].scale(float(k)))
    grid = sylvester_grid(p_desc, dp_desc, Poly.zero())
    res = poly_grid_det(grid)
    sign = -1.0 if (r * (r - 1) // 2) % 2 else 1.0
    return res.scale(sign)


def build_curve(m: PolyMatrix, cfg: NumericConfig = DEFAULT_CONFIG) -> SpectralCurve:
    """Spectral curve of m: characteristic data, discriminant, branch points.

    A discriminant that vanishes identically (all coefficients within eq_tol)
    means chi has a repeated factor everywhere, e.g. any scalar multiple of
    the identity; that curve is non-reduced and rejected.
    """
    char = hitchin_map(m)
    disc = lambda_discriminant(char)
    if disc.is_zero or all(abs(c) <= cfg.eq_tol for c in disc.coeffs):
        raise NonReducedCurve(
            "discriminant vanishes identically: the curve has a repeated component"
        )
    if disc.degree >= 1:
        branch = tuple(poly_roots(disc, cfg))
    else:
        branch = ()
    return SpectralCurve(char=char, disc=disc, branch_points=branch)


def _distance_to_branch(curve: SpectralCurve, z: complex) -> float:
    if not curve.branch_points:
        return math.inf
    return min(abs(z - b) for b, _ in curve.branch_points)


def _raw_sheets(curve: SpectralCurve, z: complex, cfg: NumericConfig) -> list[complex]:
    coeffs = curve.char.lambda_coeffs_at(z)
    raw, ok = _kernel.aberth_roots(
        np.asarray(coeffs, dtype=np.complex128), cfg.eq_tol, cfg.max_iter
    )
    if not ok:
        raise NoConvergence(
            "sheet roots did not converge within %d sweeps at z=%r" % (cfg.max_iter, z)
        )
    return [complex(v) for v in raw]


def _check_separation(values: Sequence[complex], z: complex, cfg: NumericConfig):
    n = len(values)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= cfg.cluster_tol:
                raise AtBranchPoint(
                    "sheets collide at z=%r (separation <= cluster_tol)" % (z,)
                )


def sheets_at(
    curve: SpectralCurve, z, cfg: NumericConfig = DEFAULT_CONFIG
) -> tuple[complex, ...]:
    """The r sheet values over z, canonical order.

    z must keep clear of the branch locus: both the recorded branch points
    (within cluster_tol) and any de-facto collision of the computed roots
    raise AtBranchPoint.
    """
    z = require_finite(z)
    if _distance_to_branch(curve, z) <= cfg.cluster_tol:
        raise AtBranchPoint("z=%r lies within cluster_tol of a branch point" % (z,))
    raw = _raw_sheets(curve, z, cfg)
    _check_separation(raw, z, cfg)
    return tuple(canonical_sort(raw, cfg.eq_tol))


def _match_step(
    current: list[complex],
    target: Sequence[complex],
) -> list[int] | None:
    """Nearest-neighbour assignment with a hard factor-2 margin.

    Returns target indices per current sheet, or None when any sheet's
    nearest candidate is not decisively (2x) closer than its second choice,
    or two sheets claim the same candidate.
    """
    n = len(target)
    chosen: list[int] = []
    for value in current:
        dists = sorted(range(n), key=lambda j: abs(value - target[j]))
        best = dists[0]
        if n > 1:
            d1 = abs(value - target[best])
            d2 = abs(value - target[dists[1]])
            if d2 < 2.0 * d1:
                return None
        chosen.append(best)
    if len(set(chosen)) != n:
        return None
    return chosen


def _advance(
    curve: SpectralCurve,
    current: list[complex],
    z_from: complex,
    z_to: complex,
    cfg: NumericConfig,
    depth: int,
) -> list[complex]:
    target = _raw_sheets(curve, z_to, cfg)
    _check_separation(target, z_to, cfg)
    chosen = _match_step(current, target)
    if chosen is not None:
        return [target[j] for j in chosen]
    if depth >= 3:
        raise AmbiguousMatching(
            "sheet matching stayed ambiguous from %r to %r after 3 bisections"
            % (z_from, z_to)
        )
    mid = (z_from + z_to) / 2.0
    if _distance_to_branch(curve, mid) <= cfg.cluster_tol:
        raise AtBranchPoint(
            "path refinement hit a branch point near z=%r" % (mid,)
        )
    half = _advance(curve, current, z_from, mid, cfg, depth + 1)
    return _advance(curve, half, mid, z_to, cfg, depth + 1)


def continue_sheets(
    curve: SpectralCurve,
    path: Sequence[complex],
    start: SheetAssignment,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> tuple[SheetAssignment, tuple[int, ...]]:
    """Track sheet values along a piecewise-linear path.

    Every node must stay farther than cluster_tol from all branch points.
    Ambiguous steps are bisected (up to three levels per segment) before
    AmbiguousMatching surfaces. Returns the assignment over the final node
    together with the permutation taking start indices to end indices; for a
    closed path that permutation is the monodromy of the loop.
    """
    nodes = [require_finite(z) for z in path]
    if not nodes:
        raise ValueError("empty path")
    if abs(nodes[0] - start.basepoint) > cfg.eq_tol:
        raise ValueError("path must begin at the start basepoint")
    for z in nodes:
        if _distance_to_branch(curve, z) <= cfg.cluster_tol:
            raise AtBranchPoint(
                "path node z=%r lies within cluster_tol of a branch point" % (z,)
            )
    current = list(start.sheets)
    for k in range(1, len(nodes)):
        current = _advance(curve, current, nodes[k - 1], nodes[k], cfg, 0)
    _check_separation(current, nodes[-1], cfg)
    ordered = canonical_sort(current, cfg.eq_tol)
    end = SheetAssignment(basepoint=nodes[-1], sheets=tuple(ordered))
    perm = tuple(ordered.index(v) for v in current)
    return end, perm


def monodromy_radius(curve: SpectralCurve, bp_index: int) -> float:
    """Loop radius around one branch point: 1, shrunk to half the distance
    to the nearest other branch point when that is closer."""
    points = [b for b, _ in curve.branch_points]
    center = points[bp_index]
    radius = 1.0
    for i, b in enumerate(points):
        if i != bp_index:
            radius = min(radius, abs(b - center) / 2.0)
    return radius


def _circle(center: complex, radius: float, nodes: int) -> list[complex]:
    path = [
        center + radius * complex(math.cos(2.0 * math.pi * k / nodes),
                                  math.sin(2.0 * math.pi * k / nodes))
        for k in range(nodes)
    ]
    path.append(path[0])  # exact closure, no trigonometric drift
    return path


def monodromy(
    curve: SpectralCurve,
    bp_index: int,
    cfg: NumericConfig = DEFAULT_CONFIG,
    nodes: int = 256,
) -> MonodromyPermutation:
    """Permutation of sheets around one branch point.

    Runs counterclockwise around a circle whose radius keeps other branch
    points outside. If matching stays ambiguous the whole loop is retried
    once with four times as many nodes.
    """
    if not curve.branch_points:
        raise NoBranchPoints("curve has no branch points")
    if not (0 <= bp_index < len(curve.branch_points)):
        raise IndexError(
            "bp_index %d out of range 0..%d"
            % (bp_index, len(curve.branch_points) - 1)
        )
    center = curve.branch_points[bp_index][0]
    radius = monodromy_radius(curve, bp_index)

    def run(count: int) -> tuple[int, ...]:
        path = _circle(center, radius, count)
        basepoint = path[0]
        start = SheetAssignment(
            basepoint=basepoint, sheets=sheets_at(curve, basepoint, cfg)
        )
        _, perm = continue_sheets(curve, path, start, cfg)
        return perm

    try:
        perm = run(nodes)
        used = nodes
    except AmbiguousMatching:
        used = nodes * 4
        perm = run(used)
    return MonodromyPermutation(
        branch_point=center, perm=perm, radius=radius, nodes=used
    )


def companion_from_base(h: CharData) -> PolyMatrix:
    """Companion-form section of the characteristic map.

    Subdiagonal of ones, last column the negated coefficients; its
    characteristic polynomial is exactly h. This is one concrete choice of
    matrix over each base point, and it stays well-defined over branch
    points where a diagonal form does not exist.
    """
    r = h.rank
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            if j == r - 1:
                row.append(-h.coeffs[i])
            elif i == j + 1:
                row.append(Poly.one())
            else:
                row.append(Poly.zero())
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))


def pushforward_matrix(
    curve: SpectralCurve, z, cfg: NumericConfig = DEFAULT_CONFIG
) -> ConstMatrix:
    """Constant matrix over z built from the sheet values.

    Away from the branch locus this is diag(sheets). At or near a branch
    point the sheets are not separable, so the construction switches to the
    companion matrix of chi(., z), which encodes the same characteristic
    data without needing distinct eigenvalues. Never raises for finite z.
    """
    z = require_finite(z)
    r = curve.rank
    use_companion = _distance_to_branch(curve, z) <= cfg.cluster_tol
    if not use_companion:
        try:
            sheets = sheets_at(curve, z, cfg)
        except AtBranchPoint:
            use_companion = True
    if use_companion:
        coeffs = curve.char.lambda_coeffs_at(z)
        rows = []
        for i in range(r):
            row = []
            for j in range(r):
                if j == r - 1:
                    row.append(-coeffs[i])
                elif i == j + 1:
                    row.append(1.0 + 0j)
                else:
                    row.append(0j)
            rows.append(tuple(row))
        return ConstMatrix(tuple(rows))
    return ConstMatrix(
        tuple(
            tuple(sheets[i] if i == j else 0j for j in range(r))
            for i in range(r)
        )
    )


@dataclass(frozen=True)
class RoundtripReport:
    max_coeff_error: float
    pointwise_class_agreement: bool
    sample_count: int


def _char_of_const(a: ConstMatrix) -> CharData:
    return hitchin_map(PolyMatrix.from_const(a))


def _classes_agree(a: ConstMatrix, b: ConstMatrix, cfg: NumericConfig) -> bool:
    if a.rank == 2 and b.rank == 2:
        return similar(a, b, cfg)
    # Ranks other than 2 fall outside the 2x2 classifier; compare the full
    # clustered spectra instead, which pins the class at semisimple points.
    ea = canonical_eigen([v for v, m in poly_roots_of_const(a, cfg) for _ in range(m)], cfg)
    eb = canonical_eigen([v for v, m in poly_roots_of_const(b, cfg) for _ in range(m)], cfg)
    return ea.approx_eq(eb, cfg.cluster_tol)


def poly_roots_of_const(a: ConstMatrix, cfg: NumericConfig) -> list[tuple[complex, int]]:
    """Eigenvalues of a constant matrix through its characteristic data."""
    char = _char_of_const(a)
    coeffs = char.lambda_coeffs_at(0.0)
    return poly_roots(Poly(coeffs), cfg)


def roundtrip_sample_points(curve: SpectralCurve, count: int = ROUNDTRIP_SAMPLES) -> list[complex]:
    """Deterministic sample ring: every point is at distance >= 1 from every
    branch point, since the radius exceeds the largest branch modulus by 1."""
    top = max((abs(b) for b, _ in curve.branch_points), default=0.0)
    radius = 1.0 + top
    return [
        radius
        * complex(math.cos(2.0 * math.pi * j / count), math.sin(2.0 * math.pi * j / count))
        for j in range(count)
    ]


def roundtrip_check(
    m: PolyMatrix, cfg: NumericConfig = DEFAULT_CONFIG
) -> RoundtripReport:
    """Two-way consistency of the correspondence for one matrix.

    Forward-backward on coefficients: the characteristic data of the
    companion section of hitchin_map(m) is compared against hitchin_map(m)
    coefficientwise. Pointwise: at deterministic sample points away from
    the branch locus, m evaluated there must lie in the same similarity
    class as the pushforward matrix of the curve.
    """
    h = hitchin_map(m)
    curve = build_curve(m, cfg)
    h_back = hitchin_map(companion_from_base(h))
    err = 0.0
    for pa, pb in zip(h.coeffs, h_back.coeffs):
        width = max(len(pa.coeffs), len(pb.coeffs))
        for i in range(width):
            ca = pa.coeffs[i] if i < len(pa.coeffs) else 0j
            cb = pb.coeffs[i] if i < len(pb.coeffs) else 0j
            err = max(err, abs(ca - cb))
    agreement = True
    for z in roundtrip_sample_points(curve):
        direct = mat_eval(m, z)
        pushed = pushforward_matrix(curve, z, cfg)
        if not _classes_agree(direct, pushed, cfg):
            agreement = False
            break
    return RoundtripReport(
        max_coeff_error=err,
        pointwise_class_agreement=agreement,
        sample_count=ROUNDTRIP_SAMPLES,
    )

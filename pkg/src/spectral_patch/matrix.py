"""Small square matrices with polynomial or constant entries.

Ranks are capped at 4 and entry degrees at 32: determinants go through
cofactor expansion and characteristic polynomials through the
Faddeev-LeVerrier recurrence, both of which stay trivial at that scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT_CONFIG, NumericConfig
from .errors import (
    DegreeTooLarge,
    RankMismatch,
    RankTooLarge,
    Singular,
)
from .poly import Poly, require_finite

MAX_RANK = 4
MAX_ENTRY_DEGREE = 32


def _square_rows(entries, what):
    rows = tuple(tuple(row) for row in entries)
    rank = len(rows)
    if rank < 1:
        raise ValueError("%s needs at least one row" % what)
    if rank > MAX_RANK:
        raise RankTooLarge("%s rank %d exceeds %d" % (what, rank, MAX_RANK))
    for row in rows:
        if len(row) != rank:
            raise ValueError("%s must be square" % what)
    return rows, rank


class ConstMatrix:
    """Immutable square matrix of complex scalars."""

    __slots__ = ("entries", "rank")

    def __init__(self, entries: Iterable[Iterable[complex]]):
        rows, rank = _square_rows(entries, "ConstMatrix")
        self.entries = tuple(tuple(require_finite(v) for v in row) for row in rows)
        self.rank = rank

    @classmethod
    def identity(cls, rank: int) -> "ConstMatrix":
        return cls(
            tuple(
                tuple(1.0 if i == j else 0.0 for j in range(rank))
                for i in range(rank)
            )
        )

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.complex128)

    def __eq__(self, other) -> bool:
        return isinstance(other, ConstMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "ConstMatrix(%r)" % (list(list(r) for r in self.entries),)


class PolyMatrix:
    """Immutable square matrix of Poly entries."""

    __slots__ = ("entries", "rank")

    def __init__(self, entries: Iterable[Iterable[Poly]]):
        rows, rank = _square_rows(entries, "PolyMatrix")
        for row in rows:
            for p in row:
                if not isinstance(p, Poly):
                    raise TypeError("PolyMatrix entries must be Poly")
                if p.degree > MAX_ENTRY_DEGREE:
                    raise DegreeTooLarge(
                        "entry degree %d exceeds %d" % (p.degree, MAX_ENTRY_DEGREE)
                    )
        self.entries = rows
        self.rank = rank

    @classmethod
    def from_const(cls, m: ConstMatrix) -> "PolyMatrix":
        return cls(
            tuple(tuple(Poly.constant(v) for v in row) for row in m.entries)
        )

    def max_entry_degree(self) -> int:
        return max(p.degree for row in self.entries for p in row)

    def as_const(self) -> ConstMatrix:
        """Demote to ConstMatrix; every entry must have degree <= 0."""
        if self.max_entry_degree() > 0:
            raise ValueError("matrix has nonconstant entries")
        return ConstMatrix(
            tuple(
                tuple(p.coeffs[0] if p.coeffs else 0j for p in row)
                for row in self.entries
            )
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "PolyMatrix(%r)" % (list(list(r) for r in self.entries),)


@dataclass(frozen=True)
class CharData:
    """Characteristic polynomial of a rank-r matrix, monic in lambda.

    coeffs holds the non-leading coefficients ascending in lambda:
    chi(lambda, z) = lambda^r + coeffs[r-1](z) lambda^(r-1) + ... + coeffs[0](z).
    For rank 2 that means coeffs[1] = -trace and coeffs[0] = determinant.
    """

    rank: int
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        if not (1 <= self.rank <= MAX_RANK):
            raise RankTooLarge("rank %d outside 1..%d" % (self.rank, MAX_RANK))
        if len(self.coeffs) != self.rank:
            raise ValueError(
                "expected %d coefficients, got %d" % (self.rank, len(self.coeffs))
            )
        for p in self.coeffs:
            if not isinstance(p, Poly):
                raise TypeError("CharData coefficients must be Poly")

    def lambda_coeffs_at(self, z) -> list[complex]:
        """Ascending complex coefficients of chi(., z), including the monic 1."""
        out = [p(z) for p in self.coeffs]
        out.append(1 + 0j)
        return out


def mat_eval(m: PolyMatrix, z) -> ConstMatrix:
    """Evaluate every entry at z."""
    z = require_finite(z)
    return ConstMatrix(
        tuple(tuple(p(z) for p in row) for row in m.entries)
    )


def poly_grid_det(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square grid of Poly entries by cofactor expansion
    along the first row, minors memoised on the surviving column set.
    No rank cap: Sylvester grids larger than MAX_RANK come through here."""
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("determinant needs a square grid")
    if n == 0:
        return Poly.one()
    cache: dict[tuple[int, ...], Poly] = {}

    def minor(cols: tuple[int, ...]) -> Poly:
        if not cols:
            return Poly.one()
        got = cache.get(cols)
        if got is not None:
            return got
        row = rows[n - len(cols)]
        acc = Poly.zero()
        for pos, c in enumerate(cols):
            entry = row[c]
            if entry.is_zero:
                continue
            rest = cols[:pos] + cols[pos + 1 :]
            term = entry * minor(rest)
            acc = acc + (term if pos % 2 == 0 else -term)
        cache[cols] = acc
        return acc

    return minor(tuple(range(n)))


def mat_det(m: PolyMatrix) -> Poly:
    """Determinant as a Poly (cofactor expansion)."""
    if m.rank > MAX_RANK:
        raise RankTooLarge("rank %d exceeds %d" % (m.rank, MAX_RANK))
    return poly_grid_det(m.entries)


def _pm_mul(a, b, rank):
    out = []
    for i in range(rank):
        row = []
        for j in range(rank):
            acc = Poly.zero()
            for k in range(rank):
                if not (a[i][k].is_zero or b[k][j].is_zero):
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def char_poly(m: PolyMatrix) -> CharData:
    """Characteristic polynomial via the Faddeev-LeVerrier recurrence.

    Works over the coefficient ring directly: the only divisions are by the
    integers 1..rank, so polynomial entries never need inversion. Agrees
    with cofactor expansion of det(lambda I - m); the test-suite keeps that
    second route alive as an oracle.
    """
    r = m.rank
    phi = m.entries
    ident = tuple(
        tuple(Poly.one() if i == j else Poly.zero() for j in range(r))
        for i in range(r)
    )
    coeffs: list[Poly] = [Poly.zero()] * (r + 1)
    coeffs[r] = Poly.one()
    mk = tuple(tuple(Poly.zero() for _ in range(r)) for _ in range(r))
    for k in range(1, r + 1):
        step = _pm_mul(phi, mk, r)
        ck = coeffs[r - k + 1]
        mk = tuple(
            tuple(
                step[i][j] + ck if i == j else step[i][j]
                for j in range(r)
            )
            for i in range(r)
        )
        prod = _pm_mul(phi, mk, r)
        trace = Poly.zero()
        for i in range(r):
            trace = trace + prod[i][i]
        coeffs[r - k] = trace.scale(-1.0 / k)
    return CharData(rank=r, coeffs=tuple(coeffs[:r]))


def hitchin_map(m: PolyMatrix) -> CharData:
    """Invariants of m: the tuple of characteristic coefficients.

    Constant under conjugation, which is what makes it a well-defined map on
    similarity classes rather than on matrices.
    """
    return char_poly(m)


def conjugate(
    m: PolyMatrix, p: ConstMatrix, cfg: NumericConfig = DEFAULT_CONFIG
) -> PolyMatrix:
    """p^{-1} m p with a constant change of basis.

    The inverse is computed numerically once; the entry arithmetic stays in
    the polynomial ring.
    """
    if p.rank != m.rank:
        raise RankMismatch(
            "matrix rank %d vs basis rank %d" % (m.rank, p.rank)
        )
    pn = p.to_numpy()
    det = complex(np.linalg.det(pn))
    if abs(det) <= cfg.eq_tol:
        raise Singular("basis matrix determinant %r is zero at tolerance" % (det,))
    pinv = np.linalg.inv(pn)
    r = m.rank
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            acc = Poly.zero()
            for k in range(r):
                for l in range(r):
                    factor = complex(pinv[i, k]) * complex(pn[l, j])
                    if factor != 0 and not m.entries[k][l].is_zero:
                        acc = acc + m.entries[k][l].scale(factor)
            row.append(acc)
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))

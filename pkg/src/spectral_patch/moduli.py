"""Similarity classification of constant 2x2 matrices.

The classification is a tolerance-aware trichotomy:

  Distinct -- two eigenvalues separated by more than cluster_tol,
  Scalar   -- repeated eigenvalue and the matrix is within eq_tol
              (Frobenius) of that multiple of the identity,
  Jordan   -- repeated eigenvalue, not scalar; the one non-diagonalizable
              shape at rank 2.

Semisimple means Distinct or Scalar. Eigenvalue tuples are kept in a
canonical order so classes compare positionally.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .config import DEFAULT_CONFIG, NumericConfig
from .errors import RankMismatch, WrongRank
from .matrix import ConstMatrix
from .poly import Poly, cluster_complex, poly_roots


class Kind(enum.Enum):
    DISTINCT = "Distinct"
    SCALAR = "Scalar"
    JORDAN = "Jordan"


@dataclass(frozen=True)
class EigenTuple:
    """Clustered eigenvalues with multiplicities, canonical order."""

    values: tuple[tuple[complex, int], ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.values)

    def expanded(self) -> list[complex]:
        out: list[complex] = []
        for v, m in self.values:
            out.extend([v] * m)
        return out

    def approx_eq(self, other: "EigenTuple", tol: float) -> bool:
        if len(self.values) != len(other.values):
            return False
        for (va, ma), (vb, mb) in zip(self.values, other.values):
            if ma != mb or abs(va - vb) > tol:
                return False
        return True


@dataclass(frozen=True)
class SimilarityClass:
    kind: Kind
    eigen: EigenTuple


@dataclass(frozen=True)
class ModuliPoint:
    """Coordinates (trace, determinant). The order is part of the data."""

    trace: complex
    determinant: complex


def canonical_eigen(
    values: Sequence[complex], cfg: NumericConfig = DEFAULT_CONFIG
) -> EigenTuple:
    """Cluster within cluster_tol, order canonically. Permutation invariant."""
    return EigenTuple(tuple(cluster_complex(values, cfg.cluster_tol, cfg.eq_tol)))


def _eigen_pairs(a: ConstMatrix, cfg: NumericConfig) -> tuple[tuple[complex, int], ...]:
    (a00, a01), (a10, a11) = a.entries
    if a10 == 0 or a01 == 0:
        # Triangular: the diagonal is exactly the spectrum. Besides being
        # cheap, this makes normal forms exact fixed points.
        return tuple(cluster_complex([a00, a11], cfg.cluster_tol, cfg.eq_tol))
    char = Poly([a00 * a11 - a01 * a10, -(a00 + a11), 1.0])
    return tuple(poly_roots(char, cfg))


def classify_2x2(a: ConstMatrix, cfg: NumericConfig = DEFAULT_CONFIG) -> SimilarityClass:
    """Similarity class of a constant 2x2 matrix."""
    if a.rank != 2:
        raise RankMismatch("classification is defined for rank 2, got %d" % a.rank)
    pairs = _eigen_pairs(a, cfg)
    eigen = EigenTuple(pairs)
    if len(pairs) == 2:
        return SimilarityClass(Kind.DISTINCT, eigen)
    lam = pairs[0][0]
    (a00, a01), (a10, a11) = a.entries
    fro = math.sqrt(
        abs(a00 - lam) ** 2 + abs(a01) ** 2 + abs(a10) ** 2 + abs(a11 - lam) ** 2
    )
    kind = Kind.SCALAR if fro <= cfg.eq_tol else Kind.JORDAN
    return SimilarityClass(kind, eigen)


def is_semisimple(a: ConstMatrix, cfg: NumericConfig = DEFAULT_CONFIG) -> bool:
    """True for Distinct and Scalar classes; these are the stable points
    whose conjugation orbits are closed."""
    return classify_2x2(a, cfg).kind is not Kind.JORDAN


def moduli_point(t: EigenTuple) -> ModuliPoint:
    """(trace, determinant) of an unordered eigenvalue pair.

    The quotient by the swap action is taken by symmetric functions, so both
    orderings of the pair land on the same point.
    """
    if t.total_multiplicity != 2:
        raise WrongRank(
            "moduli point needs total multiplicity 2, got %d" % t.total_multiplicity
        )
    lam = t.expanded()
    return ModuliPoint(trace=lam[0] + lam[1], determinant=lam[0] * lam[1])


def similar(a: ConstMatrix, b: ConstMatrix, cfg: NumericConfig = DEFAULT_CONFIG) -> bool:
    """Same kind and same eigenvalues within cluster_tol.

    Distinguishes what the moduli point alone cannot: a Scalar and a Jordan
    matrix can share (trace, determinant) yet are never similar.
    """
    ca = classify_2x2(a, cfg)
    cb = classify_2x2(b, cfg)
    return ca.kind is cb.kind and ca.eigen.approx_eq(cb.eigen, cfg.cluster_tol)


def normal_form(a: ConstMatrix, cfg: NumericConfig = DEFAULT_CONFIG) -> ConstMatrix:
    """Canonical representative of the class of a.

    Distinct gives diag(l1, l2) in canonical order, Scalar gives l*I, Jordan
    gives the single-block form with a unit superdiagonal. Applying the map
    twice returns the second input unchanged, exactly: representatives are
    triangular, so their spectra are read off the diagonal without any root
    finding, and the construction reproduces itself.
    """
    cls = classify_2x2(a, cfg)
    if cls.kind is Kind.DISTINCT:
        (l1, _), (l2, _) = cls.eigen.values
        return ConstMatrix(((l1, 0.0), (0.0, l2)))
    lam = cls.eigen.values[0][0]
    if cls.kind is Kind.SCALAR:
        return ConstMatrix(((lam, 0.0), (0.0, lam)))
    return ConstMatrix(((lam, 1.0), (0.0, lam)))

"""Similarity classes, characteristic data, and branched spectral covers for
small matrices with polynomial entries on a single affine patch."""

from ._kernel import backend_name
from .config import DEFAULT_CONFIG, NumericConfig
from .curves import (
    MonodromyPermutation,
    RoundtripReport,
    SheetAssignment,
    SpectralCurve,
    build_curve,
    companion_from_base,
    continue_sheets,
    lambda_discriminant,
    monodromy,
    pushforward_matrix,
    roundtrip_check,
    sheets_at,
)
from .errors import (
    AmbiguousMatching,
    AtBranchPoint,
    DegreeTooLarge,
    DegreeTooLow,
    DocumentError,
    NoBranchPoints,
    NoConvergence,
    NonReducedCurve,
    NotMonic,
    RankMismatch,
    RankTooLarge,
    Singular,
    SpectralPatchError,
    WrongRank,
    ZeroPolynomial,
)
from .matrix import (
    CharData,
    ConstMatrix,
    PolyMatrix,
    char_poly,
    conjugate,
    hitchin_map,
    mat_det,
    mat_eval,
)
from .moduli import (
    EigenTuple,
    Kind,
    ModuliPoint,
    SimilarityClass,
    canonical_eigen,
    classify_2x2,
    is_semisimple,
    moduli_point,
    normal_form,
    similar,
)
from .poly import (
    Poly,
    canonical_sort,
    cluster_complex,
    discriminant,
    poly_eval,
    poly_roots,
    resultant,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousMatching",
    "AtBranchPoint",
    "CharData",
    "ConstMatrix",
    "DEFAULT_CONFIG",
    "DegreeTooLarge",
    "DegreeTooLow",
    "DocumentError",
    "EigenTuple",
    "Kind",
    "ModuliPoint",
    "MonodromyPermutation",
    "NoBranchPoints",
    "NoConvergence",
    "NonReducedCurve",
    "NotMonic",
    "NumericConfig",
    "Poly",
    "PolyMatrix",
    "RankMismatch",
    "RankTooLarge",
    "RoundtripReport",
    "SheetAssignment",
    "SimilarityClass",
    "Singular",
    "SpectralCurve",
    "SpectralPatchError",
    "WrongRank",
    "ZeroPolynomial",
    "backend_name",
    "build_curve",
    "canonical_eigen",
    "canonical_sort",
    "char_poly",
    "classify_2x2",
    "cluster_complex",
    "companion_from_base",
    "conjugate",
    "continue_sheets",
    "discriminant",
    "hitchin_map",
    "is_semisimple",
    "lambda_discriminant",
    "mat_det",
    "mat_eval",
    "moduli_point",
    "monodromy",
    "normal_form",
    "poly_eval",
    "poly_roots",
    "pushforward_matrix",
    "resultant",
    "roundtrip_check",
    "sheets_at",
    "similar",
]

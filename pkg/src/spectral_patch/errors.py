"""Exception types shared across the library."""


class SpectralPatchError(Exception):
    """Base class for every error raised by this package."""


class ZeroPolynomial(SpectralPatchError):
    """An operation received the zero polynomial where it is undefined."""


class NoConvergence(SpectralPatchError):
    """The simultaneous root iteration did not settle within max_iter sweeps."""


class DegreeTooLow(SpectralPatchError):
    """Discriminants need degree at least two."""


class NotMonic(SpectralPatchError):
    """The leading coefficient differs from one beyond tolerance."""


class RankTooLarge(SpectralPatchError):
    """Matrix rank exceeds the supported bound."""


class DegreeTooLarge(SpectralPatchError):
    """A matrix entry exceeds the supported coefficient degree."""


class RankMismatch(SpectralPatchError):
    """Operands have incompatible ranks, or an operation needs rank two."""


class Singular(SpectralPatchError):
    """The conjugating matrix is not invertible at tolerance."""


class WrongRank(SpectralPatchError):
    """An eigenvalue tuple does not carry total multiplicity two."""


class AtBranchPoint(SpectralPatchError):
    """Sheet values collide: the query point sits at (or numerically on top
    of) a branch point."""


class AmbiguousMatching(SpectralPatchError):
    """Nearest-neighbour sheet tracking could not make a safe assignment even
    after refining the path."""


class NoBranchPoints(SpectralPatchError):
    """Monodromy was requested for a curve without branch points."""


class NonReducedCurve(SpectralPatchError):
    """The discriminant vanishes identically, so the spectral curve carries a
    repeated component and sheet geometry is undefined."""


class DocumentError(SpectralPatchError):
    """Input document failed validation. Carries one line per problem."""

    def __init__(self, diagnostics):
        if isinstance(diagnostics, str):
            diagnostics = [diagnostics]
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))

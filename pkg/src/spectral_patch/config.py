"""Shared numeric tolerance configuration.

One frozen object travels through every tolerance-sensitive operation so a
pipeline cannot mix inconsistent thresholds.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class NumericConfig:
    """Tolerances and iteration budget for all numeric kernels.

    eq_tol      -- scalar equality / trailing-coefficient threshold
    cluster_tol -- root and eigenvalue clustering threshold
    max_iter    -- sweep budget for the simultaneous root iteration
    """

    eq_tol: float = 1e-9
    cluster_tol: float = 1e-7
    max_iter: int = 200

    def __post_init__(self):
        if not (self.eq_tol > 0.0 and self.cluster_tol > 0.0):
            raise ValueError("tolerances must be positive")
        if self.eq_tol > self.cluster_tol:
            raise ValueError("eq_tol must not exceed cluster_tol")
        if not isinstance(self.max_iter, int) or self.max_iter < 1:
            raise ValueError("max_iter must be a positive integer")


DEFAULT_CONFIG = NumericConfig()

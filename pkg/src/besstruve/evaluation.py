"""Evaluation controls, results, and the error types shared across modules."""

from __future__ import annotations

import math
from dataclasses import dataclass


class DomainError(ValueError):
    """An argument lies outside the supported domain."""


class ConvergenceError(RuntimeError):
    """No evaluation path reached the requested tolerance."""


PATH_CLOSED_FORM = "closed_form"
PATH_TAYLOR = "taylor"
PATH_QUADRATURE = "quadrature"

_PATH_RANK = {PATH_CLOSED_FORM: 0, PATH_TAYLOR: 1, PATH_QUADRATURE: 2}


def worst_path(*paths: str) -> str:
    """The least-preferred path among those taken (quadrature ranks worst)."""
    return max(paths, key=_PATH_RANK.__getitem__)


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and path thresholds for the derivative and series evaluators.

    abs_tol              target absolute tolerance of a returned value
    small_z_threshold    below this |z| the term-wise Taylor branch is used
    cancellation_guard   the closed form is discarded (quadrature fallback)
                         when its term-magnitude sum exceeds guard * |value|
    max_terms            cap on Taylor series terms
    """

    abs_tol: float = 1e-10
    small_z_threshold: float = 0.5
    cancellation_guard: float = 1e12
    max_terms: int = 60

    def __post_init__(self) -> None:
        for name in ("abs_tol", "small_z_threshold", "cancellation_guard"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v}")
        if self.cancellation_guard <= 1:
            raise ValueError("cancellation_guard must exceed 1")
        if self.max_terms <= 0:
            raise ValueError("max_terms must be positive")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_err_estimate: float
    terms_used: int
    path: str

    def __post_init__(self) -> None:
        if not (math.isfinite(self.abs_err_estimate) and self.abs_err_estimate >= 0):
            raise ValueError("abs_err_estimate must be finite and nonnegative")

"""Single proper splittings A = U - V.

A splitting is *proper* when U has the same column space and null space as A.
Construction validates both subspace conditions through their orthogonal
projectors; classification applies the entrywise sign tests that drive the
convergence theory.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    ToleranceConfig,
    as_matrix,
    is_nonneg,
    max_abs_diff,
    pinv,
    spectral_radius,
)
from .errors import HypothesisUnmetError, NotProperError, ShapeMismatchError

__all__ = [
    "SplittingClass",
    "ProperSplitting",
    "subspace_residuals",
    "make_proper_splitting",
    "classify_single",
    "ProjectorIdentityReport",
    "check_projector_identities",
    "SemimonotoneEquivalenceReport",
    "check_semimonotone_equivalence",
]


class SplittingClass(enum.Enum):
    PROPER_REGULAR = "ProperRegular"
    PROPER_WEAK_REGULAR = "ProperWeakRegular"
    PROPER_ONLY = "ProperOnly"


@dataclass(frozen=True, eq=False)
class ProperSplitting:
    """Validated triple A = U - V with range(U) = range(A), null(U) = null(A)."""

    a: np.ndarray
    u: np.ndarray
    v: np.ndarray


def subspace_residuals(a, u, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> tuple[float, float]:
    """Entrywise gaps between the projector pairs of a and u.

    Returns ``(|A A^+ - U U^+|, |A^+ A - U^+ U|)``; the first measures the
    column-space condition, the second the null-space condition.
    """
    a = as_matrix(a)
    u = as_matrix(u)
    a_pinv = pinv(a, cfg)
    u_pinv = pinv(u, cfg)
    range_res = max_abs_diff(a @ a_pinv, u @ u_pinv)
    rowspace_res = max_abs_diff(a_pinv @ a, u_pinv @ u)
    return range_res, rowspace_res


def make_proper_splitting(a, u, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> ProperSplitting:
    """Validate A = U - V with V := U - A; raises NotProperError on failure."""
    a = as_matrix(a, readonly=True)
    u = as_matrix(u, readonly=True)
    if a.shape != u.shape:
        raise ShapeMismatchError(f"A has shape {a.shape} but U has shape {u.shape}")
    range_res, nullspace_res = subspace_residuals(a, u, cfg)
    if range_res > cfg.eq_abs_tol or nullspace_res > cfg.eq_abs_tol:
        raise NotProperError(range_res, nullspace_res, cfg.eq_abs_tol)
    v = as_matrix(u - a, readonly=True)
    return ProperSplitting(a, u, v)


def classify_single(s: ProperSplitting, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> SplittingClass:
    """Strongest applicable tag from the sign tests on U^+, V and U^+ V."""
    u_pinv = pinv(s.u, cfg)
    if is_nonneg(u_pinv, cfg):
        if is_nonneg(s.v, cfg):
            return SplittingClass.PROPER_REGULAR
        if is_nonneg(u_pinv @ s.v, cfg):
            return SplittingClass.PROPER_WEAK_REGULAR
    return SplittingClass.PROPER_ONLY


@dataclass(frozen=True)
class ProjectorIdentityReport:
    """Residuals of A A^+ = U U^+ and A^+ A = U^+ U for a proper splitting."""

    range_residual: float
    rowspace_residual: float
    passed: bool


def check_projector_identities(
    s: ProperSplitting, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> ProjectorIdentityReport:
    range_res, rowspace_res = subspace_residuals(s.a, s.u, cfg)
    passed = range_res <= cfg.eq_abs_tol and rowspace_res <= cfg.eq_abs_tol
    return ProjectorIdentityReport(range_res, rowspace_res, passed)


@dataclass(frozen=True)
class SemimonotoneEquivalenceReport:
    """Joint evaluation of the three equivalent conditions for A^+ >= 0.

    For a proper weak regular splitting the three predicates ``A^+ >= 0``,
    ``A^+ V >= 0`` and ``rho(U^+ V) < 1`` hold or fail together; ``agree``
    records whether the computed verdicts actually did.
    """

    a_pinv_nonneg: bool
    a_pinv_v_nonneg: bool
    iteration_radius: float
    radius_below_one: bool
    agree: bool


def check_semimonotone_equivalence(
    s: ProperSplitting, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> SemimonotoneEquivalenceReport:
    cls = classify_single(s, cfg)
    if cls is SplittingClass.PROPER_ONLY:
        raise HypothesisUnmetError(
            "three-way equivalence requires a proper weak regular splitting"
        )
    a_pinv = pinv(s.a, cfg)
    cond_semi = is_nonneg(a_pinv, cfg)
    cond_av = is_nonneg(a_pinv @ s.v, cfg)
    rho = spectral_radius(pinv(s.u, cfg) @ s.v, cfg)
    cond_rho = rho < 1.0
    agree = cond_semi == cond_av == cond_rho
    return SemimonotoneEquivalenceReport(cond_semi, cond_av, rho, cond_rho, agree)

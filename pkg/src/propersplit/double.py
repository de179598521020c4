"""Proper double splittings A = P - R + S and their companion iteration matrix.

The two-step scheme driven by such a splitting has the 2n x 2n block
companion matrix ``W = [[P^+ R, -P^+ S], [I, 0]]``; its spectral radius
decides convergence.  The splitting also induces the single splitting
``U = P, V = R - S``, whose iteration radius is equivalent to ``rho(W) < 1``.
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
from .errors import DecompositionMismatchError, NotProperError, ShapeMismatchError
from .splitting import ProperSplitting, subspace_residuals

__all__ = [
    "DoubleSplittingClass",
    "ProperDoubleSplitting",
    "make_pds",
    "classify_double",
    "companion_from_blocks",
    "iteration_matrix",
    "induced_single",
    "ConvergenceReport",
    "check_convergence",
]


class DoubleSplittingClass(enum.Enum):
    REGULAR = "RegularProperDouble"
    WEAK_REGULAR = "WeakRegularProperDouble"
    PROPER_ONLY = "ProperDoubleOnly"


@dataclass(frozen=True, eq=False)
class ProperDoubleSplitting:
    """Validated quadruple A = P - R + S with P proper over A."""

    a: np.ndarray
    p: np.ndarray
    r: np.ndarray
    s: np.ndarray


def make_pds(a, p, r, s, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> ProperDoubleSplitting:
    """Validate the decomposition and the subspace conditions on P."""
    a = as_matrix(a, readonly=True)
    p = as_matrix(p, readonly=True)
    r = as_matrix(r, readonly=True)
    s = as_matrix(s, readonly=True)
    if not (a.shape == p.shape == r.shape == s.shape):
        raise ShapeMismatchError(
            f"A, P, R, S must share one shape, got {a.shape}, {p.shape}, {r.shape}, {s.shape}"
        )
    mismatch = max_abs_diff(a, p - r + s)
    if mismatch > cfg.eq_abs_tol:
        raise DecompositionMismatchError(mismatch, cfg.eq_abs_tol)
    range_res, nullspace_res = subspace_residuals(a, p, cfg)
    if range_res > cfg.eq_abs_tol or nullspace_res > cfg.eq_abs_tol:
        raise NotProperError(range_res, nullspace_res, cfg.eq_abs_tol)
    return ProperDoubleSplitting(a, p, r, s)


def classify_double(
    d: ProperDoubleSplitting, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> DoubleSplittingClass:
    """Strongest applicable tag: regular checks P^+, R, -S; weak regular
    checks P^+, P^+ R, -P^+ S."""
    p_pinv = pinv(d.p, cfg)
    if is_nonneg(p_pinv, cfg):
        if is_nonneg(d.r, cfg) and is_nonneg(-d.s, cfg):
            return DoubleSplittingClass.REGULAR
        if is_nonneg(p_pinv @ d.r, cfg) and is_nonneg(-(p_pinv @ d.s), cfg):
            return DoubleSplittingClass.WEAK_REGULAR
    return DoubleSplittingClass.PROPER_ONLY


def companion_from_blocks(pr: np.ndarray, ps: np.ndarray) -> np.ndarray:
    """Assemble ``[[pr, -ps], [I, 0]]`` with exact identity and zero blocks."""
    n = pr.shape[0]
    if pr.shape != (n, n) or ps.shape != (n, n):
        raise ShapeMismatchError("companion blocks must be square and equally sized")
    w = np.zeros((2 * n, 2 * n))
    w[:n, :n] = pr
    w[:n, n:] = -ps
    w[n:, :n] = np.eye(n)
    return w


def iteration_matrix(
    d: ProperDoubleSplitting, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> np.ndarray:
    """The 2n x 2n companion matrix of the two-step scheme."""
    p_pinv = pinv(d.p, cfg)
    return companion_from_blocks(p_pinv @ d.r, p_pinv @ d.s)


def induced_single(
    d: ProperDoubleSplitting, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> ProperSplitting:
    """The single splitting U = P, V = R - S; proper-ness is inherited from d."""
    return ProperSplitting(d.a, d.p, as_matrix(d.r - d.s, readonly=True))


@dataclass(frozen=True)
class ConvergenceReport:
    """Spectral radii of the companion matrix and the induced single splitting.

    ``biconditional_agrees`` records whether ``rho(W) < 1`` and
    ``rho(P^+(R-S)) < 1`` came out on the same side of 1 (a spectral_tol band
    around 1 counts as inconclusive-but-consistent); it is ``None`` when the
    splitting is not at least weak regular, where no equivalence is claimed.
    ``guaranteed_convergent`` is True when A is semi-monotone and the class is
    weak regular or stronger, the hypotheses under which convergence is a
    theorem; it is ``None`` when those hypotheses fail.
    """

    splitting_class: DoubleSplittingClass
    rho_w: float
    rho_induced: float
    semi_monotone: bool
    biconditional_agrees: bool | None
    guaranteed_convergent: bool | None
    converges: bool


def check_convergence(
    d: ProperDoubleSplitting, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> ConvergenceReport:
    cls = classify_double(d, cfg)
    rho_w = spectral_radius(iteration_matrix(d, cfg), cfg)
    rho_induced = spectral_radius(pinv(d.p, cfg) @ (d.r - d.s), cfg)
    semi = is_nonneg(pinv(d.a, cfg), cfg)
    converges = rho_w < 1.0

    if cls is DoubleSplittingClass.PROPER_ONLY:
        agrees = None
    elif abs(rho_w - 1.0) <= cfg.spectral_tol or abs(rho_induced - 1.0) <= cfg.spectral_tol:
        agrees = True
    else:
        agrees = (rho_w < 1.0) == (rho_induced < 1.0)

    guaranteed = True if (semi and cls is not DoubleSplittingClass.PROPER_ONLY) else None
    return ConvergenceReport(cls, rho_w, rho_induced, semi, agrees, guaranteed, converges)

"""Hypothesis-and-conclusion checkers for the spectral radius comparison theorems.

Each checker takes two proper double splittings of the same matrix, evaluates
every hypothesis of its theorem as an entrywise predicate with a violation
residual, computes both companion spectral radii, and reports whether the
conclusion ``rho(W1) <= rho(W2) < 1`` was predicted by the hypotheses and
whether it was actually observed.  The checkers never throw on a false
hypothesis: a report with failed verdicts is itself the product.

``square_corollary=True`` reruns the same pipeline with the classical inverse
in place of the pseudoinverse; it requires a square nonsingular A and
additionally records when ``R1 >= R2`` together with the inverse ordering
implies branch (i).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .core import (
    DEFAULT_TOLERANCES,
    ToleranceConfig,
    has_zero_row,
    matrix_rank,
    max_abs_diff,
    pinv,
    spectral_radius,
)
from .double import ProperDoubleSplitting, companion_from_blocks
from .errors import DifferentAError, NotInvertibleError

__all__ = [
    "TheoremId",
    "Branch",
    "HypothesisVerdict",
    "ComparisonReport",
    "compare_regular_vs_weak",
    "compare_weak_vs_regular",
    "compare_weak_vs_weak",
    "compare",
]


class TheoremId(enum.Enum):
    REGULAR_VS_WEAK = "RegularVsWeak"
    WEAK_VS_REGULAR = "WeakVsRegular"
    WEAK_VS_WEAK = "WeakVsWeak"


class Branch(enum.Enum):
    CONDITION_I = "condition_i"
    CONDITION_II = "condition_ii"
    BOTH = "both"
    NEITHER = "neither"


@dataclass(frozen=True)
class HypothesisVerdict:
    """One named hypothesis with its pass flag and violation residual.

    For ``X >= 0`` style conditions the residual is how far the worst entry
    dips below zero; for range membership it is a projector residual norm;
    for the no-zero-row condition it is the smallest row maximum.
    """

    label: str
    passed: bool
    residual: float


@dataclass(frozen=True)
class ComparisonReport:
    theorem_id: TheoremId
    hypothesis_verdicts: tuple[HypothesisVerdict, ...]
    branch_used: Branch
    rho1: float
    rho2: float
    conclusion_predicted: bool
    conclusion_observed: bool
    square_corollary: bool = False
    notes: tuple[str, ...] = field(default=())


def _nonneg_verdict(label: str, m, cfg: ToleranceConfig) -> HypothesisVerdict:
    violation = max(0.0, -float(np.min(m)))
    return HypothesisVerdict(label, violation <= cfg.nonneg_slack, violation)


def _geq_verdict(label: str, x, y, cfg: ToleranceConfig) -> HypothesisVerdict:
    return _nonneg_verdict(label, np.asarray(x) - np.asarray(y), cfg)


def _regular_verdict(label, p_inv, r, s, cfg) -> HypothesisVerdict:
    parts = [
        _nonneg_verdict("", p_inv, cfg),
        _nonneg_verdict("", r, cfg),
        _nonneg_verdict("", -s, cfg),
    ]
    return HypothesisVerdict(label, all(v.passed for v in parts), max(v.residual for v in parts))


def _weak_regular_verdict(label, p_inv, r, s, cfg) -> HypothesisVerdict:
    parts = [
        _nonneg_verdict("", p_inv, cfg),
        _nonneg_verdict("", p_inv @ r, cfg),
        _nonneg_verdict("", -(p_inv @ s), cfg),
    ]
    return HypothesisVerdict(label, all(v.passed for v in parts), max(v.residual for v in parts))


def _inverse(a, cfg: ToleranceConfig) -> np.ndarray:
    return np.linalg.inv(a)


def _require_invertible(a, cfg: ToleranceConfig) -> None:
    m, n = a.shape
    if m != n:
        raise NotInvertibleError(f"square corollary mode needs a square A, got {a.shape}")
    if matrix_rank(a, cfg) < n:
        raise NotInvertibleError("square corollary mode needs a nonsingular A")


def _compare(
    theorem: TheoremId,
    d1: ProperDoubleSplitting,
    d2: ProperDoubleSplitting,
    cfg: ToleranceConfig,
    square_corollary: bool,
) -> ComparisonReport:
    if d1.a.shape != d2.a.shape or max_abs_diff(d1.a, d2.a) > cfg.eq_abs_tol:
        raise DifferentAError("both double splittings must decompose the same matrix A")
    a = d1.a
    notes: list[str] = []
    if square_corollary:
        _require_invertible(a, cfg)
        notes.append("square corollary mode: A is invertible, classical inverse used")
        ginv = _inverse
    else:
        ginv = pinv

    p1_inv = ginv(d1.p, cfg)
    p2_inv = ginv(d2.p, cfg)
    a_inv = ginv(a, cfg)

    verdicts: list[HypothesisVerdict] = []
    verdicts.append(_nonneg_verdict("A^+ >= 0", a_inv, cfg))

    if theorem is TheoremId.REGULAR_VS_WEAK:
        verdicts.append(_regular_verdict("splitting 1 regular", p1_inv, d1.r, d1.s, cfg))
        verdicts.append(_nonneg_verdict("P1 P1^+ >= 0", d1.p @ p1_inv, cfg))
        verdicts.append(_weak_regular_verdict("splitting 2 weak regular", p2_inv, d2.r, d2.s, cfg))
        verdicts.append(_geq_verdict("P1^+ >= P2^+", p1_inv, p2_inv, cfg))
    elif theorem is TheoremId.WEAK_VS_REGULAR:
        e = np.ones(a.shape[0])
        e_residual = float(np.linalg.norm(e - a @ (a_inv @ e)))
        verdicts.append(
            HypothesisVerdict(
                "e in range(A)",
                bool(e_residual <= cfg.eq_abs_tol * np.sqrt(a.shape[0])),
                e_residual,
            )
        )
        verdicts.append(_weak_regular_verdict("splitting 1 weak regular", p1_inv, d1.r, d1.s, cfg))
        verdicts.append(_regular_verdict("splitting 2 regular", p2_inv, d2.r, d2.s, cfg))
        smallest_row_max = float(np.min(np.max(np.abs(p2_inv), axis=1)))
        verdicts.append(
            HypothesisVerdict(
                "P2^+ has no zero row",
                not has_zero_row(p2_inv, cfg),
                smallest_row_max,
            )
        )
        verdicts.append(_nonneg_verdict("P2 P2^+ >= 0", d2.p @ p2_inv, cfg))
        verdicts.append(_geq_verdict("P1^+ >= P2^+", p1_inv, p2_inv, cfg))
    else:  # WEAK_VS_WEAK
        verdicts.append(_weak_regular_verdict("splitting 1 weak regular", p1_inv, d1.r, d1.s, cfg))
        verdicts.append(_weak_regular_verdict("splitting 2 weak regular", p2_inv, d2.r, d2.s, cfg))
        verdicts.append(_geq_verdict("P1^+ A >= P2^+ A", p1_inv @ a, p2_inv @ a, cfg))

    branch_i = _geq_verdict("P1^+ R1 >= P2^+ R2", p1_inv @ d1.r, p2_inv @ d2.r, cfg)
    branch_ii = _geq_verdict("P1^+ S1 >= P2^+ S2", p1_inv @ d1.s, p2_inv @ d2.s, cfg)
    verdicts.extend([branch_i, branch_ii])

    if square_corollary and theorem is not TheoremId.WEAK_VS_WEAK:
        r_order = _geq_verdict("R1 >= R2", d1.r, d2.r, cfg)
        verdicts.append(r_order)
        p_order = next(v for v in verdicts if v.label == "P1^+ >= P2^+")
        if r_order.passed and p_order.passed:
            notes.append(
                "branch (i) implied: P1^+ >= P2^+ >= 0 and R1 >= R2 >= 0 force P1^+ R1 >= P2^+ R2"
            )

    if branch_i.passed and branch_ii.passed:
        branch_used = Branch.BOTH
    elif branch_i.passed:
        branch_used = Branch.CONDITION_I
    elif branch_ii.passed:
        branch_used = Branch.CONDITION_II
    else:
        branch_used = Branch.NEITHER

    w1 = companion_from_blocks(p1_inv @ d1.r, p1_inv @ d1.s)
    w2 = companion_from_blocks(p2_inv @ d2.r, p2_inv @ d2.s)
    rho1 = spectral_radius(w1, cfg)
    rho2 = spectral_radius(w2, cfg)

    required_ok = all(
        v.passed for v in verdicts if v.label not in (branch_i.label, branch_ii.label, "R1 >= R2")
    )
    predicted = required_ok and branch_used is not Branch.NEITHER
    observed = rho1 <= rho2 + cfg.spectral_tol and rho2 < 1.0 - cfg.spectral_tol

    return ComparisonReport(
        theorem_id=theorem,
        hypothesis_verdicts=tuple(verdicts),
        branch_used=branch_used,
        rho1=rho1,
        rho2=rho2,
        conclusion_predicted=predicted,
        conclusion_observed=observed,
        square_corollary=square_corollary,
        notes=tuple(notes),
    )


def compare_regular_vs_weak(
    d1: ProperDoubleSplitting,
    d2: ProperDoubleSplitting,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    square_corollary: bool = False,
) -> ComparisonReport:
    """Splitting 1 regular, splitting 2 weak regular, plus P1 P1^+ >= 0."""
    return _compare(TheoremId.REGULAR_VS_WEAK, d1, d2, cfg, square_corollary)


def compare_weak_vs_regular(
    d1: ProperDoubleSplitting,
    d2: ProperDoubleSplitting,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    square_corollary: bool = False,
) -> ComparisonReport:
    """Splitting 1 weak regular, splitting 2 regular with the all-ones vector
    in range(A), no zero row in P2^+, and P2 P2^+ >= 0."""
    return _compare(TheoremId.WEAK_VS_REGULAR, d1, d2, cfg, square_corollary)


def compare_weak_vs_weak(
    d1: ProperDoubleSplitting,
    d2: ProperDoubleSplitting,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    square_corollary: bool = False,
) -> ComparisonReport:
    """Both splittings weak regular, ordered through P1^+ A >= P2^+ A."""
    return _compare(TheoremId.WEAK_VS_WEAK, d1, d2, cfg, square_corollary)


_DISPATCH = {
    TheoremId.REGULAR_VS_WEAK: compare_regular_vs_weak,
    TheoremId.WEAK_VS_REGULAR: compare_weak_vs_regular,
    TheoremId.WEAK_VS_WEAK: compare_weak_vs_weak,
}


def compare(
    theorem: TheoremId,
    d1: ProperDoubleSplitting,
    d2: ProperDoubleSplitting,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    square_corollary: bool = False,
) -> ComparisonReport:
    """Dispatch to the checker for ``theorem``."""
    return _DISPATCH[theorem](d1, d2, cfg, square_corollary)

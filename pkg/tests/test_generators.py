"""Sanity checks for the randomized instance generators themselves."""

import numpy as np
from numpy.random import default_rng

from propersplit import (
    DoubleSplittingClass,
    classify_double,
    is_nonneg,
    penrose_residuals,
    pinv,
    spectral_radius,
)
from propersplit.generators import (
    nonneg_block_pair,
    random_frame,
    regular_double,
    semimonotone_matrix,
    weak_regular_double,
    weak_regular_single,
)


def test_frame_structure():
    rng = default_rng(61)
    f = random_frame(rng, 6, 5, 3)
    assert np.allclose(f.left.T @ f.left, np.eye(3), atol=1e-12)
    assert np.allclose(f.right.T @ f.right, np.eye(3), atol=1e-12)
    assert np.min(f.left) >= 0.0 and np.min(f.right) >= 0.0
    assert is_nonneg(f.col_projector()) and is_nonneg(f.row_projector())


def test_frame_splitting_matrix_exact_pinv():
    rng = default_rng(62)
    f = random_frame(rng, 5, 6, 2)
    g = rng.uniform(0.5, 2.0, 2)
    p = f.splitting_matrix(g)
    p_pinv = f.splitting_pinv(g)
    assert max(penrose_residuals(p, p_pinv)) < 1e-12
    assert np.max(np.abs(pinv(p) - p_pinv)) < 1e-12


def test_indicator_frame_contains_ones():
    rng = default_rng(63)
    f = random_frame(rng, 6, 4, 3, indicator_left=True)
    q = f.col_projector()
    e = np.ones(6)
    assert np.linalg.norm(q @ e - e) < 1e-12


def test_weak_regular_double_radius_control():
    rng = default_rng(64)
    for rho in (0.3, 0.85, 1.2):
        d = weak_regular_double(rng, 5, 6, 3, rho=rho)
        assert abs(spectral_radius(pinv(d.p) @ (d.r - d.s)) - rho) < 1e-8


def test_weak_regular_double_semimonotone_iff_contractive():
    rng = default_rng(65)
    for rho, expect in ((0.5, True), (1.3, False)):
        d = weak_regular_double(rng, 4, 5, 2, rho=rho)
        assert is_nonneg(pinv(d.a)) == expect


def test_regular_double_class():
    rng = default_rng(66)
    for _ in range(10):
        d = regular_double(rng, 4, 6, 3, rho=0.7)
        assert classify_double(d) is DoubleSplittingClass.REGULAR


def test_weak_regular_single_class():
    rng = default_rng(67)
    s = weak_regular_single(rng, 5, 5, 3, rho=0.4)
    u_pinv = pinv(s.u)
    assert is_nonneg(u_pinv)
    assert is_nonneg(u_pinv @ s.v)


def test_semimonotone_matrix():
    rng = default_rng(68)
    for _ in range(10):
        a = semimonotone_matrix(rng, 5, 4, 2)
        assert is_nonneg(pinv(a))


def test_nonneg_block_pair_radius():
    rng = default_rng(69)
    b, c = nonneg_block_pair(rng, 4, rho=0.9)
    assert is_nonneg(b) and is_nonneg(c)
    assert abs(spectral_radius(b + c) - 0.9) < 1e-10

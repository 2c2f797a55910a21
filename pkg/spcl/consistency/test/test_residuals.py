#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: test_residuals.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Test suite for the consistency residuals (spcl.consistency)

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np
import pytest

from spcl.core import DomainError
from spcl.consistency import (ConsistencyWitness, construct_witness,
                              multi_step_residual_exact, one_step_residual,
                              soft_consistency_residual, soft_multi_step_residual_exact,
                              telescoped_residual)
from spcl.mdp import (TabularMDP, bandit_mdp, extract_policy, random_mdp, value_iteration)

# List of test functions
# - test_multi_step_collapse()
# - test_multi_step_optimal()
# - test_telescoping()
# - test_soft_residual_optimal()
# - test_soft_residual_examples()
# - test_sparse_pair_not_soft_consistent()

def test_multi_step_collapse():
    """
    d = 1 gives back the one-step residual.
    """
    m = random_mdp(4, 3, seed=1)
    rng = np.random.default_rng(1)
    w = ConsistencyWitness(rng.normal(size=4), rng.dirichlet(np.ones(3), 4),
                           rng.uniform(size=(4, 3)), -rng.uniform(size=4), 0.5)
    for x in range(4):
        for a in range(3):
            np.testing.assert_allclose(multi_step_residual_exact(m, w, x, [a]),
                                       one_step_residual(m, w, x, a), atol=1.e-14)

def test_multi_step_optimal():
    """
    The optimal witness satisfies the multi-step equation for any actions.
    """
    alpha = 0.4
    m = random_mdp(6, 4, gamma=0.9, seed=2, n_terminal=1)
    v = value_iteration(m, 'sparse', alpha, tol=1.e-12).v
    w = construct_witness(m, v, extract_policy(m, v, 'sparse', alpha), alpha)
    rng = np.random.default_rng(2)
    for d in range(1, 6):
        for i in range(5):
            x0 = rng.integers(6)
            actions = rng.integers(4, size=d)
            assert abs(multi_step_residual_exact(m, w, x0, actions)) <= 1.e-8

def test_telescoping():
    """
    Multi-step residual equals the discounted sum of one-step residuals.
    """
    m = random_mdp(4, 3, gamma=0.8, seed=3, n_terminal=1)
    rng = np.random.default_rng(3)
    v = rng.normal(size=4)
    v[m.terminal] = 0.
    w = ConsistencyWitness(v, rng.dirichlet(np.ones(3), 4), rng.uniform(size=(4, 3)),
                           -rng.uniform(size=4), 0.7)
    for d in range(1, 7):
        for x0 in range(4):
            actions = rng.integers(3, size=d)
            np.testing.assert_allclose(multi_step_residual_exact(m, w, x0, actions),
                                       telescoped_residual(m, w, x0, actions), atol=1.e-10)
    with pytest.raises(DomainError):
        multi_step_residual_exact(m, w, 0, [])

def test_soft_residual_optimal():
    """
    The soft-optimal pair has zero soft residual, one step and d steps.
    """
    alpha = 0.3
    m = random_mdp(6, 3, gamma=0.9, seed=4)
    v = value_iteration(m, 'soft', alpha, tol=1.e-12).v
    mu = extract_policy(m, v, 'soft', alpha)
    for x in range(6):
        for a in range(3):
            assert abs(soft_consistency_residual(m, v, mu, x, a, alpha)) <= 1.e-8
    assert abs(soft_multi_step_residual_exact(m, v, mu, 0, [0, 2, 1], alpha)) <= 1.e-8

def test_soft_residual_examples():
    """
    Single action, perturbed values and zero probabilities.
    """
    m = TabularMDP([[[1.]]], [[1.]], 0.5)
    np.testing.assert_allclose(soft_consistency_residual(m, [2.], [[1.]], 0, 0, 0.1), 0.)

    # Raising v(x) by eps lowers the residual at x by (1-gamma) eps on a self-loop
    np.testing.assert_allclose(soft_consistency_residual(m, [2.1], [[1.]], 0, 0, 0.1), -0.05)

    m = bandit_mdp([1., 0.])
    with pytest.raises(DomainError):
        soft_consistency_residual(m, [1.], [[1., 0.]], 0, 1, 0.1)
    # The zero-probability action is never taken
    soft_consistency_residual(m, [1.], [[1., 0.]], 0, 0, 0.1)

def test_sparse_pair_not_soft_consistent():
    """
    The sparse-optimal pair of a two-arm bandit violates the soft equation.
    """
    alpha = 1.
    m = bandit_mdp([1., 0.95], gamma=0.9)
    v = value_iteration(m, 'sparse', alpha, tol=1.e-12).v
    mu = extract_policy(m, v, 'sparse', alpha)
    np.testing.assert_allclose(mu.probs, [[0.525, 0.475]], atol=1.e-12)
    assert abs(soft_consistency_residual(m, v, mu, 0, 0, alpha)) > 1.e-3

if __name__ == "__main__" :
    pytest.main([__file__])

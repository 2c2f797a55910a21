#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: test_witness.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Test suite for consistency witnesses (spcl.consistency)

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np
import pytest

from spcl.core import DomainError
from spcl.consistency import (ConsistencyWitness, SubTrajectory, construct_witness,
                              kkt_form_violation, one_step_residual, one_step_residuals)
from spcl.mdp import (TabularMDP, TabularPolicy, bandit_mdp, extract_policy, random_mdp,
                      value_iteration)

# List of test functions
# - test_single_action_witness()
# - test_hand_solved_residual()
# - test_uniform_optimal_state()
# - test_optimal_witness_random()
# - test_perturbed_value()
# - test_not_optimal()
# - test_subtrajectory()

def optimal_witness(m, alpha):
    """
    Witness built from the sparse value iteration optimum.
    """
    v = value_iteration(m, 'sparse', alpha, tol=1.e-12).v
    return construct_witness(m, v, extract_policy(m, v, 'sparse', alpha), alpha)

def test_single_action_witness():
    """
    Single action: Lambda = -alpha/2 and lambda = 0.
    """
    alpha = 0.8
    w = optimal_witness(random_mdp(4, 1, seed=1), alpha)
    np.testing.assert_allclose(w.Lam, -0.5*alpha, atol=1.e-9)
    np.testing.assert_equal(w.lam, 0.)

def test_hand_solved_residual():
    """
    Single state, single action: v = r/(1-gamma), mu = 1, Lambda = -alpha/2.
    """
    m = TabularMDP([[[1.]]], [[2.]], 0.75)
    alpha = 0.3
    w = ConsistencyWitness([8.], [[1.]], [[0.]], [-0.5*alpha], alpha)
    np.testing.assert_allclose(one_step_residual(m, w, 0, 0), 0., atol=1.e-14)
    assert w.satisfies_constraints()

def test_uniform_optimal_state():
    """
    Symmetric arms: uniform policy and Lambda = -alpha/(2n).
    """
    alpha = 0.5
    w = optimal_witness(bandit_mdp([1., 1., 1.], gamma=0.9), alpha)
    np.testing.assert_allclose(w.mu, [[1./3, 1./3, 1./3]], atol=1.e-12)
    np.testing.assert_allclose(w.Lam, [-alpha/6.], atol=1.e-9)
    assert -0.5*alpha <= w.Lam[0] <= 0.

def test_optimal_witness_random():
    """
    Witnesses of optimal pairs have zero residual and valid multipliers.
    """
    for seed in range(20):
        alpha = [0.1, 0.5, 2.][seed % 3]
        m = random_mdp(10, 5, gamma=0.9, seed=seed, n_terminal=seed % 2)
        w = optimal_witness(m, alpha)
        assert np.max(np.abs(one_step_residuals(m, w))) <= 1.e-8
        assert np.min(w.lam) >= -1.e-12
        assert w.satisfies_constraints(tol=1.e-9)
        assert kkt_form_violation(m, w) <= 1.e-8
        # Lambda = -alpha/2 |mu|^2 at the optimum
        live = ~m.terminal
        np.testing.assert_allclose(w.Lam[live], -0.5*alpha*np.sum(w.mu[live]**2, axis=1),
                                   atol=1.e-8)

def test_perturbed_value():
    """
    Perturbing v by eps at one state moves some residual by >= (1-gamma) eps.
    """
    m = random_mdp(5, 3, gamma=0.9, seed=30)
    w = optimal_witness(m, 0.5)
    eps = 1.e-3
    for x in range(5):
        bad = w.copy()
        bad.v[x] += eps
        assert np.max(np.abs(one_step_residuals(m, bad))) >= (1.-m.gamma)*eps-1.e-10

def test_not_optimal():
    """
    construct_witness rejects a non-optimal pair.
    """
    m = bandit_mdp([1., 0.], gamma=0.9)
    with pytest.raises(DomainError):
        construct_witness(m, [5.], TabularPolicy.uniform(1, 2), 1.)

def test_subtrajectory():
    """
    SubTrajectory length checks.
    """
    xi = SubTrajectory([0, 1, 2], [1, 0], [0.5, 1.])
    assert xi.d == 2
    assert not xi.terminal_cut
    with pytest.raises(DomainError):
        SubTrajectory([0, 1], [1, 0], [0.5, 1.])
    with pytest.raises(DomainError):
        SubTrajectory([0], [], [])

if __name__ == "__main__" :
    pytest.main([__file__])

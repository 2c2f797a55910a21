#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: test_bounds.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Test suite for the sub-optimality bound checks (spcl.mdp)

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np
import pytest

from spcl.mdp import bandit_mdp, bellman_inequality_gap, check_bounds, random_mdp, value_iteration
from spcl.mdp.bounds import soft_bound, sparse_bound

# List of test functions
# - test_bound_constants()
# - test_check_bounds_single_action()
# - test_check_bounds_random()
# - test_check_bounds_large_action_set()
# - test_check_bounds_small_alpha()
# - test_bellman_inequality_optimum()

def test_bound_constants():
    """
    Sparse bound constant is smaller than the soft one for |A| >= 3.
    """
    for n in [3, 8, 32, 128]:
        assert sparse_bound(n, 1., 0.9) < soft_bound(n, 1., 0.9)
    np.testing.assert_allclose(sparse_bound(1, 1., 0.5), 0.)
    np.testing.assert_allclose(sparse_bound(4, 0.5, 0.9), 0.5*3./8./0.1)

def test_check_bounds_single_action():
    """
    With a single action every gap is zero.
    """
    report = check_bounds(random_mdp(5, 1, seed=1), alpha=1.)
    np.testing.assert_allclose(report.soft_gap, 0., atol=1.e-8)
    np.testing.assert_allclose(report.sparse_gap, 0., atol=1.e-8)
    assert report.passed

def test_check_bounds_random():
    """
    No bound violation on random MDPs.
    """
    for seed in range(20):
        n_actions = [2, 3, 5, 8][seed % 4]
        m = random_mdp(6, n_actions, gamma=0.9, seed=seed, n_terminal=seed % 2)
        report = check_bounds(m, alpha=[0.1, 1., 3.][seed % 3])
        assert report.passed
        assert np.all(report.sparse_gap >= -1.e-8)

def test_check_bounds_large_action_set():
    """
    20 states and 50 actions: sparse bound tighter than soft bound.
    """
    report = check_bounds(random_mdp(20, 50, gamma=0.9, seed=20), alpha=1.)
    assert report.sparse_bound < report.soft_bound
    assert report.passed
    summary = report.as_dict()
    assert summary['worst_sparse_gap'] <= summary['sparse_bound']

def test_check_bounds_small_alpha():
    """
    Near-tied arms with a small alpha and a long horizon.
    """
    report = check_bounds(bandit_mdp(np.linspace(1., 1.0001, 10), gamma=0.99), alpha=1.e-3)
    assert report.passed
    assert np.all(report.sparse_gap <= report.sparse_bound+1.e-8)

def test_bellman_inequality_optimum():
    """
    T_sp V <= V + alpha/2 at the sparse optimum.
    """
    m = random_mdp(6, 4, seed=21, n_terminal=1)
    v = value_iteration(m, 'sparse', 0.4).v
    np.testing.assert_allclose(bellman_inequality_gap(m, v, 0.4), -0.2, atol=1.e-9)

if __name__ == "__main__" :
    pytest.main([__file__])

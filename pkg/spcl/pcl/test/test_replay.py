#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: test_replay.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Test suite for the prioritized replay buffer (spcl.pcl)

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np
import pytest
from scipy import stats

from spcl.core import DomainError
from spcl.pcl import Adam, Episode, ReplayBuffer, SGD, buffer_sample, make_optimizer

# List of test functions
# - test_empty_buffer()
# - test_equal_rewards_uniform()
# - test_two_episode_mixture()
# - test_capacity_and_eviction()
# - test_episode_priority()
# - test_optimizers()

def test_empty_buffer():
    """
    Sampling from an empty buffer fails.
    """
    with pytest.raises(DomainError):
        buffer_sample(ReplayBuffer(5), 1)
    with pytest.raises(DomainError):
        ReplayBuffer(0)

def test_equal_rewards_uniform():
    """
    Equal priorities give uniform sampling (chi-square test).
    """
    rb = ReplayBuffer(10, seed=1)
    for i in range(5):
        rb.add(i, priority=3.)
    draws = buffer_sample(rb, 100000)
    counts = np.bincount(draws, minlength=5)
    assert stats.chisquare(counts).pvalue > 0.01

def test_two_episode_mixture():
    """
    Rewards 0 and 10 with a_priority 0.5.
    """
    rb = ReplayBuffer(10, a_priority=0.5, seed=2)
    rb.add('low', priority=0.)
    rb.add('high', priority=10.)
    expected = 0.1/2.+0.9*np.exp(5.)/(1.+np.exp(5.))
    np.testing.assert_allclose(rb.probabilities()[1], expected)
    np.testing.assert_allclose(expected, 0.944, atol=1.e-3)
    draws = buffer_sample(rb, 100000)
    freq = np.mean([d == 'high' for d in draws])
    assert abs(freq-expected) <= 4.*np.sqrt(expected*(1.-expected)/100000)

def test_capacity_and_eviction():
    """
    Size stays at capacity and evictions are uniform.
    """
    capacity = 8
    rb = ReplayBuffer(capacity, seed=3)
    for i in range(capacity):
        assert rb.add(i, priority=0.) is None
    evicted = [rb.add(capacity+i, priority=0.) for i in range(40000)]
    assert len(rb) == capacity
    counts = np.bincount(evicted, minlength=capacity)
    assert stats.chisquare(counts).pvalue > 0.01

def test_episode_priority():
    """
    Episodes default to their total reward.
    """
    rb = ReplayBuffer(3, seed=4)
    rb.add(Episode([0, 1, 2], [1, 0], [1., 1.]))
    assert rb.priorities == [2.]

def test_optimizers():
    """
    SGD and Adam updates.
    """
    params = np.array([1., -1.])
    SGD(0.1).step(params, np.array([2., 0.]))
    np.testing.assert_allclose(params, [0.8, -1.])
    params = np.array([1., -1.])
    # The first Adam step moves every coordinate by lr
    Adam(0.01).step(params, np.array([3., -0.5]))
    np.testing.assert_allclose(params, [0.99, -0.99], atol=1.e-8)
    with pytest.raises(DomainError):
        make_optimizer('rmsprop', 0.1)
    with pytest.raises(DomainError):
        SGD(0.)

if __name__ == "__main__" :
    pytest.main([__file__])

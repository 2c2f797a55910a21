#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: test_tabular.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Test suite for the tabular environments and history features (spcl.envs)

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np
import pytest

from spcl.core import DomainError, ProtocolError
from spcl.envs import ObservationWindow, TapeTask, encode_action, wrap_tabular
from spcl.mdp import bandit_mdp, chain_mdp, random_mdp

# List of test functions
# - test_chain_path()
# - test_bandit_horizon()
# - test_transition_frequencies()
# - test_tabular_errors()
# - test_observation_window()

def test_chain_path():
    """
    Moving right along a chain reaches the terminal state.
    """
    env = wrap_tabular(chain_mdp(4), horizon=10, start=0)
    obs, info = env.reset(seed=0)
    path, rewards = [obs], []
    terminated = False
    while not terminated:
        obs, reward, terminated, truncated, info = env.step(0)
        path.append(obs)
        rewards.append(reward)
    assert path == [0, 1, 2, 3]
    assert rewards == [1., 1., 1.]

def test_bandit_horizon():
    """
    Bandit episodes last exactly the horizon.
    """
    env = wrap_tabular(bandit_mdp([1., 0.]), horizon=7)
    for seed in range(3):
        env.reset(seed=seed)
        steps, truncated = 0, False
        while not truncated:
            obs, reward, terminated, truncated, info = env.step(seed % 2)
            assert obs == 0 and not terminated
            steps += 1
        assert steps == 7

def test_transition_frequencies():
    """
    Empirical transitions match the kernel within 4 sigma per cell.
    """
    m = random_mdp(3, 2, seed=5)
    env = wrap_tabular(m, horizon=1000)
    rng = np.random.default_rng(5)
    counts = np.zeros((3, 2, 3))
    env.reset(seed=5)
    for i in range(100000):
        x = env.state
        a = int(rng.integers(2))
        y, reward, terminated, truncated, info = env.step(a)
        counts[x, a, y] += 1
        if truncated:
            env.reset()
    n = counts.sum(axis=2, keepdims=True)
    p = m.transition
    sigma = np.sqrt(p*(1.-p)/n)
    assert np.all(np.abs(counts/n-p) <= 4.*sigma+1.e-12)

def test_tabular_errors():
    """
    Invalid horizons and starts, stepping after the end.
    """
    m = chain_mdp(3)
    with pytest.raises(DomainError):
        wrap_tabular(m, 0)
    with pytest.raises(DomainError):
        wrap_tabular(m, 5, start=2)
    env = wrap_tabular(m, 1, start=0)
    env.reset()
    env.step(1)
    with pytest.raises(ProtocolError):
        env.step(1)

def test_observation_window():
    """
    One-hot history of observations and actions.
    """
    env = ObservationWindow(TapeTask('copy', 3), window=2)
    assert env.observation_space.shape == (2*(4+8),)
    x, info = env.reset(options={'tape': [2, 1, 0]})
    expected = np.zeros(24)
    expected[4+2] = 1.
    np.testing.assert_equal(x, expected)
    action = encode_action(1, 1, 2, 3)
    x, reward, terminated, truncated, info = env.step(action)
    assert reward == 1.
    expected = np.zeros(24)
    expected[2] = 1.
    expected[4+1] = 1.
    expected[8+8+action] = 1.
    np.testing.assert_equal(x, expected)
    with pytest.raises(DomainError):
        ObservationWindow(TapeTask('copy', 3), window=0)

if __name__ == "__main__" :
    pytest.main([__file__])

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: tabular.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Episodic environments sampling a tabular MDP.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import gymnasium
import numpy as np
from gymnasium import spaces

from spcl.core.exceptions import DomainError, ProtocolError


class TabularEnv(gymnasium.Env):
    """
    Episodes of a TabularMDP with a finite horizon.

    The episode terminates on reaching a terminal state and is truncated
    after ``horizon`` steps. Observations are state indices.

    :param m: TabularMDP
    :param horizon: maximal number of steps
    :param start: initial state, or None for a uniform draw among the
        non-terminal states
    """

    def __init__(self, m, horizon, start=None):
        """
        Initialize the TabularEnv class.
        """
        if horizon < 1:
            raise DomainError('horizon must be >= 1')
        live = np.flatnonzero(~m.terminal)
        if live.size == 0:
            raise DomainError('the MDP has no non-terminal state')
        if start is not None and (not 0 <= start < m.n_states or m.terminal[start]):
            raise DomainError('invalid start state '+repr(start))
        self.mdp = m
        self.horizon = int(horizon)
        self.start = start
        self.live = live
        self.observation_space = spaces.Discrete(m.n_states)
        self.action_space = spaces.Discrete(m.n_actions)
        self.state = None
        self.n_steps = 0
        self.done = True

    def reset(self, seed=None, options=None):
        super().reset(seed=seed)
        options = options or {}
        start = options.get('start', self.start)
        if start is None:
            start = self.live[self.np_random.integers(self.live.size)]
        self.state = int(start)
        self.n_steps = 0
        self.done = False
        return self.state, {}

    def step(self, action):
        if self.done:
            raise ProtocolError('step called on a finished episode, call reset first')
        m = self.mdp
        reward = float(m.reward[self.state, action])
        self.state = int(self.np_random.choice(m.n_states, p=m.transition[self.state, action]))
        self.n_steps += 1
        terminated = bool(m.terminal[self.state])
        truncated = not terminated and self.n_steps >= self.horizon
        self.done = terminated or truncated
        return self.state, reward, terminated, truncated, {}


def wrap_tabular(m, horizon, start=None):
    """
    Episodic environment of a tabular MDP.

    >>> from spcl.envs import wrap_tabular
    >>> from spcl.mdp import bandit_mdp
    >>> env = wrap_tabular(bandit_mdp([1., 0.]), horizon=10)
    >>> env.reset(seed=0)
    (0, {})
    """
    return TabularEnv(m, horizon, start)

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: wrappers.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Fixed-width history features for memoryless models.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

from collections import deque

import gymnasium
import numpy as np
from gymnasium import spaces

from spcl.core.exceptions import DomainError


class ObservationWindow(gymnasium.Wrapper):
    """
    One-hot encoding of the last ``window`` observations and actions.

    The feature vector holds ``window`` observation slots (oldest first,
    current last) followed by ``window`` action slots (oldest first, last
    action taken last). Slots before the start of the episode are zero.

    :param env: environment with discrete observation and action spaces
    :param window: history length
    """

    def __init__(self, env, window=4):
        """
        Initialize the ObservationWindow class.
        """
        super().__init__(env)
        if window < 1:
            raise DomainError('window must be >= 1')
        self.window = int(window)
        self.n_obs = int(env.observation_space.n)
        self.n_act = int(env.action_space.n)
        self.observation_space = spaces.Box(0., 1., shape=(self.window*(self.n_obs+self.n_act),),
                                            dtype=np.float64)
        self._obs = deque(maxlen=self.window)
        self._act = deque(maxlen=self.window)

    def _features(self):
        obs = np.zeros((self.window, self.n_obs))
        act = np.zeros((self.window, self.n_act))
        for i, o in enumerate(self._obs):
            obs[self.window-len(self._obs)+i, o] = 1.
        for i, a in enumerate(self._act):
            act[self.window-len(self._act)+i, a] = 1.
        return np.concatenate((obs.ravel(), act.ravel()))

    def reset(self, seed=None, options=None):
        obs, info = self.env.reset(seed=seed, options=options)
        self._obs.clear()
        self._act.clear()
        self._obs.append(int(obs))
        info['raw_observation'] = int(obs)
        return self._features(), info

    def step(self, action):
        obs, reward, terminated, truncated, info = self.env.step(action)
        self._obs.append(int(obs))
        self._act.append(int(action))
        info['raw_observation'] = int(obs)
        return self._features(), reward, terminated, truncated, info

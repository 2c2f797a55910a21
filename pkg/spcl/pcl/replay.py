#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: replay.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Episode replay buffer prioritized by episode reward.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np
from scipy.special import softmax

from spcl.core.exceptions import DomainError


class ReplayBuffer():
    """
    Bounded store of full episodes.

    An episode with priority ``R`` is drawn with probability
    ``0.1/n + 0.9 exp(a_priority R)/Z`` among the ``n`` stored episodes.
    Once the buffer is full, an insertion replaces a stored episode drawn
    uniformly at random.

    :param capacity: maximum number of episodes
    :param a_priority: temperature of the reward priority
    :param seed: seed of the eviction and sampling draws
    """

    def __init__(self, capacity, a_priority=0.5, seed=None):
        """
        Initialize the ReplayBuffer class.
        """
        if capacity < 1:
            raise DomainError('capacity must be >= 1')
        self.capacity = int(capacity)
        self.a_priority = float(a_priority)
        self.episodes = []
        self.priorities = []
        self.rng = np.random.default_rng(seed)

    def __len__(self):
        return len(self.episodes)

    def add(self, episode, priority=None):
        """
        Insert an episode.

        :param episode: stored object, its ``total_reward`` is the default
            priority
        :param priority: explicit priority
        :returns: index of the evicted episode or None
        """
        if priority is None:
            priority = episode.total_reward
        if len(self.episodes) < self.capacity:
            self.episodes.append(episode)
            self.priorities.append(float(priority))
            return None
        index = int(self.rng.integers(len(self.episodes)))
        self.episodes[index] = episode
        self.priorities[index] = float(priority)
        return index

    def probabilities(self):
        """
        Sampling probability of every stored episode.
        """
        if len(self.episodes) == 0:
            raise DomainError('the replay buffer is empty')
        n = len(self.episodes)
        return 0.1/n+0.9*softmax(self.a_priority*np.array(self.priorities))

    def sample(self, k):
        """
        Draw ``k`` episodes i.i.d. with the priority mixture.
        """
        p = self.probabilities()
        index = self.rng.choice(len(self.episodes), size=k, p=p)
        return [self.episodes[i] for i in index]


def buffer_sample(rb, k):
    """
    Draw ``k`` episodes from a replay buffer.

    .. rubric:: Basic usage

    >>> from spcl.pcl import ReplayBuffer, buffer_sample
    >>> rb = ReplayBuffer(10, seed=0)
    >>> rb.add('low', priority=0.)
    >>> rb.add('high', priority=10.)
    >>> len(buffer_sample(rb, 3))
    3
    """
    return rb.sample(k)

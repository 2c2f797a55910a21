#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: tabular.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Finite MDPs and tabular policies.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np

from spcl.core.exceptions import DomainError
from spcl.core.operators import PolicyDistribution


class TabularMDP():
    """
    Finite MDP with transition kernel ``P[x, a, x']``, reward table
    ``r[x, a]``, discount ``gamma`` and a terminal-state mask.

    Arrays are copied and made read-only: an instance never changes after
    construction.

    :param transition: array (n_states, n_actions, n_states)
    :param reward: array (n_states, n_actions)
    :param gamma: discount factor in (0, 1)
    :param terminal: boolean array (n_states,), default no terminal state

    .. rubric:: Basic usage

    >>> from spcl.mdp import TabularMDP
    >>> m = TabularMDP([[[1.]]], [[1.]], 0.5)
    >>> m.n_states, m.n_actions
    (1, 1)
    """

    def __init__(self, transition, reward, gamma, terminal=None):
        """
        Initialize the TabularMDP class.
        """

        transition = np.array(transition, dtype=np.float64)
        reward = np.array(reward, dtype=np.float64)

        # Check shapes
        if transition.ndim != 3 or transition.shape[0] != transition.shape[2]:
            raise DomainError('transition must have shape (n_states, n_actions, n_states)')
        if reward.shape != transition.shape[:2]:
            raise DomainError('reward must have shape (n_states, n_actions)')
        if not 0. < gamma < 1.:
            raise DomainError('gamma must lie in (0, 1)')

        # Check the kernel
        if not np.all(np.isfinite(transition)) or np.any(transition < 0.):
            raise DomainError('transition probabilities must be finite and >= 0')
        if np.max(np.abs(transition.sum(axis=2)-1.)) > 1.e-12:
            raise DomainError('transition rows must sum to 1')
        if not np.all(np.isfinite(reward)):
            raise DomainError('rewards must be finite')

        if terminal is None:
            terminal = np.zeros(transition.shape[0], dtype=bool)
        terminal = np.array(terminal, dtype=bool)
        if terminal.shape != (transition.shape[0],):
            raise DomainError('terminal mask must have shape (n_states,)')

        # Terminal states self-loop with reward 0
        for x in np.flatnonzero(terminal):
            if np.any(reward[x] != 0.) or np.any(transition[x, :, x] != 1.):
                raise DomainError('terminal state '+str(x)+' must self-loop with reward 0')

        for array in (transition, reward, terminal):
            array.setflags(write=False)

        self.transition = transition
        self.reward = reward
        self.gamma = float(gamma)
        self.terminal = terminal

    @property
    def n_states(self):
        return self.transition.shape[0]

    @property
    def n_actions(self):
        return self.transition.shape[1]

    def __repr__(self):
        return ('TabularMDP(n_states='+str(self.n_states)+', n_actions='
                +str(self.n_actions)+', gamma='+str(self.gamma)+')')


class TabularPolicy():
    """
    One PolicyDistribution per state, stored as an (n_states, n_actions)
    matrix.

    :param probs: array (n_states, n_actions), rows on the simplex
    """

    def __init__(self, probs):
        """
        Initialize the TabularPolicy class.
        """
        probs = np.array(probs, dtype=np.float64)
        if probs.ndim != 2:
            raise DomainError('policy must be an (n_states, n_actions) array')
        if np.any(probs < 0.) or not np.all(np.isfinite(probs)):
            raise DomainError('policy probabilities must be finite and >= 0')
        if np.max(np.abs(probs.sum(axis=1)-1.)) > 1.e-12:
            raise DomainError('policy rows must sum to 1')
        probs.setflags(write=False)
        self.probs = probs

    def __getitem__(self, x):
        return PolicyDistribution(self.probs[x])

    def __len__(self):
        return self.probs.shape[0]

    def support_sizes(self):
        """
        Number of supported actions per state.
        """
        return np.count_nonzero(self.probs > 0., axis=1)

    @classmethod
    def uniform(cls, n_states, n_actions):
        return cls(np.full((n_states, n_actions), 1./n_actions))

    @classmethod
    def deterministic(cls, actions, n_actions):
        """
        Point masses on the given action per state.
        """
        actions = np.asarray(actions, dtype=np.int64)
        probs = np.zeros((actions.size, n_actions))
        probs[np.arange(actions.size), actions] = 1.
        return cls(probs)


def random_mdp(n_states, n_actions, gamma=0.9, seed=None, n_terminal=0,
               deterministic=False):
    """
    Random MDP: Dirichlet(1) transition rows, rewards uniform in [0, 1].

    :param n_states: number of states
    :param n_actions: number of actions
    :param gamma: discount factor
    :param seed: seed of ``numpy.random.default_rng``
    :param n_terminal: the last ``n_terminal`` states are terminal
    :param deterministic: one-hot transition rows drawn uniformly instead
        of Dirichlet rows
    """

    # Initialize the random number generator
    rng = np.random.default_rng(seed)

    if deterministic:
        nxt = rng.integers(0, n_states, size=(n_states, n_actions))
        transition = np.zeros((n_states, n_actions, n_states))
        np.put_along_axis(transition, nxt[:, :, np.newaxis], 1., axis=2)
    else:
        transition = rng.dirichlet(np.ones(n_states), size=(n_states, n_actions))
        # Renormalize against rounding
        transition /= transition.sum(axis=2, keepdims=True)
    reward = rng.uniform(0., 1., size=(n_states, n_actions))

    terminal = np.zeros(n_states, dtype=bool)
    if n_terminal > 0:
        terminal[n_states-n_terminal:] = True
        for x in np.flatnonzero(terminal):
            transition[x] = 0.
            transition[x, :, x] = 1.
            reward[x] = 0.

    return TabularMDP(transition, reward, gamma, terminal)


def bandit_mdp(rewards, gamma=0.9):
    """
    Single-state MDP whose actions all self-loop.

    :param rewards: reward of each arm
    :param gamma: discount factor
    """
    rewards = np.asarray(rewards, dtype=np.float64).ravel()
    transition = np.ones((1, rewards.size, 1))
    return TabularMDP(transition, rewards[np.newaxis, :], gamma)


def chain_mdp(n_states, gamma=0.9, reward=1.):
    """
    Deterministic chain ending in a terminal state. Action 0 moves one
    state to the right and earns ``reward``; action 1 stays put for free.
    """
    transition = np.zeros((n_states, 2, n_states))
    rewards = np.zeros((n_states, 2))
    for x in range(n_states-1):
        transition[x, 0, x+1] = 1.
        transition[x, 1, x] = 1.
        rewards[x, 0] = reward
    transition[n_states-1, :, n_states-1] = 1.
    terminal = np.zeros(n_states, dtype=bool)
    terminal[-1] = True
    return TabularMDP(transition, rewards, gamma, terminal)

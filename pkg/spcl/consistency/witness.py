#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: witness.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Consistency witnesses (V, mu, lambda, Lambda) and sub-trajectories.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

from dataclasses import dataclass

import numpy as np

from spcl.core.exceptions import DomainError
from spcl.mdp.solvers import q_from_v
from spcl.mdp.tabular import TabularPolicy


class ConsistencyWitness():
    """
    Candidate solution of the one-step sparse consistency equation.

    :param v: value per state, shape (n_states,)
    :param mu: policy, TabularPolicy or (n_states, n_actions) array
    :param lam: multipliers of ``mu >= 0``, shape (n_states, n_actions)
    :param Lam: multipliers of the normalization, shape (n_states,)
    :param alpha: regularization weight
    """

    def __init__(self, v, mu, lam, Lam, alpha):
        """
        Initialize the ConsistencyWitness class.
        """
        if isinstance(mu, TabularPolicy):
            mu = mu.probs
        self.v = np.array(v, dtype=np.float64)
        self.mu = np.array(mu, dtype=np.float64)
        self.lam = np.array(lam, dtype=np.float64)
        self.Lam = np.array(Lam, dtype=np.float64)
        self.alpha = float(alpha)

        if not self.alpha > 0.:
            raise DomainError('alpha must be > 0')
        n_states, n_actions = self.mu.shape
        if (self.v.shape != (n_states,) or self.Lam.shape != (n_states,)
                or self.lam.shape != (n_states, n_actions)):
            raise DomainError('witness arrays have inconsistent shapes')

    @property
    def policy(self):
        return TabularPolicy(self.mu)

    def constraint_violation(self):
        """
        Largest violation of the witness constraints: simplex rows,
        ``lambda >= 0``, ``lambda mu = 0`` and ``-alpha/2 <= Lambda <= 0``.
        """
        viol = [np.max(np.abs(self.mu.sum(axis=1)-1.)),
                np.max(-self.mu),
                np.max(-self.lam),
                np.max(np.abs(self.lam*self.mu)),
                np.max(self.Lam),
                np.max(-0.5*self.alpha-self.Lam)]
        return float(max(0., *viol))

    def satisfies_constraints(self, tol=1.e-10):
        return self.constraint_violation() <= tol

    def copy(self):
        return ConsistencyWitness(self.v, self.mu, self.lam, self.Lam, self.alpha)


@dataclass
class SubTrajectory():
    """
    Window ``(x_0, a_0, r_0, ..., x_n)`` of an episode.

    ``observations`` holds ``n+1`` entries. ``terminal_cut`` marks a window
    ending with the episode, whose bootstrap value is zero.
    """
    observations: np.ndarray
    actions: np.ndarray
    rewards: np.ndarray
    terminal_cut: bool = False

    def __post_init__(self):
        self.observations = np.asarray(self.observations)
        self.actions = np.asarray(self.actions, dtype=np.int64)
        self.rewards = np.asarray(self.rewards, dtype=np.float64)
        if self.actions.size < 1:
            raise DomainError('a sub-trajectory holds at least one step')
        if self.rewards.shape != self.actions.shape or len(self.observations) != self.actions.size+1:
            raise DomainError('sub-trajectory lengths are inconsistent')

    @property
    def d(self):
        return int(self.actions.size)


def construct_witness(m, v_star, mu_star, alpha, tol=1.e-6):
    """
    Lagrange multipliers of a sparse-optimal pair.

    ``Lambda(x)`` is the common value of ``Q + alpha/2 - alpha mu - v`` over
    supported actions and ``lambda`` the slack of unsupported actions.
    Terminal states get ``lambda = 0`` and ``Lambda = -alpha/2``.

    :param m: TabularMDP
    :param v_star: sparse-optimal values
    :param mu_star: sparse-optimal policy
    :param alpha: regularization weight
    :param tol: admissible disagreement among supported actions
    """

    v = np.asarray(v_star, dtype=np.float64)
    mu = mu_star.probs if isinstance(mu_star, TabularPolicy) else np.asarray(mu_star, dtype=np.float64)
    q = q_from_v(m, v)

    # Common value over the support
    supported = mu > 0.
    base = q+0.5*alpha-alpha*mu-v[:, np.newaxis]
    Lam = np.sum(np.where(supported, base, 0.), axis=1)/np.sum(supported, axis=1)
    disagreement = np.where(supported, np.abs(base-Lam[:, np.newaxis]), 0.)
    disagreement[m.terminal] = 0.
    if np.max(disagreement) > tol:
        raise DomainError('supported actions disagree by '+repr(float(np.max(disagreement)))
                          +': the pair is not sparse-optimal')

    # Slack of unsupported actions
    lam = np.where(supported, 0., Lam[:, np.newaxis]-(q+0.5*alpha-v[:, np.newaxis]))

    lam[m.terminal] = 0.
    Lam[m.terminal] = -0.5*alpha

    return ConsistencyWitness(v, mu, lam, Lam, alpha)

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: bounds.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Sub-optimality bounds of the soft and sparse optimal policies measured in
the original (unregularized) MDP.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from spcl.core.exceptions import TheoremViolation
from spcl.mdp.solvers import backup, extract_policy, policy_evaluation, value_iteration

logger = logging.getLogger(__name__)


def soft_bound(n_actions, alpha, gamma):
    """
    Worst-case loss of the soft-max optimal policy, ``alpha log|A|/(1-gamma)``.
    """
    return alpha*np.log(n_actions)/(1.-gamma)


def sparse_bound(n_actions, alpha, gamma):
    """
    Worst-case loss of the sparsemax optimal policy,
    ``alpha (|A|-1)/(2|A|)/(1-gamma)``.
    """
    return alpha*(n_actions-1.)/(2.*n_actions)/(1.-gamma)


@dataclass
class BoundReport():
    """
    Realized gaps ``V* - V^mu`` of the soft and sparse optimal policies
    against their bounds.
    """
    alpha: float
    gamma: float
    n_actions: int
    v_star: np.ndarray = field(repr=False)
    v_soft: np.ndarray = field(repr=False)
    v_sparse: np.ndarray = field(repr=False)
    slack: float = 1.e-8

    @property
    def soft_gap(self):
        return self.v_star-self.v_soft

    @property
    def sparse_gap(self):
        return self.v_star-self.v_sparse

    @property
    def soft_bound(self):
        return soft_bound(self.n_actions, self.alpha, self.gamma)

    @property
    def sparse_bound(self):
        return sparse_bound(self.n_actions, self.alpha, self.gamma)

    def violations(self):
        """
        List of ``(policy, state, gap, bound)`` for every broken inequality.
        """
        out = []
        for name, gap, bound in (('soft', self.soft_gap, self.soft_bound),
                                 ('sparse', self.sparse_gap, self.sparse_bound)):
            bad = np.flatnonzero((gap > bound+self.slack) | (gap < -self.slack))
            out.extend((name, int(x), float(gap[x]), float(bound)) for x in bad)
        return out

    @property
    def passed(self):
        return len(self.violations()) == 0

    def as_dict(self):
        return {'alpha': self.alpha, 'gamma': self.gamma, 'n_actions': self.n_actions,
                'soft_bound': float(self.soft_bound),
                'sparse_bound': float(self.sparse_bound),
                'worst_soft_gap': float(np.max(self.soft_gap)),
                'worst_sparse_gap': float(np.max(self.sparse_gap)),
                'passed': self.passed}


def check_bounds(m, alpha, tol=1.e-10, slack=1.e-8, strict=True):
    """
    Check ``V* - bound <= V^mu <= V*`` per state for the soft and sparse
    optimal policies, both evaluated without entropy bonus.

    :param m: TabularMDP
    :param alpha: regularization weight
    :param tol: value iteration tolerance
    :param slack: numerical slack of the inequalities
    :param strict: raise TheoremViolation on a broken inequality
    :returns: BoundReport
    """

    # Optimal values and regularized optimal policies
    v_star = value_iteration(m, 'max', alpha, tol).v
    mu_soft = extract_policy(m, value_iteration(m, 'soft', alpha, tol).v, 'soft', alpha)
    mu_sparse = extract_policy(m, value_iteration(m, 'sparse', alpha, tol).v, 'sparse', alpha)

    report = BoundReport(alpha, m.gamma, m.n_actions, v_star,
                         policy_evaluation(m, mu_soft, 'plain'),
                         policy_evaluation(m, mu_sparse, 'plain'), slack)

    logger.debug('bounds: soft gap %.3e <= %.3e, sparse gap %.3e <= %.3e',
                 np.max(report.soft_gap), report.soft_bound,
                 np.max(report.sparse_gap), report.sparse_bound)

    if strict and not report.passed:
        raise TheoremViolation('sub-optimality bound violated: '
                               +str(report.violations()[:5]), report)
    return report


def bellman_inequality_gap(m, v, alpha):
    """
    Largest ``(T_sp v)(x) - v(x) - alpha/2`` over non-terminal states; never
    positive for the value part of a consistent witness.
    """
    gap = backup(m, v, 'sparse', alpha)-np.asarray(v)-0.5*alpha
    gap = gap[~m.terminal]
    return float(np.max(gap)) if gap.size else -0.5*alpha

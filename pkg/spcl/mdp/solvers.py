#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: solvers.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Exact tabular solvers: Bellman backups for the original, soft and sparse
objectives, value iteration, policy extraction and policy evaluation.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import LinAlgError, solve
from scipy.special import entr, logsumexp, softmax

from spcl.core.exceptions import ConvergenceError, DomainError, SpclError
from spcl.core.operators import sparsemax_rows, spmax_rows
from spcl.mdp.tabular import TabularPolicy

logger = logging.getLogger(__name__)

KINDS = ('max', 'soft', 'sparse')
OBJECTIVES = ('plain', 'soft', 'sparse')

# Largest system solved directly in policy_evaluation
DIRECT_SOLVE_LIMIT = 2000


def _check_kind(kind, alpha, kinds=KINDS):
    if kind not in kinds:
        raise DomainError('unknown kind '+repr(kind)+', expected one of '+str(kinds))
    if kind != kinds[0] and not alpha > 0.:
        raise DomainError('alpha must be > 0 for the '+kind+' kind')


def q_from_v(m, v):
    """
    Action values ``Q[x, a] = r[x, a] + gamma sum_x' P[x, a, x'] v[x']``.

    :param m: TabularMDP
    :param v: value per state
    """
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (m.n_states,):
        raise DomainError('value function must have shape ('+str(m.n_states)+',)')
    return m.reward+m.gamma*np.einsum('xay,y->xa', m.transition, v)


def backup(m, v, kind='sparse', alpha=1.):
    """
    One application of the max, soft or sparse Bellman optimality operator.
    Terminal states map to 0.

    :param m: TabularMDP
    :param v: value per state
    :param kind: ``'max'``, ``'soft'`` or ``'sparse'``
    :param alpha: regularization weight, ignored for ``'max'``

    .. rubric:: Basic usage

    >>> import numpy as np
    >>> from spcl.mdp import TabularMDP, backup
    >>> m = TabularMDP([[[1.]]], [[1.]], 0.9)
    >>> backup(m, np.array([10.]), 'max')
    array([10.])
    """

    _check_kind(kind, alpha)
    q = q_from_v(m, v)

    if m.n_actions == 1:
        # A single action carries no entropy
        out = q[:, 0].copy()
    elif kind == 'max':
        out = np.max(q, axis=1)
    elif kind == 'soft':
        out = alpha*logsumexp(q/alpha, axis=1)
    else:
        out = alpha*spmax_rows(q/alpha)

    out[m.terminal] = 0.
    return out


@dataclass
class ValueIterationResult():
    """
    Outcome of value_iteration: fixed point, sweeps and residual history.
    """
    v: np.ndarray
    iterations: int
    residuals: np.ndarray = field(repr=False)

    @property
    def residual(self):
        return float(self.residuals[-1]) if self.residuals.size else 0.


def value_iteration(m, kind='sparse', alpha=1., tol=1.e-10, max_iters=1000000, v0=None):
    """
    Iterate the Bellman optimality operator until the sup-norm change
    between sweeps is at most ``tol``.

    :param m: TabularMDP
    :param kind: ``'max'``, ``'soft'`` or ``'sparse'``
    :param alpha: regularization weight
    :param tol: stopping tolerance on ``|Tv - v|_inf``
    :param max_iters: maximum number of sweeps
    :param v0: starting point, zero by default
    :returns: ValueIterationResult

    .. rubric:: Basic usage

    >>> from spcl.mdp import TabularMDP, value_iteration
    >>> m = TabularMDP([[[1.]]], [[1.]], 0.5)
    >>> round(float(value_iteration(m, 'max').v[0]), 8)
    2.0
    """

    _check_kind(kind, alpha)
    if not tol > 0.:
        raise DomainError('tol must be > 0')

    # Initialize
    if v0 is None:
        v = np.zeros(m.n_states)
    else:
        v = np.array(v0, dtype=np.float64)
        v[m.terminal] = 0.
    residuals = []

    for it in range(1, max_iters+1):
        vnew = backup(m, v, kind, alpha)
        res = float(np.max(np.abs(vnew-v)))
        residuals.append(res)
        v = vnew
        if res <= tol:
            logger.debug('value iteration (%s) converged in %d sweeps, residual %.3e',
                         kind, it, res)
            return ValueIterationResult(v, it, np.array(residuals))
        if it % 10000 == 0:
            logger.info('value iteration (%s): sweep %d, residual %.3e', kind, it, res)

    raise ConvergenceError('value iteration did not converge in '+str(max_iters)
                           +' sweeps (residual '+repr(residuals[-1])+')',
                           residuals[-1], max_iters)


def extract_policy(m, v, kind='sparse', alpha=1.):
    """
    Greedy, soft-max or sparsemax policy of ``q_from_v(m, v)``.

    :param m: TabularMDP
    :param v: value per state, normally the fixed point of the same kind
    :param kind: ``'max'`` (one-hot, lowest index on ties), ``'soft'`` or
        ``'sparse'``
    :param alpha: regularization weight
    """

    _check_kind(kind, alpha)
    q = q_from_v(m, v)

    if kind == 'max':
        probs = np.zeros_like(q)
        probs[np.arange(m.n_states), np.argmax(q, axis=1)] = 1.
    elif kind == 'soft':
        probs = softmax(q/alpha, axis=1)
    else:
        probs = sparsemax_rows(q/alpha)[0]

    return TabularPolicy(probs)


def entropy_bonus(m, mu, objective='sparse', alpha=1.):
    """
    Per-state expected entropy bonus of a policy, zero at terminal states.
    """
    _check_kind(objective, alpha, OBJECTIVES)
    probs = mu.probs
    if objective == 'plain':
        bonus = np.zeros(m.n_states)
    elif objective == 'soft':
        bonus = alpha*np.sum(entr(probs), axis=1)
    else:
        bonus = 0.5*alpha*np.sum(probs*(1.-probs), axis=1)
    bonus[m.terminal] = 0.
    return bonus


def policy_evaluation(m, mu, objective='plain', alpha=1.):
    """
    Value of a policy under the plain, soft or sparse objective, solving
    ``V = r_mu + gamma P_mu V``.

    Systems up to 2000 states are solved directly, larger ones by fixed
    point iteration to 1e-12.

    :param m: TabularMDP
    :param mu: TabularPolicy
    :param objective: ``'plain'``, ``'soft'`` or ``'sparse'``
    :param alpha: regularization weight
    """

    if not isinstance(mu, TabularPolicy):
        mu = TabularPolicy(mu)
    if mu.probs.shape != (m.n_states, m.n_actions):
        raise DomainError('policy shape does not match the MDP')

    # Policy-averaged reward and kernel
    rmu = np.sum(mu.probs*m.reward, axis=1)+entropy_bonus(m, mu, objective, alpha)
    pmu = np.einsum('xa,xay->xy', mu.probs, m.transition)

    if m.n_states <= DIRECT_SOLVE_LIMIT:
        try:
            return solve(np.eye(m.n_states)-m.gamma*pmu, rmu)
        except LinAlgError as err:
            raise SpclError('singular policy evaluation system') from err

    v = np.zeros(m.n_states)
    while True:
        vnew = rmu+m.gamma*pmu @ v
        if np.max(np.abs(vnew-v)) <= 1.e-12:
            return vnew
        v = vnew

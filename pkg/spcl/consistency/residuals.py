#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: residuals.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
One-step and multi-step residuals of the sparse and soft consistency
equations. Expectations are exact tabular sums; terminal states
contribute nothing.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np

from spcl.core.exceptions import DomainError
from spcl.mdp.solvers import q_from_v


def _step_terms(m, w):
    """
    ``r + alpha/2 - alpha mu + lambda - Lambda`` per (state, action).
    """
    terms = m.reward+0.5*w.alpha-w.alpha*w.mu+w.lam-w.Lam[:, np.newaxis]
    terms[m.terminal] = 0.
    return terms


def one_step_residuals(m, w):
    """
    All one-step sparse residuals as an (n_states, n_actions) array.
    """
    res = _step_terms(m, w)+m.gamma*np.einsum('xay,y->xa', m.transition, w.v)-w.v[:, np.newaxis]
    res[m.terminal] = 0.
    return res


def one_step_residual(m, w, x, a):
    """
    ``r(x,a) + alpha/2 - alpha mu(a|x) + lambda(a|x) - Lambda(x)
    + gamma E v(x') - v(x)``.

    :param m: TabularMDP
    :param w: ConsistencyWitness
    :param x: state
    :param a: action
    """
    if m.terminal[x]:
        return 0.
    return float(m.reward[x, a]+0.5*w.alpha-w.alpha*w.mu[x, a]+w.lam[x, a]-w.Lam[x]
                 +m.gamma*np.dot(m.transition[x, a], w.v)-w.v[x])


def _forward(m, x0, actions):
    """
    State distributions along a fixed action sequence.
    """
    dist = np.zeros(m.n_states)
    dist[x0] = 1.
    out = [dist]
    for a in actions:
        dist = dist @ m.transition[:, a, :]
        out.append(dist)
    return out


def multi_step_residual_exact(m, w, x0, actions):
    """
    Exact d-step residual
    ``E[gamma^d v(x_d)] + sum_t gamma^t E[r + alpha/2 - alpha mu + lambda - Lambda] - v(x_0)``
    along a prescribed action sequence.

    :param m: TabularMDP
    :param w: ConsistencyWitness
    :param x0: start state
    :param actions: actions ``a_0 .. a_{d-1}``
    """

    actions = np.asarray(actions, dtype=np.int64).ravel()
    if actions.size < 1:
        raise DomainError('rollout length must be >= 1')

    terms = _step_terms(m, w)
    dists = _forward(m, x0, actions)

    total = -w.v[x0]
    for t, a in enumerate(actions):
        total += m.gamma**t*np.dot(dists[t], terms[:, a])
    total += m.gamma**actions.size*np.dot(dists[-1], w.v)

    return float(total)


def telescoped_residual(m, w, x0, actions):
    """
    Discounted expected sum of one-step residuals along an action sequence.
    """
    actions = np.asarray(actions, dtype=np.int64).ravel()
    res = one_step_residuals(m, w)
    dists = _forward(m, x0, actions)
    return float(sum(m.gamma**t*np.dot(dists[t], res[:, a]) for t, a in enumerate(actions)))


def _soft_terms(m, mu, alpha, needed=None):
    mu = np.asarray(getattr(mu, 'probs', mu), dtype=np.float64)
    with np.errstate(divide='ignore'):
        logmu = np.log(mu)
    zero = (mu <= 0.) & ~m.terminal[:, np.newaxis]
    if needed is not None:
        zero &= needed
    if np.any(zero):
        raise DomainError('soft consistency needs mu(a|x) > 0')
    terms = m.reward-alpha*np.where(mu > 0., logmu, 0.)
    terms[m.terminal] = 0.
    return terms


def soft_consistency_residual(m, v, mu, x, a, alpha):
    """
    One-step soft residual ``r - alpha log mu(a|x) + gamma E v(x') - v(x)``.

    :param m: TabularMDP
    :param v: value per state
    :param mu: TabularPolicy or array
    :param x: state
    :param a: action
    :param alpha: regularization weight
    """
    if m.terminal[x]:
        return 0.
    needed = np.zeros((m.n_states, m.n_actions), dtype=bool)
    needed[x, a] = True
    terms = _soft_terms(m, mu, alpha, needed)
    v = np.asarray(v, dtype=np.float64)
    return float(terms[x, a]+m.gamma*np.dot(m.transition[x, a], v)-v[x])


def soft_multi_step_residual_exact(m, v, mu, x0, actions, alpha):
    """
    Exact d-step soft residual along a prescribed action sequence.
    """
    actions = np.asarray(actions, dtype=np.int64).ravel()
    if actions.size < 1:
        raise DomainError('rollout length must be >= 1')
    v = np.asarray(v, dtype=np.float64)
    dists = _forward(m, x0, actions)

    needed = np.zeros((m.n_states, m.n_actions), dtype=bool)
    for t, a in enumerate(actions):
        needed[:, a] |= dists[t] > 0.
    terms = _soft_terms(m, mu, alpha, needed)

    total = -v[x0]
    for t, a in enumerate(actions):
        total += m.gamma**t*np.dot(dists[t], terms[:, a])
    total += m.gamma**actions.size*np.dot(dists[-1], v)
    return float(total)


def kkt_form_violation(m, w):
    """
    Largest violation of the KKT form of the one-step equation: equality
    ``Q + alpha/2 - alpha mu - v = Lambda`` on the support of mu and
    ``Q + alpha/2 - v <= Lambda`` off the support.
    """
    q = q_from_v(m, w.v)
    base = q+0.5*w.alpha-w.alpha*w.mu-w.v[:, np.newaxis]-w.Lam[:, np.newaxis]
    supported = w.mu > 0.
    viol = np.where(supported, np.abs(base), np.maximum(base, 0.))
    viol[m.terminal] = 0.
    return float(np.max(viol))

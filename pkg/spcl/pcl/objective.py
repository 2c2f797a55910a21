#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: objective.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Path consistency errors and the squared-error objective.

For a window ``xi = (x_0, a_0, r_0, ..., x_d)`` the sparse consistency
error is::

    J = -V(x_0) + g^d V(x_d)
        + sum_t g^t (r_t + alpha/2 - alpha mu(a_t|x_t) + lam(a_t|x_t) - Lam(x_t))

and the soft one replaces the bracket with ``r_t - alpha log mu(a_t|x_t)``.
The bootstrap term is dropped for windows cut by the end of an episode.
The objective of a batch is ``1/2 sum_i J_i^2``.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np

from spcl.core.exceptions import DivergenceError, DomainError


class _Layout():
    """
    Row bookkeeping of a batch of windows stacked into one forward pass.
    """

    def __init__(self, batch, gamma):
        if len(batch) == 0:
            raise DomainError('the batch of sub-trajectories is empty')
        lengths = np.array([xi.d for xi in batch])
        offsets = np.concatenate(([0], np.cumsum(lengths+1)[:-1]))

        self.n_windows = len(batch)
        self.first = offsets
        self.last = offsets+lengths
        self.boot = np.array([0. if xi.terminal_cut else gamma**xi.d for xi in batch])

        # One entry per step
        self.window = np.repeat(np.arange(self.n_windows), lengths)
        step = np.arange(lengths.sum())-np.repeat(np.cumsum(lengths)-lengths, lengths)
        self.rows = np.repeat(offsets, lengths)+step
        self.disc = gamma**step
        self.actions = np.concatenate([xi.actions for xi in batch])
        self.rewards = np.concatenate([xi.rewards for xi in batch])
        self.observations = np.concatenate([np.asarray(xi.observations) for xi in batch])


def _step_values(layout, out, alpha, soft):
    rows, acts = layout.rows, layout.actions
    if soft:
        if out.log_mu is None:
            raise DomainError('soft consistency needs a soft-max policy head')
        logp = out.log_mu[rows, acts]
        if np.any(np.isinf(logp)):
            raise DomainError('log of a zero probability along a window')
        return layout.rewards-alpha*logp
    return (layout.rewards+0.5*alpha-alpha*out.mu[rows, acts]+out.lam[rows, acts]
            -out.Lam[rows])


def _errors(layout, out, alpha, soft):
    terms = layout.disc*_step_values(layout, out, alpha, soft)
    J = (-out.v[layout.first]+layout.boot*out.v[layout.last]
         +np.bincount(layout.window, terms, minlength=layout.n_windows))
    bad = np.flatnonzero(~np.isfinite(J))
    if bad.size:
        raise DivergenceError('non-finite consistency error', index=int(bad[0]))
    return J


def _window_error(xi, outputs, alpha, gamma, soft):
    layout = _Layout([xi], gamma)
    if len(outputs) != xi.d+1:
        raise DomainError('expected outputs at the '+str(xi.d+1)+' observations of the window')
    return float(_errors(layout, outputs, alpha, soft)[0])


def consistency_error(xi, outputs, alpha, gamma):
    """
    Sparse consistency error of one window.

    :param xi: SubTrajectory
    :param outputs: ModelOutputs at the ``d+1`` observations of ``xi``
    :param alpha: regularization weight
    :param gamma: discount factor
    """
    return _window_error(xi, outputs, alpha, gamma, False)


def soft_consistency_error(xi, outputs, alpha, gamma):
    """
    Soft consistency error of one window (soft-max heads).
    """
    return _window_error(xi, outputs, alpha, gamma, True)


def consistency_errors(batch, model, alpha, gamma):
    """
    Consistency errors of a batch of windows under a model.

    The soft or sparse error is picked from the policy head of the model.

    :returns: array of ``J``, one entry per window
    """
    layout = _Layout(batch, gamma)
    out = model.forward(layout.observations)
    return _errors(layout, out, alpha, model.policy == 'softmax')


def _loss_and_grads(batch, model, alpha, gamma, soft):
    layout = _Layout(batch, gamma)
    out = model.forward(layout.observations)
    J = _errors(layout, out, alpha, soft)
    loss = 0.5*float(np.sum(J**2))

    # d loss / d J = J, spread over the heads
    weight = layout.disc*J[layout.window]
    rows, acts = layout.rows, layout.actions
    dv = np.zeros_like(out.v)
    dv[layout.first] -= J
    dv[layout.last] += layout.boot*J
    upstream = {'v': dv}
    if soft:
        dlog_mu = np.zeros_like(out.mu)
        dlog_mu[rows, acts] = -alpha*weight
        upstream['log_mu'] = dlog_mu
    else:
        dmu = np.zeros_like(out.mu)
        dlam = np.zeros_like(out.lam)
        dLam = np.zeros_like(out.Lam)
        dmu[rows, acts] = -alpha*weight
        dlam[rows, acts] = weight
        dLam[rows] = -weight
        upstream.update(mu=dmu, lam=dlam, Lam=dLam)

    grad = model.backward(upstream)
    if not np.all(np.isfinite(grad)):
        raise DivergenceError('non-finite gradient', index=int(np.argmax(np.abs(J))))
    return loss, grad


def loss_and_grads(batch, model, config):
    """
    Sparse path consistency objective and its gradient.

    :param batch: list of SubTrajectory
    :param model: Model with a sparsemax policy head (separate or unified)
    :param config: object with ``alpha`` and ``gamma`` attributes
    :returns: (``1/2 sum J^2``, gradient with respect to ``model.params``)
    """
    if model.policy != 'sparsemax':
        raise DomainError('sparse consistency needs a sparsemax policy head')
    return _loss_and_grads(batch, model, config.alpha, config.gamma, False)


def soft_loss_and_grads(batch, model, config):
    """
    Soft path consistency objective and its gradient (soft-max heads).
    """
    if model.policy != 'softmax':
        raise DomainError('soft consistency needs a soft-max policy head')
    return _loss_and_grads(batch, model, config.alpha, config.gamma, True)


def surrogate_gap(J):
    """
    ``1/2 sum J^2 - n/2 mean(J)^2``, nonnegative by Cauchy-Schwarz.
    """
    J = np.asarray(J, dtype=np.float64)
    if J.size == 0:
        raise DomainError('no consistency errors')
    return 0.5*float(np.sum(J**2))-0.5*J.size*float(np.mean(J))**2

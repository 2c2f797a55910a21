#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: operators.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Operators of the soft and sparse regularized MDPs: sfmax, spmax, support
sets, threshold, sparsemax and softmax distributions, entropies.

All ``spmax``-like operators act on already temperature-scaled scores
``z = q/alpha``; the distribution builders take raw scores and the
temperature.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np
from scipy.special import entr, logsumexp, softmax

from spcl.core.exceptions import DomainError


def _as_scores(z):
    """
    Check and convert a vector of action scores.
    """
    z = np.asarray(z, dtype=np.float64)
    if z.ndim != 1 or z.size == 0:
        raise DomainError('action scores must be a non-empty 1-D vector')
    if not np.all(np.isfinite(z)):
        raise DomainError('action scores must be finite')
    return z


def _check_alpha(alpha):
    if not alpha > 0.:
        raise DomainError('temperature alpha must be > 0, got '+str(alpha))


def _threshold(csum, size):
    """
    Threshold from the sum of the supported scores and the support size.
    """
    return (csum-1.)/size


class PolicyDistribution():
    """
    Probability vector over actions with its explicit support.

    :param probs: non-negative probabilities summing to one
    """

    def __init__(self, probs):
        """
        Initialize the PolicyDistribution class.
        """
        probs = np.array(probs, dtype=np.float64)
        if probs.ndim != 1 or probs.size == 0:
            raise DomainError('probabilities must be a non-empty 1-D vector')
        if np.any(probs < 0.) or not np.all(np.isfinite(probs)):
            raise DomainError('probabilities must be finite and >= 0')
        if abs(np.sum(probs)-1.) > 1.e-12:
            raise DomainError('probabilities must sum to 1')
        probs.setflags(write=False)
        self.probs = probs
        self.support = np.flatnonzero(probs > 0.)

    def __len__(self):
        return self.probs.size

    def __getitem__(self, a):
        return self.probs[a]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.probs, dtype=dtype)

    def __repr__(self):
        return 'PolicyDistribution('+np.array2string(self.probs)+')'

    def is_deterministic(self):
        """
        True for a point mass.
        """
        return self.support.size == 1


def _as_probs(mu):
    if isinstance(mu, PolicyDistribution):
        return mu.probs
    return np.asarray(mu, dtype=np.float64)


def sparsemax_rows(z):
    """
    Row-wise Euclidean projection of scaled scores onto the simplex.

    :param z: array of scaled scores, last axis indexes actions
    :returns: tuple ``(probs, threshold, support)`` where ``support`` is a
        boolean mask of the supported actions.

    Scores are sorted in descending order (stable, so ties keep ascending
    action order) and the largest rank ``k`` satisfying
    ``1 + k z_(k) > sum_{j<=k} z_(j)`` gives the support size.

    .. rubric:: Basic usage

    >>> import numpy as np
    >>> from spcl.core import sparsemax_rows
    >>> probs, thresh, mask = sparsemax_rows(np.array([[1., 0.], [2., 2.]]))
    >>> probs
    array([[1. , 0. ],
           [0.5, 0.5]])
    """

    z = np.asarray(z, dtype=np.float64)
    shape = z.shape
    z = z.reshape(-1, shape[-1])
    nact = z.shape[1]

    # Shift by the row maximum, the projection is translation-invariant
    zmax = np.max(z, axis=1)
    y = z-zmax[:, np.newaxis]

    # Sort descending, stable
    order = np.argsort(-y, axis=1, kind='stable')
    ysort = np.take_along_axis(y, order, axis=1)
    csum = np.cumsum(ysort, axis=1)
    rank = np.arange(1, nact+1)

    # Support size from the threshold test
    test = 1.+rank*ysort > csum
    ksup = np.max(np.where(test, rank, 0), axis=1)
    shifted = _threshold(csum[np.arange(z.shape[0]), ksup-1], ksup)

    # Support mask in the original action order
    support = np.zeros(z.shape, dtype=bool)
    np.put_along_axis(support, order, rank[np.newaxis, :] <= ksup[:, np.newaxis], axis=1)

    probs = np.where(support, np.maximum(y-shifted[:, np.newaxis], 0.), 0.)
    thresh = shifted+zmax

    return (probs.reshape(shape), thresh.reshape(shape[:-1]),
            support.reshape(shape))


def spmax_rows(z):
    """
    Row-wise spmax of scaled scores.
    """
    z = np.asarray(z, dtype=np.float64)
    zmax = np.max(z, axis=-1)
    y = z-zmax[..., np.newaxis]
    probs, thresh, support = sparsemax_rows(y)
    terms = np.where(support, y**2-thresh[..., np.newaxis]**2, 0.)
    return 0.5*(1.+np.sum(terms, axis=-1))+zmax


def sfmax(z):
    """
    Log-sum-exp of scaled scores, max-shifted for overflow safety.

    :param z: scaled action scores

    .. rubric:: Basic usage

    >>> from spcl.core import sfmax
    >>> round(sfmax([0., 0.]), 6)
    0.693147
    """
    z = _as_scores(z)
    return float(logsumexp(z))


def softmax_policy(q, alpha):
    """
    Soft-max distribution ``exp(q/alpha)/Z``.

    :param q: action scores
    :param alpha: temperature (> 0)
    """
    q = _as_scores(q)
    _check_alpha(alpha)
    return PolicyDistribution(softmax(q/alpha))


def support_set(z):
    """
    Indices (ascending) of the actions supported by the sparsemax of
    scaled scores ``z``.

    .. rubric:: Basic usage

    >>> from spcl.core import support_set
    >>> support_set([1., 0.])
    array([0])
    """
    z = _as_scores(z)
    probs, thresh, support = sparsemax_rows(z[np.newaxis, :])
    return np.flatnonzero(support[0])


def g_threshold(z, support):
    """
    Threshold ``(sum_{a in S} z_a - 1)/|S|``.

    :param z: scaled action scores
    :param support: index set, normally ``support_set(z)``
    """
    z = _as_scores(z)
    support = np.asarray(support, dtype=np.int64).ravel()
    if support.size == 0:
        raise DomainError('support set must be non-empty')
    zmax = np.max(z[support])
    return float(_threshold(np.sum(z[support]-zmax), support.size)+zmax)


def sparsemax_policy(q, alpha):
    """
    Sparsemax distribution ``(q/alpha - G(q/alpha))^+``.

    :param q: action scores
    :param alpha: temperature (> 0)

    .. rubric:: Basic usage

    >>> from spcl.core import sparsemax_policy
    >>> sparsemax_policy([1., 0.], 1.).probs
    array([1., 0.])
    """
    q = _as_scores(q)
    _check_alpha(alpha)
    probs, thresh, support = sparsemax_rows((q/alpha)[np.newaxis, :])
    return PolicyDistribution(probs[0])


def spmax(z):
    """
    Tsallis-regularized maximum of scaled scores,
    ``1/2 [1 + sum_{a in S} (z_a^2 - G(z)^2)]``.

    .. rubric:: Basic usage

    >>> from spcl.core import spmax
    >>> spmax([2., 2.])
    2.25
    """
    z = _as_scores(z)
    return float(spmax_rows(z[np.newaxis, :])[0])


def spmax_gradient(z):
    """
    Gradient of spmax, the sparsemax probabilities of ``z``.
    """
    z = _as_scores(z)
    return sparsemax_rows(z[np.newaxis, :])[0][0]


def tsallis_entropy(mu):
    """
    Tsallis entropy (q=2, k=1/2), ``1/2 (1 - sum mu_a^2)``.
    """
    probs = _as_probs(mu)
    return float(0.5*(1.-np.sum(probs**2)))


def shannon_entropy(mu):
    """
    Shannon entropy with ``0 log 0 = 0``.
    """
    probs = _as_probs(mu)
    return float(np.sum(entr(probs)))

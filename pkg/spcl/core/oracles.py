#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: oracles.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Brute-force reference computations used to validate the operators.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import itertools
import numpy as np

from spcl.core.exceptions import DomainError
from spcl.core.operators import _as_scores, sparsemax_rows


def project_simplex_bruteforce(y):
    """
    Euclidean projection of ``y`` onto the probability simplex by active
    set enumeration.

    Every non-empty candidate support ``S`` is solved in closed form,
    ``mu_S = y_S - (sum y_S - 1)/|S|``; the feasible candidate closest to
    ``y`` is kept. The cost is exponential in the length of ``y``.

    :param y: real vector (length <= 20)
    """

    y = _as_scores(y)
    n = y.size
    if n > 20:
        raise DomainError('brute-force projection limited to 20 actions')

    # All non-empty subsets as boolean masks
    codes = np.arange(1, 2**n, dtype=np.int64)
    masks = ((codes[:, np.newaxis] >> np.arange(n)) & 1).astype(bool)

    # Closed form on each candidate support
    sizes = masks.sum(axis=1)
    tau = (masks @ y-1.)/sizes
    cand = np.where(masks, y[np.newaxis, :]-tau[:, np.newaxis], 0.)

    # Feasible candidates and nearest one
    feasible = np.all(cand >= 0., axis=1)
    dist = np.sum((cand-y[np.newaxis, :])**2, axis=1)
    dist[~feasible] = np.inf

    return cand[np.argmin(dist)]


def tsallis_objective(mu, z):
    """
    Value of ``mu.z + 1/2 (1 - |mu|^2)`` for one or many distributions.

    :param mu: distribution(s), last axis indexes actions
    :param z: scaled action scores
    """
    mu = np.asarray(mu, dtype=np.float64)
    return mu @ z+0.5*(1.-np.sum(mu**2, axis=-1))


def spmax_plugin(z):
    """
    Tsallis-regularized value evaluated at the sparsemax maximizer.
    """
    z = _as_scores(z)
    probs = sparsemax_rows(z[np.newaxis, :])[0][0]
    return float(tsallis_objective(probs, z))


def simplex_lattice(n, resolution):
    """
    All points of the simplex whose coordinates are multiples of
    ``1/resolution``.

    :param n: dimension (number of actions)
    :param resolution: number of subdivisions
    """

    if n == 1:
        return np.ones((1, 1))

    # Stars and bars: bar positions split resolution into n parts
    bars = np.array(list(itertools.combinations(range(resolution+n-1), n-1)),
                    dtype=np.int64).reshape(-1, n-1)
    edges = np.hstack((np.full((bars.shape[0], 1), -1, dtype=np.int64), bars,
                       np.full((bars.shape[0], 1), resolution+n-1, dtype=np.int64)))
    counts = np.diff(edges, axis=1)-1

    return counts/float(resolution)


def spmax_grid(z, resolution=100):
    """
    Grid-search approximation of spmax over the simplex lattice.

    The lattice holds ``C(resolution+n-1, n-1)`` points, keep ``n`` small.
    """
    z = _as_scores(z)
    lattice = simplex_lattice(z.size, resolution)
    return float(np.max(tsallis_objective(lattice, z)))

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: theorems.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Executable optimality checks of consistent witnesses and a projected
residual-minimization search for consistent, possibly non-optimal,
witnesses.

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
from spcl.core.operators import sparsemax_rows
from spcl.consistency.residuals import one_step_residuals
from spcl.consistency.witness import ConsistencyWitness
from spcl.mdp.solvers import policy_evaluation, q_from_v, value_iteration

logger = logging.getLogger(__name__)


@dataclass
class GapReport():
    """
    Realized gaps ``V* - V^mu`` of a witness policy against a bound.

    ``residual`` is the largest one-step residual of the witness and
    ``slack`` the tolerance it induces on the bound.
    """
    name: str
    gaps: np.ndarray = field(repr=False)
    bound: float
    residual: float
    slack: float

    @property
    def worst_gap(self):
        return float(np.max(self.gaps))

    @property
    def passed(self):
        return bool(np.all(self.gaps <= self.bound+self.slack)
                    and np.all(self.gaps >= -self.slack))

    def as_dict(self):
        return {'check': self.name, 'worst_gap': self.worst_gap, 'bound': float(self.bound),
                'residual': float(self.residual), 'slack': float(self.slack),
                'passed': self.passed}


def _slack(m, w):
    residual = float(np.max(np.abs(one_step_residuals(m, w))))
    return residual, residual/(1.-m.gamma)+1.e-8


def _finish(report, strict):
    logger.debug('%s: worst gap %.3e, bound %.3e, residual %.3e', report.name,
                 report.worst_gap, report.bound, report.residual)
    if strict and not report.passed:
        raise TheoremViolation(report.name+' violated: worst gap '+repr(report.worst_gap)
                               +' > bound '+repr(report.bound), report)
    return report


def check_theorem2(m, w, alpha=None, v_star=None, strict=True):
    """
    A consistent witness policy is ``alpha/(1-gamma)``-optimal in the
    sparse MDP.

    :param m: TabularMDP
    :param w: ConsistencyWitness
    :param alpha: regularization weight, default ``w.alpha``
    :param v_star: sparse-optimal values, computed when omitted
    :param strict: raise TheoremViolation on failure
    :returns: GapReport
    """
    alpha = w.alpha if alpha is None else alpha
    if v_star is None:
        v_star = value_iteration(m, 'sparse', alpha).v
    residual, slack = _slack(m, w)
    v_mu = policy_evaluation(m, w.policy, 'sparse', alpha)
    report = GapReport('sparse_optimality', v_star-v_mu, alpha/(1.-m.gamma), residual, slack)
    return _finish(report, strict)


def check_corollary_original(m, w, alpha=None, v_star=None, strict=True):
    """
    A consistent witness policy is ``(3/2 - 1/|A|) alpha/(1-gamma)``-optimal
    in the original MDP.

    :param m: TabularMDP
    :param w: ConsistencyWitness
    :param alpha: regularization weight, default ``w.alpha``
    :param v_star: optimal values of the original MDP, computed when omitted
    :param strict: raise TheoremViolation on failure
    """
    alpha = w.alpha if alpha is None else alpha
    if v_star is None:
        v_star = value_iteration(m, 'max').v
    residual, slack = _slack(m, w)
    v_mu = policy_evaluation(m, w.policy, 'plain')
    bound = (1.5-1./m.n_actions)*alpha/(1.-m.gamma)
    report = GapReport('original_optimality', v_star-v_mu, bound, residual, slack)
    return _finish(report, strict)


def _residual_operator(m, alpha):
    """
    Affine map ``R = J p + b`` from the packed witness ``p = (v, mu, lam, Lam)``
    to the one-step residuals of non-terminal states.
    """
    ns, na = m.n_states, m.n_actions
    rows = np.flatnonzero(~np.repeat(m.terminal, na))
    nv, nmu = ns, ns*na

    jac = np.zeros((ns*na, nv+2*nmu+ns))
    idx = np.arange(ns*na)
    states = np.repeat(np.arange(ns), na)

    jac[:, :nv] = m.gamma*m.transition.reshape(ns*na, ns)
    jac[idx, states] -= 1.
    jac[idx, nv+idx] = -alpha
    jac[idx, nv+nmu+idx] = 1.
    jac[idx, nv+2*nmu+states] = -1.

    offset = m.reward.ravel()+0.5*alpha
    return jac[rows], offset[rows]


def close_witness(m, alpha, Lam, v0=None, tol=1.e-14, max_iters=100000):
    """
    Consistent witness with prescribed normalizer multipliers ``Lambda``.

    The values are the fixed point of the ``gamma``-contraction
    ``v = alpha G(q(v)/alpha) + alpha/2 - Lambda``, mu is the sparsemax of
    ``q/alpha`` and lambda the distance of unsupported actions to the
    threshold, ``alpha G - q``.

    :param m: TabularMDP
    :param alpha: regularization weight
    :param Lam: normalizer multipliers in ``[-alpha/2, 0]``
    :param v0: starting values, zero by default
    :param tol: relative stopping tolerance on the value change
    :param max_iters: maximum number of sweeps
    """
    Lam = np.asarray(Lam, dtype=np.float64)
    v = np.zeros(m.n_states) if v0 is None else np.array(v0, dtype=np.float64)
    v[m.terminal] = 0.

    for it in range(max_iters):
        thresh = sparsemax_rows(q_from_v(m, v)/alpha)[1]
        vnew = alpha*thresh+0.5*alpha-Lam
        vnew[m.terminal] = 0.
        change = np.max(np.abs(vnew-v))
        v = vnew
        if change <= tol*(1.+np.max(np.abs(v))):
            break

    q = q_from_v(m, v)
    mu, thresh, support = sparsemax_rows(q/alpha)
    lam = np.where(support, 0., np.maximum(alpha*thresh[:, np.newaxis]-q, 0.))
    return ConsistencyWitness(v, mu, lam, Lam, alpha)


def search_consistent_witness(m, alpha, seed=None, iters=20000, tol=1.e-12):
    """
    Projected gradient descent on the squared one-step residual from a
    random start.

    After each step mu rows are projected on the simplex, lambda is
    clipped at 0 and zeroed on the support of mu, Lambda is clipped to
    ``[-alpha/2, 0]`` and terminal values are pinned to 0. An iterate still
    above ``tol`` at the end is closed on its Lambda with
    ``close_witness``, which drives the residual to rounding level. The
    returned witness always satisfies the constraints.

    :param m: TabularMDP
    :param alpha: regularization weight
    :param seed: seed of the random start
    :param iters: maximum number of steps
    :param tol: stop once the largest residual is below ``tol``
    """

    # Initialize the random number generator
    rng = np.random.default_rng(seed)
    ns, na = m.n_states, m.n_actions
    nv, nmu = ns, ns*na

    jac, offset = _residual_operator(m, alpha)
    step = 1./np.linalg.norm(jac, 2)**2

    # Random start
    scale = (np.max(np.abs(m.reward))+alpha)/(1.-m.gamma)
    params = np.concatenate((rng.uniform(0., scale, ns),
                             rng.dirichlet(np.ones(na), ns).ravel(),
                             rng.uniform(0., alpha, nmu),
                             rng.uniform(-0.5*alpha, 0., ns)))

    def project(p):
        p[:nv][m.terminal] = 0.
        mu = sparsemax_rows(p[nv:nv+nmu].reshape(ns, na))[0]
        lam = np.maximum(p[nv+nmu:nv+2*nmu].reshape(ns, na), 0.)
        lam[mu > 0.] = 0.
        p[nv:nv+nmu] = mu.ravel()
        p[nv+nmu:nv+2*nmu] = lam.ravel()
        p[nv+2*nmu:] = np.clip(p[nv+2*nmu:], -0.5*alpha, 0.)
        return p

    params = project(params)
    it = 0
    for it in range(iters):
        res = jac @ params+offset
        if res.size == 0 or np.max(np.abs(res)) <= tol:
            break
        params = project(params-step*(jac.T @ res))

    w = ConsistencyWitness(params[:nv], params[nv:nv+nmu].reshape(ns, na),
                           params[nv+nmu:nv+2*nmu].reshape(ns, na),
                           params[nv+2*nmu:], alpha)
    residual = float(np.max(np.abs(one_step_residuals(m, w))))

    # Close the search iterate on its multipliers Lambda
    if residual > tol:
        closed = close_witness(m, alpha, w.Lam, v0=w.v)
        closed_residual = float(np.max(np.abs(one_step_residuals(m, closed))))
        if closed_residual < residual:
            w, residual = closed, closed_residual

    logger.debug('witness search: %d steps, residual %.3e', it, residual)
    return w

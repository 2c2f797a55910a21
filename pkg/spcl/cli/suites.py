#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: suites.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Invariant suites run by ``spcl check``.

Each suite draws seeded random instances, measures the largest error of
every property it checks and reports whether all of them stayed within
their tolerance.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import logging
from dataclasses import dataclass, field
from types import SimpleNamespace

import numpy as np

from spcl.approx.gradcheck import check_gradient, check_model_gradient
from spcl.approx.model import build_model
from spcl.consistency.residuals import one_step_residuals
from spcl.consistency.theorems import (check_corollary_original, check_theorem2,
                                       search_consistent_witness)
from spcl.consistency.witness import SubTrajectory, construct_witness
from spcl.core.exceptions import DomainError
from spcl.core.operators import sparsemax_policy, spmax
from spcl.core.oracles import project_simplex_bruteforce, tsallis_objective
from spcl.mdp.bounds import check_bounds
from spcl.mdp.solvers import backup, extract_policy, value_iteration
from spcl.mdp.tabular import random_mdp
from spcl.pcl.objective import consistency_errors, loss_and_grads, soft_loss_and_grads

logger = logging.getLogger(__name__)

SUITES = ('operators', 'mdp', 'consistency', 'gradients')
KINDS = ('max', 'soft', 'sparse')
ALPHAS = (0.1, 1., 10.)

PROB_TOL = 1.e-10
VALUE_TOL = 1.e-12
BELLMAN_TOL = 1.e-10
RESIDUAL_TOL = 1.e-8
GRAD_TOL = 1.e-5


@dataclass
class SuiteResult():
    """
    Outcome of one suite: number of random instances, largest measured
    error or excess over a bound, and verdict.
    """
    suite: str
    trials: int
    max_violation: float
    passed: bool
    details: dict = field(default_factory=dict)

    def as_dict(self):
        out = {'suite': self.suite, 'trials': self.trials,
               'max_violation': float(self.max_violation), 'passed': bool(self.passed)}
        out.update(self.details)
        return out


def operators_suite(trials, seed):
    """
    sparsemax against the brute-force simplex projection and spmax against
    the Tsallis objective at that projection, on ``20 x trials`` score
    vectors of length 1 to 12.
    """
    rng = np.random.default_rng(seed)
    count = 20*trials
    prob_err = value_err = 0.
    for i in range(count):
        n = int(rng.integers(1, 13))
        alpha = float(rng.choice(ALPHAS))
        q = rng.normal(0., 3., n)
        if i % 4 == 0:
            # Ties
            q = np.round(q)
        z = q/alpha
        ref = project_simplex_bruteforce(z)
        try:
            probs = sparsemax_policy(q, alpha).probs
        except DomainError:
            # Not a distribution at all
            probs = np.full(n, np.inf)
        prob_err = max(prob_err, float(np.max(np.abs(probs-ref))))
        value = float(tsallis_objective(ref, z))
        value_err = max(value_err, abs(spmax(z)-value)/max(1., abs(value)))

    passed = prob_err <= PROB_TOL and value_err <= VALUE_TOL
    if not passed:
        logger.warning('operators: projection error %.3e, spmax error %.3e', prob_err, value_err)
    return SuiteResult('operators', count, max(prob_err, value_err), passed,
                       {'projection_error': prob_err, 'spmax_error': value_err})


def _bellman_properties(m, v, w, kind, alpha):
    """
    Errors of translation, monotonicity and contraction of one backup.
    """
    c = 1.7
    tv = backup(m, v, kind, alpha)
    live = ~m.terminal
    shift = backup(m, v+c, kind, alpha)-tv
    translation = float(np.max(np.abs(shift[live]-m.gamma*c)))
    monotone = float(max(0., np.max(tv-backup(m, np.maximum(v, w), kind, alpha))))
    dist = np.max(np.abs(v-w))
    contraction = float(max(0., np.max(np.abs(tv-backup(m, w, kind, alpha)))-m.gamma*dist))
    return translation, monotone, contraction


def mdp_suite(trials, seed):
    """
    Bellman operator properties on ``4 x trials`` random MDP and value
    pairs, and the soft and sparse sub-optimality bounds on ``trials``
    random MDPs with 2 to 32 actions.
    """
    rng = np.random.default_rng(seed)
    worst = {'translation': 0., 'monotonicity': 0., 'contraction': 0., 'bound_excess': 0.}

    for i in range(4*trials):
        m = random_mdp(int(rng.integers(2, 8)), int(rng.integers(1, 6)),
                       gamma=float(rng.uniform(0.5, 0.95)), seed=int(rng.integers(2**31)))
        v = rng.normal(0., 5., m.n_states)
        w = rng.normal(0., 5., m.n_states)
        for kind in KINDS:
            errs = _bellman_properties(m, v, w, kind, float(rng.choice(ALPHAS)))
            for name, err in zip(('translation', 'monotonicity', 'contraction'), errs):
                worst[name] = max(worst[name], err)

    ratio = 0.
    for i in range(trials):
        n_actions = (2, 8, 32)[i % 3]
        m = random_mdp(int(rng.integers(2, 6)), n_actions, gamma=0.9,
                       seed=int(rng.integers(2**31)))
        report = check_bounds(m, float(rng.choice((0.1, 1.))), strict=False)
        excess = max(np.max(report.soft_gap)-report.soft_bound,
                     np.max(report.sparse_gap)-report.sparse_bound,
                     -np.min(report.soft_gap), -np.min(report.sparse_gap))
        worst['bound_excess'] = max(worst['bound_excess'], float(excess))
        if n_actions >= 3:
            ratio = max(ratio, report.sparse_bound/report.soft_bound)

    passed = (max(worst['translation'], worst['monotonicity'], worst['contraction']) <= BELLMAN_TOL
              and worst['bound_excess'] <= 1.e-8 and ratio < 1.)
    return SuiteResult('mdp', 5*trials, max(worst.values()), passed,
                       dict(worst, sparse_to_soft_bound=ratio))


def consistency_suite(trials, seed):
    """
    Multipliers of the sparse optimum on ``trials`` random MDPs (up to 20
    states and 10 actions), and the optimality gaps of those witnesses
    and of residual-minimizing witnesses against their bounds.
    """
    rng = np.random.default_rng(seed)
    residual = constraint = excess = searched = 0.
    # Report with the largest gap to bound ratio per check
    worst = {}
    passed = True

    for i in range(trials):
        alpha = float(rng.choice((0.1, 0.5, 1.)))
        m = random_mdp(int(rng.integers(2, 21)), int(rng.integers(2, 11)),
                       gamma=float(rng.uniform(0.5, 0.95)), seed=int(rng.integers(2**31)))
        v_sparse = value_iteration(m, 'sparse', alpha).v
        w = construct_witness(m, v_sparse, extract_policy(m, v_sparse, 'sparse', alpha), alpha)
        residual = max(residual, float(np.max(np.abs(one_step_residuals(m, w)))))
        constraint = max(constraint, w.constraint_violation())
        reports = [check_theorem2(m, w, v_star=v_sparse, strict=False),
                   check_corollary_original(m, w, strict=False)]

        if i % 5 == 0:
            small = random_mdp(int(rng.integers(2, 5)), int(rng.integers(2, 4)),
                               gamma=float(rng.uniform(0.5, 0.9)), seed=int(rng.integers(2**31)))
            found = search_consistent_witness(small, alpha, seed=int(rng.integers(2**31)),
                                              iters=5000)
            searched = max(searched, float(np.max(np.abs(one_step_residuals(small, found)))))
            reports += [check_theorem2(small, found, strict=False),
                        check_corollary_original(small, found, strict=False)]

        for report in reports:
            passed = passed and report.passed
            excess = max(excess, report.worst_gap-report.bound-report.slack)
            best = worst.get(report.name)
            if best is None or report.worst_gap/report.bound > best.worst_gap/best.bound:
                worst[report.name] = report

    passed = passed and max(residual, constraint, searched) <= RESIDUAL_TOL
    details = {'witness_residual': residual, 'constraint_violation': constraint,
               'searched_residual': searched}
    for name, report in sorted(worst.items()):
        details[name+'_worst_gap'] = report.worst_gap
        details[name+'_bound'] = float(report.bound)
    return SuiteResult('consistency', trials, max(residual, constraint, searched, excess), passed,
                       details)


def _random_batch(m, rng, count, d):
    live = np.flatnonzero(~m.terminal)
    batch = []
    for i in range(count):
        x = int(rng.choice(live))
        obs, acts, rews, cut = [x], [], [], False
        for t in range(int(rng.integers(1, d+1))):
            a = int(rng.integers(m.n_actions))
            acts.append(a)
            rews.append(m.reward[x, a])
            x = int(rng.choice(m.n_states, p=m.transition[x, a]))
            obs.append(x)
            if m.terminal[x]:
                cut = True
                break
        batch.append(SubTrajectory(obs, acts, rews, cut))
    return batch


def gradients_suite(trials, seed):
    """
    Backpropagation of every head and of both path consistency losses
    against central differences, cycling through model layouts and modes.
    """
    rng = np.random.default_rng(seed)
    layouts = [('tabular', False, 'sparsemax'), ('tabular', True, 'sparsemax'),
               ('linear', False, 'softmax'), ('linear', True, 'softmax'),
               ('mlp:6:tanh', False, 'sparsemax'), ('mlp:6:relu', True, 'sparsemax'),
               ('mlp:5,4:tanh', True, 'softmax'), ('mlp:6:tanh', False, 'softmax')]
    max_error = 0.
    checked = 0
    for i in range(trials):
        spec, unified, policy = layouts[i % len(layouts)]
        alpha = float(rng.choice((0.1, 0.5, 1.)))
        config = SimpleNamespace(alpha=alpha, gamma=0.9)
        m = random_mdp(int(rng.integers(3, 6)), int(rng.integers(2, 5)), gamma=0.9,
                       seed=int(rng.integers(2**31)), n_terminal=1)
        model = build_model(spec, m.n_states, m.n_actions, alpha, unified, policy=policy,
                            seed=int(rng.integers(2**31)))
        batch = _random_batch(m, rng, 3, 4)
        objective = soft_loss_and_grads if policy == 'softmax' else loss_and_grads
        params = model.get_params()
        loss, grad = objective(batch, model, config)

        def func(p):
            model.set_params(p)
            return objective(batch, model, config)[0]

        def pattern(p):
            model.set_params(p)
            consistency_errors(batch, model, alpha, 0.9)
            return model.pattern()

        try:
            report = check_gradient(func, grad, params, tol=GRAD_TOL, pattern=pattern)
        finally:
            model.set_params(params)
        heads = check_model_gradient(model, np.arange(m.n_states), seed=int(rng.integers(2**31)),
                                     tol=GRAD_TOL)
        max_error = max(max_error, report.max_error, heads.max_error)
        checked += report.checked+heads.checked

    return SuiteResult('gradients', trials, max_error, max_error <= GRAD_TOL,
                       {'checked': checked})


def run_suite(name, trials=50, seed=0):
    """
    Run one suite by name.

    :param name: ``'operators'``, ``'mdp'``, ``'consistency'`` or
        ``'gradients'``
    :param trials: number of random instances (scaled per suite)
    :param seed: seed of the suite
    :returns: SuiteResult
    """
    if name not in SUITES:
        raise DomainError('unknown suite '+repr(name))
    if trials < 1:
        raise DomainError('trials must be >= 1')
    logger.info('running %s suite (%d trials, seed %d)', name, trials, seed)
    suite = {'operators': operators_suite, 'mdp': mdp_suite,
             'consistency': consistency_suite, 'gradients': gradients_suite}[name]
    result = suite(trials, seed)
    logger.info('%s suite: max violation %.3e, %s', name, result.max_violation,
                'passed' if result.passed else 'FAILED')
    return result

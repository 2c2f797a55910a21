#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: test_objective.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Test suite for the path consistency objective (spcl.pcl)

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

from types import SimpleNamespace

import numpy as np
import pytest

from spcl.core import DivergenceError, DomainError
from spcl.approx import build_model, check_gradient, load_witness
from spcl.consistency import (ConsistencyWitness, SubTrajectory, construct_witness,
                              one_step_residual)
from spcl.mdp import TabularMDP, extract_policy, random_mdp, value_iteration
from spcl.pcl import (consistency_error, consistency_errors, loss_and_grads,
                      soft_consistency_error, soft_loss_and_grads, surrogate_gap)

# List of test functions
# - test_one_step_reduction()
# - test_zero_model_closed_form()
# - test_fixed_point_sparse()
# - test_fixed_point_soft()
# - test_small_alpha_soft()
# - test_gradients_finite_differences()
# - test_batch_linearity()
# - test_order_invariance()
# - test_value_gradient_endpoints()
# - test_surrogate_gap()
# - test_errors()

def random_windows(m, rng, count, d):
    """
    Windows driven by uniformly random actions, cut at terminal states.
    """
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

def test_one_step_reduction():
    """
    d = 1 on a single-state MDP gives the one-step residual.
    """
    alpha, gamma = 0.5, 0.8
    m = TabularMDP(np.ones((1, 3, 1)), [[1., 0.5, 0.2]], gamma)
    w = ConsistencyWitness([2.], [[0.6, 0.4, 0.]], [[0., 0., 0.3]], [-0.1], alpha)
    model = load_witness(build_model('tabular', 1, 3, alpha), w)
    out = model.forward([0, 0])
    for a in range(3):
        xi = SubTrajectory([0, 0], [a], [m.reward[0, a]])
        np.testing.assert_allclose(consistency_error(xi, out, alpha, gamma),
                                   one_step_residual(m, w, 0, a), atol=1.e-12)

def test_zero_model_closed_form():
    """
    Zero parameters on a reward-free window.
    """
    alpha, gamma, n_actions = 0.3, 0.9, 4
    model = build_model('tabular', 3, n_actions, alpha)
    model.set_params(np.zeros(model.n_params))
    xi = SubTrajectory([0, 1, 2, 0], [0, 3, 1], [0., 0., 0.])
    out = model.forward(xi.observations)
    step = 0.5*alpha-alpha/n_actions+0.25*alpha
    expected = step*(1.+gamma+gamma**2)
    np.testing.assert_allclose(consistency_error(xi, out, alpha, gamma), expected)

def test_fixed_point_sparse():
    """
    The optimal witness annihilates loss and gradient on off-policy windows.
    """
    alpha, gamma = 0.5, 0.9
    config = SimpleNamespace(alpha=alpha, gamma=gamma)
    m = random_mdp(8, 4, gamma=gamma, seed=11, n_terminal=1, deterministic=True)
    v = value_iteration(m, 'sparse', alpha, tol=1.e-12).v
    w = construct_witness(m, v, extract_policy(m, v, 'sparse', alpha), alpha)
    batch = random_windows(m, np.random.default_rng(11), 30, 6)
    for unified in [False, True]:
        for factor in ['per_action', 'scalar']:
            model = build_model('tabular', 8, 4, alpha, unified, lambda_factor=factor, seed=1)
            load_witness(model, w)
            loss, grad = loss_and_grads(batch, model, config)
            assert loss <= 1.e-15
            assert np.linalg.norm(grad) <= 1.e-7

def test_fixed_point_soft():
    """
    The soft optimum annihilates the soft loss.
    """
    alpha, gamma = 0.4, 0.9
    config = SimpleNamespace(alpha=alpha, gamma=gamma)
    m = random_mdp(6, 3, gamma=gamma, seed=12, n_terminal=1, deterministic=True)
    v = value_iteration(m, 'soft', alpha, tol=1.e-12).v
    mu = extract_policy(m, v, 'soft', alpha).probs
    batch = random_windows(m, np.random.default_rng(12), 30, 5)
    for unified in [False, True]:
        model = build_model('tabular', 6, 3, alpha, unified, policy='softmax')
        load_witness(model, SimpleNamespace(v=v, mu=mu))
        loss, grad = soft_loss_and_grads(batch, model, config)
        assert loss <= 1.e-15
        assert np.linalg.norm(grad) <= 1.e-7

def test_small_alpha_soft():
    """
    A vanishing weight leaves the d-step Bellman error.
    """
    alpha, gamma = 1.e-10, 0.9
    model = build_model('tabular', 3, 2, alpha, policy='softmax', seed=2)
    xi = SubTrajectory([0, 2, 1, 1], [1, 0, 1], [1., 0.5, 2.])
    out = model.forward(xi.observations)
    bellman = -out.v[0]+gamma**3*out.v[3]+1.+gamma*0.5+gamma**2*2.
    np.testing.assert_allclose(soft_consistency_error(xi, out, alpha, gamma), bellman,
                               atol=1.e-8)

def test_gradients_finite_differences():
    """
    Objective gradients against central differences.
    """
    rng = np.random.default_rng(13)
    m = random_mdp(5, 3, gamma=0.9, seed=13, n_terminal=1)
    for spec, unified, policy in [('tabular', False, 'sparsemax'), ('tabular', True, 'sparsemax'),
                                  ('tabular', False, 'softmax'), ('mlp:6:tanh', True, 'softmax'),
                                  ('mlp:6:tanh', False, 'sparsemax')]:
        model = build_model(spec, 5, 3, 0.3, unified, policy=policy, seed=13)
        config = SimpleNamespace(alpha=0.3, gamma=0.9)
        batch = random_windows(m, rng, 3, 4)
        objective = soft_loss_and_grads if policy == 'softmax' else loss_and_grads
        params = model.get_params()
        loss, grad = objective(batch, model, config)

        def func(p):
            model.set_params(p)
            return objective(batch, model, config)[0]

        def pattern(p):
            model.set_params(p)
            consistency_errors(batch, model, 0.3, 0.9)
            return model.pattern()

        report = check_gradient(func, grad, params, pattern=pattern)
        model.set_params(params)
        assert report.checked > 0
        assert report.max_error <= 1.e-5, (spec, unified, policy, report)

def test_batch_linearity():
    """
    Repeating a window multiplies the gradient.
    """
    m = random_mdp(4, 3, seed=14)
    xi = random_windows(m, np.random.default_rng(14), 1, 5)
    model = build_model('linear', 4, 3, 0.2, seed=14)
    config = SimpleNamespace(alpha=0.2, gamma=0.9)
    loss1, grad1 = loss_and_grads(xi, model, config)
    loss3, grad3 = loss_and_grads(xi*3, model, config)
    np.testing.assert_allclose(loss3, 3.*loss1, rtol=1.e-12)
    np.testing.assert_allclose(grad3, 3.*grad1, rtol=1.e-12, atol=1.e-14)

def test_order_invariance():
    """
    Permuting the batch leaves loss and gradient unchanged.
    """
    m = random_mdp(5, 2, seed=15, n_terminal=1)
    batch = random_windows(m, np.random.default_rng(15), 8, 4)
    model = build_model('tabular', 5, 2, 0.2, seed=15)
    config = SimpleNamespace(alpha=0.2, gamma=0.9)
    loss, grad = loss_and_grads(batch, model, config)
    loss_r, grad_r = loss_and_grads(batch[::-1], model, config)
    np.testing.assert_allclose(loss_r, loss, rtol=1.e-12)
    np.testing.assert_allclose(grad_r, grad, rtol=1.e-10, atol=1.e-14)

def test_value_gradient_endpoints():
    """
    The value gradient only involves the first and last observations.
    """
    gamma = 0.8
    m = random_mdp(6, 3, gamma=gamma, seed=16, n_terminal=1)
    batch = random_windows(m, np.random.default_rng(16), 10, 5)
    model = build_model('tabular', 6, 3, 0.4, seed=16)
    config = SimpleNamespace(alpha=0.4, gamma=gamma)
    J = consistency_errors(batch, model, 0.4, gamma)
    loss, grad = loss_and_grads(batch, model, config)

    expected = np.zeros(6)
    for j, xi in zip(J, batch):
        expected[xi.observations[0]] -= j
        if not xi.terminal_cut:
            expected[xi.observations[-1]] += gamma**xi.d*j
    np.testing.assert_allclose(grad[model.slices['phi']], expected, atol=1.e-12)
    np.testing.assert_allclose(loss, 0.5*np.sum(J**2))

def test_surrogate_gap():
    """
    Objective dominates the squared mean error.
    """
    rng = np.random.default_rng(17)
    for i in range(20):
        assert surrogate_gap(rng.normal(size=10)) >= 0.
    np.testing.assert_allclose(surrogate_gap([0.5, 0.5, 0.5]), 0., atol=1.e-15)
    m = random_mdp(4, 3, seed=17)
    model = build_model('tabular', 4, 3, 0.2, seed=17)
    assert surrogate_gap(consistency_errors(random_windows(m, rng, 6, 3), model, 0.2, 0.9)) >= 0.

def test_errors():
    """
    Empty batch, wrong head and non-finite outputs.
    """
    config = SimpleNamespace(alpha=0.2, gamma=0.9)
    model = build_model('tabular', 2, 2, 0.2)
    xi = SubTrajectory([0, 1], [0], [1.])
    with pytest.raises(DomainError):
        loss_and_grads([], model, config)
    with pytest.raises(DomainError):
        soft_loss_and_grads([xi], model, config)
    with pytest.raises(DomainError):
        consistency_error(xi, model.forward([0]), 0.2, 0.9)
    model.set_params(np.full(model.n_params, np.inf))
    with pytest.raises(DivergenceError):
        loss_and_grads([xi], model, config)

if __name__ == "__main__" :
    pytest.main([__file__])

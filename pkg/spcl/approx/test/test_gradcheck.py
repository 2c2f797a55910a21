#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: test_gradcheck.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Test suite for the head gradients (spcl.approx)

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np
import pytest

from spcl.core import DomainError
from spcl.approx import (build_model, check_gradient, check_model_gradient,
                         numerical_gradient, relative_error)

# List of test functions
# - test_numerical_gradient_quadratic()
# - test_relative_error_floor()
# - test_kink_detection()
# - test_tabular_heads()
# - test_linear_heads()
# - test_mlp_heads()

def test_numerical_gradient_quadratic():
    """
    Central differences are exact on quadratics.
    """
    a = np.array([[2., 1.], [1., 3.]])
    x = np.array([0.5, -1.])
    approx, valid = numerical_gradient(lambda p: 0.5*p @ a @ p, x)
    np.testing.assert_allclose(approx, a @ x, atol=1.e-9)
    assert np.all(valid)
    with pytest.raises(DomainError):
        numerical_gradient(lambda p: 0., x, h=0.)

def test_relative_error_floor():
    """
    Small gradients are compared on the absolute scale of the floor.
    """
    np.testing.assert_allclose(relative_error([1.e-6], [0.]), [1.e-4])
    np.testing.assert_allclose(relative_error([2.], [1.]), [0.5])

def test_kink_detection():
    """
    Coordinates crossing a kink are skipped.
    """
    report = check_gradient(lambda p: np.abs(p).sum(), np.sign([1., 0.]), np.array([1., 0.]),
                            pattern=lambda p: p > 0.)
    assert report.skipped == 1
    assert report.checked == 1
    assert report.passed

def check_all_heads(spec, obs, obs_dim, seed):
    for unified in [False, True]:
        for policy in ['sparsemax', 'softmax']:
            for factor in ['per_action', 'scalar']:
                for activation in ['sigmoid', 'tanh']:
                    if policy == 'softmax' and (factor, activation) != ('per_action', 'sigmoid'):
                        continue
                    model = build_model(spec, obs_dim, 4, 0.3, unified, policy=policy,
                                        lambda_factor=factor, lambda_activation=activation,
                                        seed=seed)
                    report = check_model_gradient(model, obs, seed=seed)
                    assert report.checked > 0
                    assert report.max_error <= 1.e-5, (spec, unified, policy, factor,
                                                       activation, report)

def test_tabular_heads():
    """
    Tabular trunks, every head layout.
    """
    check_all_heads('tabular', np.array([0, 2, 1, 2]), 3, 1)

def test_linear_heads():
    """
    Linear trunks on feature vectors.
    """
    obs = np.random.default_rng(2).normal(size=(3, 5))
    check_all_heads('linear', obs, 5, 2)

def test_mlp_heads():
    """
    Hidden layers with tanh and relu activations.
    """
    obs = np.random.default_rng(3).normal(size=(3, 4))
    check_all_heads('mlp:6,5:tanh', obs, 4, 3)
    check_all_heads('mlp:6:relu', obs, 4, 4)

if __name__ == "__main__" :
    pytest.main([__file__])

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: gradcheck.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Central finite-difference checks of analytic gradients.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

from dataclasses import dataclass

import numpy as np

from spcl.core.exceptions import DomainError

HEADS = ('v', 'mu', 'log_mu', 'lam', 'Lam')


@dataclass
class GradCheckReport():
    """
    Outcome of a gradient check.

    ``skipped`` counts coordinates whose perturbation crosses a kink.
    """
    max_error: float
    checked: int
    skipped: int
    tol: float

    @property
    def passed(self):
        return self.checked > 0 and self.max_error <= self.tol

    def as_dict(self):
        return {'max_error': self.max_error, 'checked': self.checked,
                'skipped': self.skipped, 'passed': self.passed}


def relative_error(grad, approx, floor=1.e-2):
    """
    ``|grad - approx| / max(|grad|, |approx|, floor)`` per coordinate.
    """
    grad = np.asarray(grad, dtype=np.float64)
    approx = np.asarray(approx, dtype=np.float64)
    scale = np.maximum(np.maximum(np.abs(grad), np.abs(approx)), floor)
    return np.abs(grad-approx)/scale


def numerical_gradient(func, params, h=1.e-5, pattern=None):
    """
    Central differences of a scalar function.

    :param func: callable mapping a parameter vector to a real
    :param params: point of evaluation (not modified)
    :param h: step
    :param pattern: optional callable mapping a parameter vector to a
        boolean signature of its smooth regime; coordinates whose two
        perturbations change the signature are reported invalid
    :returns: (approximate gradient, boolean mask of valid coordinates)
    """

    params = np.asarray(params, dtype=np.float64)
    if h <= 0.:
        raise DomainError('h must be > 0')
    approx = np.zeros_like(params)
    valid = np.ones(params.size, dtype=bool)
    ref = pattern(params) if pattern is not None else None

    for i in range(params.size):
        plus = params.copy()
        minus = params.copy()
        plus[i] += h
        minus[i] -= h
        fplus = func(plus)
        if ref is not None and not np.array_equal(pattern(plus), ref):
            valid[i] = False
        fminus = func(minus)
        if ref is not None and not np.array_equal(pattern(minus), ref):
            valid[i] = False
        approx[i] = (fplus-fminus)/(2.*h)

    return approx, valid


def check_gradient(func, grad, params, h=1.e-5, tol=1.e-5, pattern=None, floor=1.e-2):
    """
    Compare an analytic gradient with central differences.

    :param func: scalar function of the parameters
    :param grad: analytic gradient at ``params``
    :param params: evaluation point
    :returns: GradCheckReport
    """
    approx, valid = numerical_gradient(func, params, h, pattern)
    errors = relative_error(grad, approx, floor)[valid]
    max_error = float(errors.max()) if errors.size else 0.
    return GradCheckReport(max_error, int(valid.sum()), int((~valid).sum()), tol)


def check_model_gradient(model, observations, seed=None, h=1.e-5, tol=1.e-5):
    """
    Check ``Model.backward`` on a random linear functional of all heads.

    :param model: Model instance (its parameters are restored afterwards)
    :param observations: batch of observations
    :param seed: seed of the random upstream weights
    :returns: GradCheckReport
    """

    rng = np.random.default_rng(seed)
    params = model.get_params()
    out = model.forward(observations)

    weights = {}
    for head in HEADS:
        value = getattr(out, head)
        if value is not None:
            weights[head] = rng.normal(size=value.shape)

    def functional(p):
        model.set_params(p)
        res = model.forward(observations)
        return sum(np.sum(weights[head]*getattr(res, head)) for head in weights)

    def pattern(p):
        model.set_params(p)
        model.forward(observations)
        return model.pattern()

    model.forward(observations)
    grad = model.backward(weights)
    try:
        report = check_gradient(functional, grad, params, h, tol, pattern)
    finally:
        model.set_params(params)
    return report

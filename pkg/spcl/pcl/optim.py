#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: optim.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
First-order updates of a flat parameter vector.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np

from spcl.core.exceptions import DomainError

OPTIMIZERS = ('sgd', 'adam')


class SGD():
    """
    ``params <- params - lr grad``.
    """

    def __init__(self, lr):
        if not lr > 0.:
            raise DomainError('the learning rate must be > 0')
        self.lr = float(lr)

    def step(self, params, grad):
        params -= self.lr*grad
        return params


class Adam():
    """
    Adaptive moment estimation with bias correction.
    """

    def __init__(self, lr, beta1=0.9, beta2=0.999, eps=1.e-8):
        if not lr > 0.:
            raise DomainError('the learning rate must be > 0')
        self.lr = float(lr)
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.m = None
        self.s = None
        self.t = 0

    def step(self, params, grad):
        if self.m is None:
            self.m = np.zeros_like(params)
            self.s = np.zeros_like(params)
        self.t += 1
        self.m = self.beta1*self.m+(1.-self.beta1)*grad
        self.s = self.beta2*self.s+(1.-self.beta2)*grad**2
        mhat = self.m/(1.-self.beta1**self.t)
        shat = self.s/(1.-self.beta2**self.t)
        params -= self.lr*mhat/(np.sqrt(shat)+self.eps)
        return params


def make_optimizer(name, lr):
    """
    Optimizer from its name, ``'sgd'`` or ``'adam'``.
    """
    if name == 'sgd':
        return SGD(lr)
    if name == 'adam':
        return Adam(lr)
    raise DomainError('unknown optimizer '+repr(name))

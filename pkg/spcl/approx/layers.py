#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: layers.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Dense layers and feed-forward trunks working on slices of a flat
parameter vector.

Layers hold no parameters: ``forward`` reads them from the slice it is
given and returns a cache, ``backward`` accumulates into the matching
gradient slice.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np

from spcl.core.exceptions import DomainError

ACTIVATIONS = ('tanh', 'relu', 'identity')


class Dense():
    """
    Affine map followed by an activation.

    :param n_in: input size
    :param n_out: output size
    :param activation: ``'tanh'``, ``'relu'`` or ``'identity'``
    :param bias: add a bias vector
    """

    def __init__(self, n_in, n_out, activation='identity', bias=True):
        """
        Initialize the Dense class.
        """
        if activation not in ACTIVATIONS:
            raise DomainError('unknown activation '+repr(activation))
        self.n_in = n_in
        self.n_out = n_out
        self.activation = activation
        self.bias = bias

    @property
    def n_params(self):
        return self.n_in*self.n_out+(self.n_out if self.bias else 0)

    def _unpack(self, params):
        weight = params[:self.n_in*self.n_out].reshape(self.n_in, self.n_out)
        bias = params[self.n_in*self.n_out:] if self.bias else None
        return weight, bias

    def init_params(self, params, rng):
        """
        Uniform weights in [-1/sqrt(n_in), 1/sqrt(n_in)], zero biases.
        """
        scale = 1./np.sqrt(self.n_in)
        params[:self.n_in*self.n_out] = rng.uniform(-scale, scale, self.n_in*self.n_out)
        params[self.n_in*self.n_out:] = 0.

    def forward(self, x, params):
        weight, bias = self._unpack(params)
        pre = x @ weight
        if bias is not None:
            pre = pre+bias
        if self.activation == 'tanh':
            out = np.tanh(pre)
        elif self.activation == 'relu':
            out = np.maximum(pre, 0.)
        else:
            out = pre
        return out, (x, pre, out)

    def backward(self, dout, cache, params, grad):
        x, pre, out = cache
        weight, bias = self._unpack(params)

        # Through the activation, relu kink on the zero side
        if self.activation == 'tanh':
            dpre = dout*(1.-out**2)
        elif self.activation == 'relu':
            dpre = dout*(pre > 0.)
        else:
            dpre = dout

        grad[:self.n_in*self.n_out] += (x.T @ dpre).ravel()
        if bias is not None:
            grad[self.n_in*self.n_out:] += dpre.sum(axis=0)
        return dpre @ weight.T

    def pattern(self, cache):
        """
        Active units of a relu layer, for kink detection.
        """
        x, pre, out = cache
        if self.activation == 'relu':
            return pre > 0.
        return np.zeros((pre.shape[0], 0), dtype=bool)


class Trunk():
    """
    Stack of Dense layers mapping observations to ``n_out`` outputs.

    :param n_in: input size
    :param n_out: output size
    :param hidden_sizes: sizes of the hidden layers
    :param activation: activation of the hidden layers
    :param bias: biases in every layer
    """

    def __init__(self, n_in, n_out, hidden_sizes=(), activation='tanh', bias=True):
        """
        Initialize the Trunk class.
        """
        sizes = [n_in]+list(hidden_sizes)+[n_out]
        self.layers = []
        for i in range(len(sizes)-1):
            act = activation if i < len(sizes)-2 else 'identity'
            self.layers.append(Dense(sizes[i], sizes[i+1], act, bias))
        self.n_out = n_out

    @property
    def n_params(self):
        return sum(layer.n_params for layer in self.layers)

    def _slices(self, params):
        start = 0
        for layer in self.layers:
            yield layer, params[start:start+layer.n_params]
            start += layer.n_params

    def init_params(self, params, rng):
        for layer, sub in self._slices(params):
            layer.init_params(sub, rng)

    def forward(self, x, params):
        caches = []
        for layer, sub in self._slices(params):
            x, cache = layer.forward(x, sub)
            caches.append(cache)
        return x, caches

    def backward(self, dout, caches, params, grad):
        pairs = list(self._slices(params))
        start = self.n_params
        for (layer, sub), cache in zip(pairs[::-1], caches[::-1]):
            start -= layer.n_params
            dout = layer.backward(dout, cache, sub, grad[start:start+layer.n_params])
        return dout

    def pattern(self, caches):
        return np.hstack([layer.pattern(cache) for layer, cache in zip(self.layers, caches)])

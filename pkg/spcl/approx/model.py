#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: model.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Parameterized value, policy and multiplier heads.

A sparse model maps an observation to ``V``, ``mu = (f - G(f))^+``,
``lambda = (G(f) - f)^+ exp(aux)`` and ``Lambda = -alpha/2 s(l)`` so that
``lambda mu = 0`` and ``-alpha/2 <= Lambda <= 0`` hold by construction.
The unified variant derives ``V = alpha spmax(Q/alpha)`` and
``mu = sparsemax(Q/alpha)`` from a single ``Q`` trunk. Soft-max models
serve the soft baseline.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

from dataclasses import dataclass, fields
from typing import Optional

import numpy as np
from scipy.special import expit, logit, logsumexp

from spcl.approx.layers import ACTIVATIONS, Trunk
from spcl.core.exceptions import DivergenceError, DomainError
from spcl.core.operators import sparsemax_rows, spmax_rows

POLICIES = ('sparsemax', 'softmax')
LAMBDA_FACTORS = ('per_action', 'scalar')
LAMBDA_ACTIVATIONS = ('sigmoid', 'tanh')


def parse_spec(spec):
    """
    Normalize a trunk description.

    Accepted forms are ``'tabular'``, ``'linear'``, ``'mlp'`` (two hidden
    layers of 64 tanh units), ``'mlp:32,32:relu'`` or a dictionary with
    keys ``kind``, ``hidden_sizes`` and ``activation``.

    :returns: dictionary with keys ``kind``, ``hidden_sizes``,
        ``activation`` and ``name`` (canonical string form)
    """

    if isinstance(spec, dict):
        kind = spec.get('kind', 'mlp')
        hidden = tuple(int(h) for h in spec.get('hidden_sizes', (64, 64)))
        activation = spec.get('activation', 'tanh')
    elif isinstance(spec, str):
        parts = spec.strip().lower().split(':')
        kind = parts[0]
        hidden = (64, 64)
        activation = 'tanh'
        if kind in ('tabular', 'linear') and len(parts) > 1:
            raise DomainError('invalid model spec '+repr(spec))
        if len(parts) > 1 and parts[1]:
            try:
                hidden = tuple(int(h) for h in parts[1].split(','))
            except ValueError:
                raise DomainError('invalid hidden sizes in model spec '+repr(spec))
        if len(parts) > 2:
            activation = parts[2]
        if len(parts) > 3:
            raise DomainError('invalid model spec '+repr(spec))
    else:
        raise DomainError('model spec must be a string or a dictionary')

    if kind not in ('tabular', 'linear', 'mlp'):
        raise DomainError('unknown model kind '+repr(kind))
    if kind != 'mlp':
        hidden = ()
    elif len(hidden) == 0 or min(hidden) < 1:
        raise DomainError('an mlp needs positive hidden sizes')
    if activation not in ACTIVATIONS:
        raise DomainError('unknown activation '+repr(activation))

    name = kind
    if kind == 'mlp':
        name = 'mlp:'+','.join(str(h) for h in hidden)+':'+activation
    return {'kind': kind, 'hidden_sizes': hidden, 'activation': activation, 'name': name}


@dataclass
class ModelOutputs():
    """
    Batched model outputs, one row per observation.

    ``support`` is the mask of supported actions and ``thresh`` the
    threshold ``G(f)`` (sparsemax heads); ``log_mu`` is only set for
    soft-max heads.
    """
    v: np.ndarray
    mu: np.ndarray
    lam: np.ndarray
    Lam: np.ndarray
    f: np.ndarray
    support: np.ndarray
    thresh: Optional[np.ndarray] = None
    log_mu: Optional[np.ndarray] = None

    def take(self, rows):
        """
        Outputs of a subset of rows.
        """
        values = {}
        for item in fields(self):
            value = getattr(self, item.name)
            values[item.name] = None if value is None else value[rows]
        return ModelOutputs(**values)

    def __len__(self):
        return self.v.shape[0]


class Model():
    """
    Value, policy and multiplier heads on top of one trunk per parameter
    group.

    Parameter groups are ``theta`` (policy scores), ``phi`` (value) and
    ``rho`` (multipliers), or ``psi`` (unified action values) and ``rho``.
    All parameters live in one flat vector ``params``; ``slices`` maps each
    group to its slice.

    :param spec: trunk description, see ``parse_spec``
    :param obs_dim: observation size (number of states for integer
        observations)
    :param n_actions: number of actions
    :param alpha: regularization weight
    :param unified: derive V and mu from a single Q trunk
    :param policy: ``'sparsemax'`` or ``'softmax'``
    :param lambda_factor: ``'per_action'`` or ``'scalar'`` positive factor
        of lambda
    :param lambda_activation: ``'sigmoid'`` or ``'tanh'`` squashing of
        Lambda
    :param seed: seed of the weight initialization
    """

    def __init__(self, spec, obs_dim, n_actions, alpha, unified=False, policy='sparsemax',
                 lambda_factor='per_action', lambda_activation='sigmoid', seed=None):
        """
        Initialize the Model class.
        """

        # Check parameters
        if obs_dim < 1 or n_actions < 1:
            raise DomainError('obs_dim and n_actions must be >= 1')
        if not alpha > 0.:
            raise DomainError('alpha must be > 0')
        if policy not in POLICIES:
            raise DomainError('unknown policy head '+repr(policy))
        if lambda_factor not in LAMBDA_FACTORS:
            raise DomainError('unknown lambda_factor '+repr(lambda_factor))
        if lambda_activation not in LAMBDA_ACTIVATIONS:
            raise DomainError('unknown lambda_activation '+repr(lambda_activation))

        self.spec = parse_spec(spec)
        self.obs_dim = int(obs_dim)
        self.n_actions = int(n_actions)
        self.alpha = float(alpha)
        self.unified = bool(unified)
        self.policy = policy
        self.lambda_factor = lambda_factor
        self.lambda_activation = lambda_activation
        self.n_aux = self.n_actions if lambda_factor == 'per_action' else 1

        # Output size of each trunk
        outputs = {}
        if self.unified:
            outputs['psi'] = self.n_actions
        else:
            outputs['theta'] = self.n_actions
            outputs['phi'] = 1
        if self.policy == 'sparsemax':
            outputs['rho'] = self.n_aux+1

        # Trunks and parameter slices
        self.trunks = {}
        self.slices = {}
        start = 0
        for name, n_out in outputs.items():
            trunk = Trunk(self.obs_dim, n_out, self.spec['hidden_sizes'],
                          self.spec['activation'], bias=self.spec['kind'] != 'tabular')
            self.trunks[name] = trunk
            self.slices[name] = slice(start, start+trunk.n_params)
            start += trunk.n_params
        self.params = np.zeros(start)

        # Initialize weights
        rng = np.random.default_rng(seed)
        for name, trunk in self.trunks.items():
            trunk.init_params(self.params[self.slices[name]], rng)

        self._cache = None

    @property
    def n_params(self):
        return self.params.size

    def get_params(self):
        return self.params.copy()

    def set_params(self, params):
        params = np.asarray(params, dtype=np.float64)
        if params.shape != self.params.shape:
            raise DomainError('expected '+str(self.n_params)+' parameters')
        self.params[:] = params

    def describe(self):
        """
        JSON-compatible description used by checkpoints.
        """
        return {'spec': self.spec['name'], 'obs_dim': self.obs_dim,
                'n_actions': self.n_actions, 'alpha': self.alpha,
                'unified': self.unified, 'policy': self.policy,
                'lambda_factor': self.lambda_factor,
                'lambda_activation': self.lambda_activation,
                'slices': {name: [s.start, s.stop] for name, s in self.slices.items()},
                'n_params': self.n_params}

    def encode(self, observations):
        """
        Integer observations are one-hot encoded, feature vectors are
        passed through.
        """
        obs = np.asarray(observations)
        if obs.ndim == 0:
            obs = obs[np.newaxis]
        if np.issubdtype(obs.dtype, np.integer) and obs.ndim == 1:
            if np.any(obs < 0) or np.any(obs >= self.obs_dim):
                raise DomainError('integer observation out of range')
            x = np.zeros((obs.size, self.obs_dim))
            x[np.arange(obs.size), obs] = 1.
            return x
        obs = np.asarray(obs, dtype=np.float64)
        if obs.ndim == 1:
            obs = obs[np.newaxis, :]
        if obs.ndim != 2 or obs.shape[1] != self.obs_dim:
            raise DomainError('observations must have '+str(self.obs_dim)+' features')
        return obs

    def _squash(self, ell):
        if self.lambda_activation == 'sigmoid':
            return expit(ell)
        return 0.5*(1.+np.tanh(ell))

    def forward(self, observations):
        """
        Outputs of a batch of observations.

        :param observations: integer indices or (N, obs_dim) features
        :returns: ModelOutputs
        """

        x = self.encode(observations)
        alpha = self.alpha
        cache = {'x': x}

        # Trunks
        outs = {}
        for name, trunk in self.trunks.items():
            outs[name], cache[name] = trunk.forward(x, self.params[self.slices[name]])

        # Scores
        if self.unified:
            f = outs['psi']/alpha
        else:
            f = outs['theta']

        if self.policy == 'sparsemax':
            probs, thresh, support = sparsemax_rows(f)
            v = alpha*spmax_rows(f) if self.unified else outs['phi'][:, 0]

            # Multipliers
            aux = outs['rho'][:, :self.n_aux]
            ell = outs['rho'][:, self.n_aux]
            gap = np.where(support, 0., np.maximum(thresh[:, np.newaxis]-f, 0.))
            scale = np.exp(aux)
            lam = gap*scale
            squash = self._squash(ell)
            Lam = -0.5*alpha*squash
            log_mu = None
            cache.update(gap=gap, scale=scale, squash=squash, ell=ell)
        else:
            lse = logsumexp(f, axis=1)
            log_mu = f-lse[:, np.newaxis]
            probs = np.exp(log_mu)
            v = alpha*lse if self.unified else outs['phi'][:, 0]
            support = probs > 0.
            thresh = None
            lam = np.zeros_like(f)
            Lam = np.zeros(f.shape[0])

        out = ModelOutputs(v, probs, lam, Lam, f, support, thresh, log_mu)
        for value in (out.v, out.mu, out.lam, out.Lam):
            if not np.all(np.isfinite(value)):
                raise DivergenceError('non-finite model output')

        cache['outputs'] = out
        self._cache = cache
        return out

    def backward(self, upstream):
        """
        Gradient of ``sum(upstream[k] * output[k])`` with respect to the
        parameters, for the outputs of the last forward call.

        :param upstream: dictionary with optional keys ``v``, ``mu``,
            ``log_mu``, ``lam`` and ``Lam`` holding arrays shaped like the
            matching outputs
        :returns: flat gradient, same shape as ``params``
        """

        cache = self._cache
        if cache is None:
            raise DomainError('forward must be called before backward')
        out = cache['outputs']
        n = out.v.shape[0]
        alpha = self.alpha
        mu = out.mu

        dv = upstream.get('v')
        dmu = upstream.get('mu')
        dlam = upstream.get('lam')
        dLam = upstream.get('Lam')
        dlog_mu = upstream.get('log_mu')

        dout = {name: np.zeros((n, trunk.n_out)) for name, trunk in self.trunks.items()}
        df = np.zeros_like(out.f)

        if self.policy == 'sparsemax':
            support = out.support
            dthresh = np.zeros(n)

            # lambda = (G - f)^+ exp(aux) off the support
            if dlam is not None:
                daux = dlam*out.lam
                if self.n_aux == 1:
                    daux = daux.sum(axis=1, keepdims=True)
                dout['rho'][:, :self.n_aux] = daux
                dgap = np.where(cache['gap'] > 0., dlam*cache['scale'], 0.)
                dthresh += dgap.sum(axis=1)
                df -= dgap

            # mu = f - G on the support
            if dmu is not None:
                dmu_s = np.where(support, dmu, 0.)
                df += dmu_s
                dthresh -= dmu_s.sum(axis=1)

            # V = alpha spmax(f), gradient alpha mu
            if self.unified and dv is not None:
                df += alpha*dv[:, np.newaxis]*mu

            # G = (sum_S f - 1)/|S|
            df += support*(dthresh/support.sum(axis=1))[:, np.newaxis]

            # Lambda = -alpha/2 s(l)
            if dLam is not None:
                squash = cache['squash']
                if self.lambda_activation == 'sigmoid':
                    dsquash = squash*(1.-squash)
                else:
                    dsquash = 0.5*(1.-np.tanh(cache['ell'])**2)
                dout['rho'][:, self.n_aux] = -0.5*alpha*dLam*dsquash
        else:
            if dmu is not None:
                df += mu*(dmu-np.sum(mu*dmu, axis=1, keepdims=True))
            if dlog_mu is not None:
                df += dlog_mu-mu*np.sum(dlog_mu, axis=1, keepdims=True)
            if self.unified and dv is not None:
                df += alpha*dv[:, np.newaxis]*mu

        if self.unified:
            dout['psi'] = df/alpha
        else:
            dout['theta'] = df
            if dv is not None:
                dout['phi'][:, 0] = dv

        # Back through the trunks
        grad = np.zeros_like(self.params)
        for name, trunk in self.trunks.items():
            sl = self.slices[name]
            trunk.backward(dout[name], cache[name], self.params[sl], grad[sl])
        return grad

    def pattern(self):
        """
        Boolean signature of the piecewise-smooth regime of the last
        forward call: supports, active multiplier gaps and relu units.
        """
        cache = self._cache
        if cache is None:
            raise DomainError('forward must be called before pattern')
        parts = [cache['outputs'].support.ravel()]
        if 'gap' in cache:
            parts.append((cache['gap'] > 0.).ravel())
        for name, trunk in self.trunks.items():
            parts.append(trunk.pattern(cache[name]).ravel())
        return np.concatenate(parts)


def build_model(spec, obs_dim, n_actions, alpha, unified=False, **options):
    """
    Build a Model from a trunk description.

    :param spec: ``'tabular'``, ``'linear'``, ``'mlp:64,64:tanh'`` or dict
    :param obs_dim: observation size
    :param n_actions: number of actions
    :param alpha: regularization weight
    :param unified: single Q trunk
    :param options: ``policy``, ``lambda_factor``, ``lambda_activation``,
        ``seed``

    .. rubric:: Basic usage

    >>> from spcl.approx import build_model
    >>> model = build_model('tabular', 3, 2, alpha=0.1)
    >>> model.n_params
    18
    """
    return Model(spec, obs_dim, n_actions, alpha, unified,
                 options.get('policy', 'sparsemax'),
                 options.get('lambda_factor', 'per_action'),
                 options.get('lambda_activation', 'sigmoid'),
                 options.get('seed', None))


def model_from_description(desc, params=None):
    """
    Rebuild a Model from ``Model.describe()``.
    """
    model = Model(desc['spec'], desc['obs_dim'], desc['n_actions'], desc['alpha'],
                  desc['unified'], desc['policy'], desc['lambda_factor'],
                  desc['lambda_activation'])
    if params is not None:
        model.set_params(params)
    return model


def load_witness(model, witness, clip=40.):
    """
    Set the parameters of a tabular model so that its outputs reproduce a
    tabular witness.

    Sparse heads: ``f = mu - lambda/alpha``, ``aux = log(alpha)`` and the
    Lambda pre-activation inverts the squashing (clipped at ``clip``).
    Unified heads shift ``alpha f`` so that ``alpha spmax(Q/alpha) = v``.
    Soft heads use ``f = log mu``.

    :param model: Model built with the ``'tabular'`` spec
    :param witness: object with ``v``, ``mu``, ``lam`` and ``Lam`` arrays
        (``lam`` and ``Lam`` ignored for soft heads)
    """

    if model.spec['kind'] != 'tabular':
        raise DomainError('only tabular models can load a witness')
    v = np.asarray(witness.v, dtype=np.float64)
    mu = np.asarray(getattr(witness.mu, 'probs', witness.mu), dtype=np.float64)
    if mu.shape != (model.obs_dim, model.n_actions):
        raise DomainError('witness shape does not match the model')
    alpha = model.alpha
    params = model.params

    def table(name, values):
        # Tabular trunks are bias-free (obs_dim, n_out) weight matrices
        params[model.slices[name]] = np.asarray(values, dtype=np.float64).ravel()

    if model.policy == 'sparsemax':
        lam = np.maximum(np.asarray(witness.lam, dtype=np.float64), 0.)
        f = np.where(mu > 0., mu, -lam/alpha)
        aux = np.full((model.obs_dim, model.n_aux), np.log(alpha))
        share = np.clip(-2.*np.asarray(witness.Lam, dtype=np.float64)/alpha, 0., 1.)
        with np.errstate(divide='ignore'):
            ell = logit(share)
        if model.lambda_activation == 'tanh':
            ell = 0.5*ell
        ell = np.clip(ell, -clip, clip)
        table('rho', np.hstack((aux, ell[:, np.newaxis])))
        if model.unified:
            shift = v-0.5*alpha*(1.+np.sum(mu**2, axis=1))
            table('psi', alpha*f+shift[:, np.newaxis])
        else:
            table('theta', f)
            table('phi', v[:, np.newaxis])
    else:
        if np.any(mu <= 0.):
            raise DomainError('soft heads need a strictly positive policy')
        if model.unified:
            table('psi', alpha*np.log(mu)+v[:, np.newaxis])
        else:
            table('theta', np.log(mu))
            table('phi', v[:, np.newaxis])
    return model

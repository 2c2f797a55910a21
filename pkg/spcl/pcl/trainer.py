#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: trainer.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Path consistency learning loop.

Every iteration samples on-policy episodes, takes one gradient step on
all their windows, stores the episodes in the replay buffer and takes a
second step on a batch of replayed episodes.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import logging
from dataclasses import asdict, dataclass, fields

import numpy as np

from spcl.approx.model import build_model, parse_spec
from spcl.consistency.witness import SubTrajectory
from spcl.core.exceptions import DivergenceError, DomainError
from spcl.io.ckptformat import ckptwrite
from spcl.pcl.objective import loss_and_grads, soft_loss_and_grads
from spcl.pcl.optim import OPTIMIZERS, make_optimizer
from spcl.pcl.replay import ReplayBuffer

logger = logging.getLogger(__name__)

MODES = ('sparse', 'soft', 'unified_sparse', 'unified_soft')
METRICS = ('iter', 'env_steps', 'avg_reward', 'loss', 'support_size', 'max_prob', 'seed')


@dataclass
class TrainerConfig():
    """
    Hyper-parameters of the training loop.

    ``steps`` caps the number of iterations and ``max_env_steps`` the
    number of environment steps (0 for no budget); training stops at the
    first of both limits. ``batch_size`` is the number of on-policy
    episodes and ``replay_batch_size`` the number of replayed episodes per
    iteration.
    """
    alpha: float = 0.1
    gamma: float = 0.9
    rollout: int = 10
    learning_rate: float = 0.005
    buffer_capacity: int = 10000
    steps: int = 100000
    max_env_steps: int = 200000
    batch_size: int = 16
    replay_batch_size: int = 16
    mode: str = 'sparse'
    seed: int = 0
    a_priority: float = 0.5
    replay: bool = True
    optimizer: str = 'sgd'
    max_episode_steps: int = 50
    model: str = 'mlp:64,64:tanh'
    lambda_factor: str = 'per_action'
    lambda_activation: str = 'sigmoid'
    log_every: int = 100

    def __post_init__(self):
        if not self.alpha > 0.:
            raise DomainError('alpha must be > 0')
        if not 0. < self.gamma < 1.:
            raise DomainError('gamma must lie in (0, 1)')
        if self.rollout < 1:
            raise DomainError('rollout must be >= 1')
        if not self.learning_rate > 0.:
            raise DomainError('learning_rate must be > 0')
        if self.buffer_capacity < 1 or self.batch_size < 1 or self.replay_batch_size < 1:
            raise DomainError('buffer and batch sizes must be >= 1')
        if self.steps < 0 or self.max_env_steps < 0:
            raise DomainError('steps and max_env_steps must be >= 0')
        if self.max_episode_steps < 1:
            raise DomainError('max_episode_steps must be >= 1')
        if self.mode not in MODES:
            raise DomainError('unknown mode '+repr(self.mode))
        if self.optimizer not in OPTIMIZERS:
            raise DomainError('unknown optimizer '+repr(self.optimizer))
        parse_spec(self.model)

    @property
    def unified(self):
        return self.mode.startswith('unified')

    @property
    def policy(self):
        return 'softmax' if self.mode.endswith('soft') else 'sparsemax'

    @classmethod
    def from_dict(cls, values):
        """
        Build a configuration, ignoring keys that are not fields.
        """
        names = {item.name for item in fields(cls)}
        return cls(**{key: value for key, value in values.items() if key in names})

    def as_dict(self):
        return asdict(self)


@dataclass
class Episode():
    """
    One episode ``x_0, a_0, r_0, ..., x_T``.

    ``terminated`` episodes ended in a terminal state; others were cut by
    a step cap and bootstrap from their last observation.
    """
    observations: np.ndarray
    actions: np.ndarray
    rewards: np.ndarray
    terminated: bool = False

    def __post_init__(self):
        self.observations = np.asarray(self.observations)
        self.actions = np.asarray(self.actions, dtype=np.int64)
        self.rewards = np.asarray(self.rewards, dtype=np.float64)
        if len(self.observations) != self.actions.size+1 or self.rewards.size != self.actions.size:
            raise DomainError('episode lengths are inconsistent')

    def __len__(self):
        return int(self.actions.size)

    @property
    def total_reward(self):
        return float(np.sum(self.rewards))


def episode_windows(episode, d):
    """
    All windows of at most ``d`` steps starting at every step of an episode.

    Windows reaching the end of a terminated episode have a zero bootstrap.

    :param episode: Episode
    :param d: rollout
    :returns: list of SubTrajectory
    """
    if d < 1:
        raise DomainError('rollout must be >= 1')
    T = len(episode)
    windows = []
    for t in range(T):
        end = min(t+d, T)
        windows.append(SubTrajectory(episode.observations[t:end+1], episode.actions[t:end],
                                     episode.rewards[t:end], episode.terminated and end == T))
    return windows


def observation_size(space):
    """
    Input size of a model for a gymnasium observation space.
    """
    if hasattr(space, 'n'):
        return int(space.n)
    if getattr(space, 'shape', None):
        return int(np.prod(space.shape))
    raise DomainError('unsupported observation space '+repr(space))


class Trainer():
    """
    Path consistency learning on an episodic environment.

    :param env: gymnasium environment with a discrete action space
    :param config: TrainerConfig
    :param model: optional Model, built from the configuration otherwise
    :param checkpoint: path written when training diverges
    """

    def __init__(self, env, config, model=None, checkpoint=None):
        """
        Initialize the Trainer class.
        """
        self.env = env
        self.config = config
        self.checkpoint = checkpoint
        self.rng = np.random.default_rng(config.seed)

        n_actions = int(env.action_space.n)
        if model is None:
            model = build_model(config.model, observation_size(env.observation_space), n_actions,
                                config.alpha, config.unified, policy=config.policy,
                                lambda_factor=config.lambda_factor,
                                lambda_activation=config.lambda_activation, seed=config.seed)
        if model.n_actions != n_actions or model.policy != config.policy:
            raise DomainError('the model does not match the environment or the mode')
        self.model = model

        self.objective = soft_loss_and_grads if config.policy == 'softmax' else loss_and_grads
        self.optimizer = make_optimizer(config.optimizer, config.learning_rate)
        self.buffer = ReplayBuffer(config.buffer_capacity, config.a_priority,
                                   seed=int(self.rng.integers(2**31)))
        self.iteration = 0
        self.env_steps = 0

    def act(self, observation):
        """
        Sample an action by inverse CDF of the current policy.

        :returns: (action, policy row)
        """
        mu = self.model.forward(observation).mu[0]
        action = int(np.searchsorted(np.cumsum(mu), self.rng.random(), side='right'))
        return min(action, mu.size-1), mu

    def rollout(self):
        """
        Sample one on-policy episode.

        :returns: (Episode, policy rows at the visited states)
        """
        obs, info = self.env.reset(seed=int(self.rng.integers(2**31)))
        observations, actions, rewards, rows = [obs], [], [], []
        terminated = truncated = False
        while not (terminated or truncated):
            action, mu = self.act(obs)
            obs, reward, terminated, truncated, info = self.env.step(action)
            observations.append(obs)
            actions.append(action)
            rewards.append(reward)
            rows.append(mu)
            if len(actions) >= self.config.max_episode_steps:
                truncated = True
        self.env_steps += len(actions)
        return Episode(observations, actions, rewards, terminated), np.array(rows)

    def update(self, episodes):
        """
        One gradient step on all windows of a list of episodes.

        :returns: objective per episode
        """
        windows = [xi for episode in episodes for xi in episode_windows(episode, self.config.rollout)]
        loss, grad = self.objective(windows, self.model, self.config)
        self.optimizer.step(self.model.params, grad/len(episodes))
        return loss/len(episodes)

    def iterate(self):
        """
        One training iteration.

        :returns: dictionary of metrics
        """
        config = self.config
        episodes, rows = [], []
        for i in range(config.batch_size):
            episode, mu = self.rollout()
            episodes.append(episode)
            rows.append(mu)
        rows = np.vstack(rows)

        loss = self.update(episodes)
        for episode in episodes:
            self.buffer.add(episode)
        if config.replay:
            self.update(self.buffer.sample(config.replay_batch_size))

        self.iteration += 1
        return {'iter': self.iteration, 'env_steps': self.env_steps,
                'avg_reward': float(np.mean([e.total_reward for e in episodes])),
                'loss': float(loss),
                'support_size': float(np.mean(np.sum(rows > 0., axis=1))),
                'max_prob': float(np.mean(np.max(rows, axis=1))),
                'seed': config.seed}

    def train(self, steps=None, callback=None):
        """
        Run the training loop.

        :param steps: maximum number of iterations, ``config.steps`` by default
        :param callback: called with the metrics of every iteration
        :returns: list of metric dictionaries
        """
        steps = self.config.steps if steps is None else steps
        budget = self.config.max_env_steps
        log = []
        for i in range(steps):
            if budget and self.env_steps >= budget:
                logger.info('environment step budget %d reached after %d iterations', budget,
                            self.iteration)
                break
            try:
                row = self.iterate()
            except DivergenceError as err:
                logger.error('training diverged at iteration %d: %s', self.iteration+1, err)
                if self.checkpoint is not None:
                    ckptwrite(self.checkpoint, self.model,
                              extra={'iteration': self.iteration, 'diverged': True})
                raise
            log.append(row)
            if callback is not None:
                callback(row)
            if self.config.log_every and row['iter'] % self.config.log_every == 0:
                logger.info('iter %d  env_steps %d  avg_reward %.4f  loss %.4e  support %.3f',
                            row['iter'], row['env_steps'], row['avg_reward'], row['loss'],
                            row['support_size'])
        return log


def train(env, config, model=None, checkpoint=None, callback=None):
    """
    Train a model with path consistency learning.

    :param env: gymnasium environment
    :param config: TrainerConfig
    :param model: optional initial Model
    :param checkpoint: path written when training diverges
    :param callback: called with the metrics of every iteration
    :returns: (training log, trained Model)
    """
    trainer = Trainer(env, config, model, checkpoint)
    return trainer.train(callback=callback), trainer.model

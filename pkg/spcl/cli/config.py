#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: config.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Options of the command-line interface.

Every option has a type, a built-in default and a help string. Values
are resolved per option with the precedence flag > config file >
default; ``SPCL_SEED`` replaces the built-in default seed.

A config file is a flat list of ``key = value`` lines (``#`` starts a
comment); dashes and underscores in keys are equivalent.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import configparser
import os
from dataclasses import dataclass, field

from spcl.core.exceptions import SpclError
from spcl.pcl.trainer import TrainerConfig

SEED_VARIABLE = 'SPCL_SEED'
BUNDLED_MDP = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'data', 'two_state.json')
RESOLVED = 'resolved_config.txt'


class UsageError(SpclError):
    """
    Invalid command line, config file or option value.
    """
    pass


def as_bool(value):
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ('1', 'true', 'yes', 'on'):
        return True
    if text in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError('not a boolean: '+repr(value))


def _optional(kind):
    def convert(value):
        if value is None or str(value).strip().lower() in ('', 'none'):
            return None
        return kind(value)
    convert.__name__ = kind.__name__
    return convert


_TRAINER = TrainerConfig()

COMMON = {
    'seed': (int, 0, 'random seed'),
    'out': (str, 'spcl_out', 'output directory'),
}

OPTIONS = {
    'solve': {
        'mdp': (str, BUNDLED_MDP, 'JSON MDP file'),
        'kind': (str, 'sparse', 'Bellman operator: max, soft or sparse'),
        'alpha': (float, 1., 'regularization weight'),
        'tol': (float, 1.e-10, 'stopping tolerance of value iteration'),
        'max_iters': (int, 1000000, 'maximum number of sweeps'),
    },
    'train': {
        'task': (str, 'copy', 'tape task'),
        'vocab': (str, '5', 'vocabulary size, comma-separated for a sweep'),
        'length': (int, 5, 'maximum input length'),
        'window': (int, 4, 'number of past observations and actions fed to the model'),
        'mode': (str, _TRAINER.mode, 'sparse, soft, unified_sparse or unified_soft, '
                 'comma-separated for a sweep'),
        'seeds': (int, 1, 'number of consecutive seeds starting at --seed'),
        'jobs': (int, 1, 'number of parallel runs'),
        'steps': (int, _TRAINER.steps, 'maximum training iterations'),
        'max_env_steps': (int, _TRAINER.max_env_steps, 'environment step budget, 0 for none'),
        'min_solved': (int, 0, 'exit with status 2 when fewer seeds of a (mode, vocabulary) '
                       'pair reach 0.9 of the maximum average reward'),
        'alpha': (float, _TRAINER.alpha, 'regularization weight'),
        'gamma': (float, _TRAINER.gamma, 'discount factor'),
        'rollout': (int, _TRAINER.rollout, 'sub-trajectory length'),
        'learning_rate': (float, _TRAINER.learning_rate, 'learning rate'),
        'batch_size': (int, _TRAINER.batch_size, 'on-policy episodes per iteration'),
        'replay_batch_size': (int, _TRAINER.replay_batch_size,
                              'replayed episodes per iteration'),
        'buffer_capacity': (int, _TRAINER.buffer_capacity, 'replay buffer capacity'),
        'a_priority': (float, _TRAINER.a_priority, 'replay priority temperature'),
        'replay': (as_bool, _TRAINER.replay, 'off-policy updates from the replay buffer'),
        'optimizer': (str, _TRAINER.optimizer, 'sgd or adam'),
        'model': (str, _TRAINER.model, 'model spec: tabular, linear or mlp:<sizes>:<act>'),
        'lambda_factor': (str, _TRAINER.lambda_factor, 'per_action or scalar'),
        'lambda_activation': (str, _TRAINER.lambda_activation, 'sigmoid or tanh'),
        'max_episode_steps': (int, _TRAINER.max_episode_steps, 'episode step cap'),
        'log_every': (int, _TRAINER.log_every, 'iterations between log lines'),
    },
    'eval': {
        'checkpoint': (_optional(str), None, 'model checkpoint'),
        'task': (_optional(str), None, 'tape task, from the checkpoint by default'),
        'vocab': (_optional(int), None, 'vocabulary size, from the checkpoint by default'),
        'length': (_optional(int), None, 'maximum input length, from the checkpoint by default'),
        'window': (_optional(int), None, 'observation window, from the checkpoint by default'),
        'episodes': (int, 10, 'number of evaluation episodes'),
        'greedy': (as_bool, False, 'most likely action instead of sampling'),
        'replay': (_optional(str), None, 'trajectory dump to replay and verify'),
    },
    'check': {
        'suite': (str, 'all', 'operators, mdp, consistency, gradients or all'),
        'trials': (int, 50, 'random instances per suite'),
    },
}


def default_seed():
    """
    Built-in default seed, overridden by the ``SPCL_SEED`` variable.
    """
    value = os.environ.get(SEED_VARIABLE)
    if value is None or value.strip() == '':
        return COMMON['seed'][1]
    try:
        return int(value)
    except ValueError:
        raise UsageError(SEED_VARIABLE+' must be an integer, got '+repr(value))


def options(command):
    """
    Option table of a command, common options included.
    """
    if command not in OPTIONS:
        raise UsageError('unknown command '+repr(command))
    table = dict(COMMON)
    table.update(OPTIONS[command])
    return table


def read_config_file(fname):
    """
    Read a flat ``key = value`` file.

    :returns: dictionary of raw string values with normalized keys
    """
    parser = configparser.ConfigParser(interpolation=None, comment_prefixes=('#', ';'))
    try:
        with open(fname, 'r') as file:
            parser.read_string('[spcl]\n'+file.read(), source=fname)
    except OSError as err:
        raise UsageError('unable to read config file '+str(fname)+': '+str(err))
    except configparser.Error as err:
        raise UsageError('invalid config file '+str(fname)+': '+str(err))
    return {key.replace('-', '_'): value for key, value in parser['spcl'].items()}


@dataclass
class RunConfig():
    """
    Effective parameters of one command.
    """
    command: str
    values: dict = field(default_factory=dict)

    @property
    def seed(self):
        return self.values['seed']

    @property
    def out(self):
        return self.values['out']

    def __getitem__(self, key):
        return self.values[key]

    def write(self, directory):
        """
        Write ``resolved_config.txt`` in a directory.
        """
        fname = os.path.join(directory, RESOLVED)
        with open(fname, 'w') as file:
            file.write('command = '+self.command+'\n')
            for key in sorted(self.values):
                file.write(key+' = '+str(self.values[key])+'\n')
        return fname


def resolve(command, flags, config_file=None):
    """
    Merge command-line flags, config file and defaults.

    :param command: command name
    :param flags: dictionary of the options given on the command line
    :param config_file: optional config filename
    :returns: RunConfig
    """
    table = options(command)
    filed = read_config_file(config_file) if config_file else {}
    unknown = sorted(set(filed)-set(table))
    if unknown:
        raise UsageError('unknown config keys for '+command+': '+', '.join(unknown))

    values = {}
    for key, (kind, default, text) in table.items():
        if flags.get(key) is not None:
            raw = flags[key]
        elif key in filed:
            raw = filed[key]
        elif key == 'seed':
            raw = default_seed()
        else:
            raw = default
        try:
            values[key] = kind(raw) if raw is not None else None
        except (TypeError, ValueError):
            raise UsageError('invalid value for '+key+': '+repr(raw))
    return RunConfig(command, values)

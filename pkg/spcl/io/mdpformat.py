#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: mdpformat.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Support of the JSON tabular MDP format.

Fields: ``n_states``, ``n_actions``, ``gamma``, ``rewards`` (n_states x
n_actions), ``transitions`` (n_states x n_actions x n_states) and the
optional ``terminal`` list of state indices.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import json

import numpy as np

from spcl.core.exceptions import DomainError
from spcl.mdp.tabular import TabularMDP

REQUIRED = ('n_states', 'n_actions', 'gamma', 'rewards', 'transitions')


def mdpread(fname):
    """
    Read a tabular MDP.

    :param fname: JSON filename and path

    .. rubric:: Basic usage

    >>> from spcl.io import mdpread
    >>> m = mdpread('two_state.json')
    """
    try:
        with open(fname, 'r') as file:
            data = json.load(file)
    except ValueError as err:
        raise DomainError('unable to parse '+str(fname)+': '+str(err))

    missing = [key for key in REQUIRED if key not in data]
    if missing:
        raise DomainError(str(fname)+' misses '+', '.join(missing))

    transitions = np.array(data['transitions'], dtype=np.float64)
    rewards = np.array(data['rewards'], dtype=np.float64)
    shape = (data['n_states'], data['n_actions'])
    if rewards.shape != shape or transitions.shape != shape+(data['n_states'],):
        raise DomainError(str(fname)+': arrays do not match n_states and n_actions')

    terminal = np.zeros(data['n_states'], dtype=bool)
    terminal[np.asarray(data.get('terminal', []), dtype=np.int64)] = True
    return TabularMDP(transitions, rewards, data['gamma'], terminal)


def mdpwrite(fname, m):
    """
    Write a tabular MDP.
    """
    data = {'n_states': m.n_states, 'n_actions': m.n_actions, 'gamma': m.gamma,
            'rewards': m.reward.tolist(), 'transitions': m.transition.tolist(),
            'terminal': np.flatnonzero(m.terminal).tolist()}
    with open(fname, 'w') as file:
        json.dump(data, file, indent=1)
        file.write('\n')

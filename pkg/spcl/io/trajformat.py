#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: trajformat.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Support of trajectory dumps.

A dump starts with a comment line ``# kind=<task> vocab=<V> seed=<s>``,
optionally followed by ``length=<L>`` (maximum input length of the
task), then the column line ``t,obs,action,reward,done`` and one line
per step.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import csv

from spcl.core.exceptions import DomainError

COLUMNS = ('t', 'obs', 'action', 'reward', 'done')


def trajwrite(fname, steps, kind, vocab, seed, length=None):
    """
    Write a trajectory dump.

    :param fname: output filename
    :param steps: iterable of ``(t, obs, action, reward, done)``
    :param kind: task name
    :param vocab: vocabulary size
    :param seed: seed of the episode
    :param length: optional maximum input length
    """
    header = '# kind='+str(kind)+' vocab='+str(vocab)+' seed='+str(seed)
    if length is not None:
        header += ' length='+str(int(length))
    with open(fname, 'w', newline='') as file:
        file.write(header+'\n')
        writer = csv.writer(file, lineterminator='\n')
        writer.writerow(COLUMNS)
        for t, obs, action, reward, done in steps:
            writer.writerow((int(t), int(obs), int(action), repr(float(reward)), int(bool(done))))


def trajread(fname):
    """
    Read a trajectory dump.

    :returns: (header dictionary with ``kind``, ``vocab``, ``seed`` and
        ``length`` (None when absent), list of ``(t, obs, action, reward, done)``)
    """
    with open(fname, 'r', newline='') as file:
        first = file.readline()
        if not first.startswith('#'):
            raise DomainError(str(fname)+' has no trajectory header')
        header = {}
        for item in first[1:].split():
            key, sep, value = item.partition('=')
            if not sep:
                raise DomainError(str(fname)+': invalid header item '+repr(item))
            header[key] = value
        if not {'kind', 'vocab', 'seed'} <= set(header) <= {'kind', 'vocab', 'seed', 'length'}:
            raise DomainError(str(fname)+': header needs kind, vocab and seed')
        header['vocab'] = int(header['vocab'])
        header['seed'] = None if header['seed'] == 'None' else int(header['seed'])
        header['length'] = int(header['length']) if 'length' in header else None

        reader = csv.reader(file)
        if tuple(next(reader, ())) != COLUMNS:
            raise DomainError(str(fname)+': expected columns '+','.join(COLUMNS))
        steps = [(int(t), int(obs), int(action), float(reward), bool(int(done)))
                 for t, obs, action, reward, done in reader]
    return header, steps

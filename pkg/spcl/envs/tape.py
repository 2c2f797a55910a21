#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: tape.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Algorithmic tape tasks.

The agent reads the symbol under a head moving on a tape (or on a 2 x n
digit grid) and may write one symbol per step. Every correct symbol earns
a reward of 1; the episode ends when the whole target is written or at
the first incorrect symbol. Episodes that never finish are truncated
after ``4 x len(target)`` steps.

Flat actions enumerate ``(move, write, char)``::

    action = move*(1+V) + (0 if no write else 1+char)

with moves ``left, right`` on tapes and ``left, right, up, down`` on
grids. Observations are symbol indices, the blank symbol off the tape
is ``V``.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import string

import gymnasium
import numpy as np
from gymnasium import spaces

from spcl.core.exceptions import DomainError, ProtocolError

KINDS = ('copy', 'duplicated_input', 'repeat_copy', 'reverse', 'reversed_addition')
ALIASES = {'Copy': 'copy', 'DuplicatedInput': 'duplicated_input', 'RepeatCopy': 'repeat_copy',
           'Reverse': 'reverse', 'ReversedAddition': 'reversed_addition'}
MOVES = ('left', 'right', 'up', 'down')
LEFT, RIGHT, UP, DOWN = range(4)
STEP_CAP = 4


def n_moves(kind):
    return 4 if kind == 'reversed_addition' else 2


def encode_action(move, write, char, vocab_size, moves=2):
    """
    Flat index of ``(move, write, char)``; ``char`` is None without a write.

    >>> from spcl.envs import encode_action
    >>> encode_action(1, 1, 2, vocab_size=5)
    9
    """
    if not 0 <= move < moves:
        raise DomainError('invalid move '+repr(move))
    if write:
        if char is None or not 0 <= char < vocab_size:
            raise DomainError('invalid character '+repr(char))
        return move*(1+vocab_size)+1+int(char)
    if char is not None:
        raise DomainError('a character is only given with a write')
    return move*(1+vocab_size)


def decode_action(action, vocab_size, moves=2):
    """
    ``(move, write, char)`` of a flat action index.
    """
    if not 0 <= action < moves*(1+vocab_size):
        raise DomainError('invalid action '+repr(action))
    move, rest = divmod(int(action), 1+vocab_size)
    if rest == 0:
        return move, 0, None
    return move, 1, rest-1


def alphabet(vocab_size, digits=False):
    """
    Display symbols: letters for tapes, digits for addition grids.
    """
    pool = (string.digits+string.ascii_lowercase) if digits else string.ascii_lowercase
    if vocab_size <= len(pool):
        return list(pool[:vocab_size])
    return [str(i)+' ' for i in range(vocab_size)]


def encode_string(text, vocab_size, digits=False):
    """
    Symbol indices of a string over the display alphabet.
    """
    symbols = alphabet(vocab_size, digits)
    try:
        return [symbols.index(ch) for ch in text]
    except ValueError:
        raise DomainError(repr(text)+' uses symbols outside the alphabet')


def target_of(kind, data, vocab_size):
    """
    Expected output of an instance.

    :param kind: task name
    :param data: tape (1-D) or 2 x n grid of symbol indices
    :param vocab_size: vocabulary size (the base of addition grids)
    """
    data = np.asarray(data, dtype=np.int64)
    if kind == 'copy':
        return data.copy()
    if kind == 'duplicated_input':
        return data[::2].copy()
    if kind == 'repeat_copy':
        return np.concatenate((data, data[::-1], data))
    if kind == 'reverse':
        return data[::-1].copy()

    # Least-significant digit first, final carry kept
    out, carry = [], 0
    for top, bottom in data.T:
        carry, digit = divmod(int(top)+int(bottom)+carry, vocab_size)
        out.append(digit)
    if carry:
        out.append(carry)
    return np.array(out, dtype=np.int64)


class TapeTask(gymnasium.Env):
    """
    One of the five algorithmic tasks as a gymnasium environment.

    :param kind: ``'copy'``, ``'duplicated_input'``, ``'repeat_copy'``,
        ``'reverse'`` or ``'reversed_addition'`` (CamelCase names accepted)
    :param vocab_size: number of symbols (base of the addition)
    :param length_range: inclusive range of the input length (number of
        distinct characters for duplicated input, columns for addition)

    ``reset`` accepts ``options={'tape': [...]}`` or
    ``options={'grid': [[...], [...]]}`` to pin the instance.
    """

    metadata = {'render_modes': ['ansi']}

    def __init__(self, kind='copy', vocab_size=5, length_range=(2, 5), render_mode=None):
        """
        Initialize the TapeTask class.
        """
        kind = ALIASES.get(kind, kind)
        if kind not in KINDS:
            raise DomainError('unknown task '+repr(kind))
        if vocab_size < 2:
            raise DomainError('vocab_size must be >= 2')
        low, high = length_range
        if low < 1 or high < low:
            raise DomainError('invalid length range '+repr(length_range))

        self.kind = kind
        self.vocab_size = int(vocab_size)
        self.length_range = (int(low), int(high))
        self.moves = n_moves(kind)
        self.blank = self.vocab_size
        self.render_mode = render_mode
        self.observation_space = spaces.Discrete(self.vocab_size+1)
        self.action_space = spaces.Discrete(self.moves*(1+self.vocab_size))

        self.data = None
        self.target = None
        self.emitted = []
        self.head = None
        self.n_steps = 0
        self.done = True

    @property
    def two_dimensional(self):
        return self.kind == 'reversed_addition'

    @property
    def max_steps(self):
        return STEP_CAP*len(self.target)

    def _sample(self):
        n = int(self.np_random.integers(self.length_range[0], self.length_range[1]+1))
        if self.two_dimensional:
            return self.np_random.integers(0, self.vocab_size, size=(2, n))
        chars = self.np_random.integers(0, self.vocab_size, size=n)
        if self.kind == 'duplicated_input':
            return np.repeat(chars, 2)
        return chars

    def _check_data(self, data):
        data = np.asarray(data, dtype=np.int64)
        expected = 2 if self.two_dimensional else 1
        if data.ndim != expected or data.shape[-1] < 1 or (expected == 2 and data.shape[0] != 2):
            raise DomainError('the '+self.kind+' task expects a '+('2 x n grid' if expected == 2
                                                                  else 'non-empty tape'))
        if np.any(data < 0) or np.any(data >= self.vocab_size):
            raise DomainError('symbols must lie in [0, vocab_size)')
        if self.kind == 'duplicated_input' and (data.size % 2 or np.any(data[::2] != data[1::2])):
            raise DomainError('duplicated input tapes repeat every symbol twice')
        return data

    def _observe(self):
        if self.two_dimensional:
            row, col = self.head
            inside = 0 <= col < self.data.shape[1]
            return int(self.data[row, col]) if inside else self.blank
        inside = 0 <= self.head < self.data.size
        return int(self.data[self.head]) if inside else self.blank

    def _move(self, move):
        if self.two_dimensional:
            row, col = self.head
            width = self.data.shape[1]
            if move == LEFT:
                col = max(col-1, -1)
            elif move == RIGHT:
                col = min(col+1, width)
            elif move == UP:
                row = max(row-1, 0)
            else:
                row = min(row+1, 1)
            self.head = (row, col)
        elif move == LEFT:
            self.head = max(self.head-1, -1)
        else:
            self.head = min(self.head+1, self.data.size)

    def _info(self):
        return {'target': self.target.copy(), 'vocab_size': self.vocab_size,
                'n_actions': int(self.action_space.n)}

    def reset(self, seed=None, options=None):
        super().reset(seed=seed)
        options = options or {}
        if 'tape' in options or 'grid' in options:
            self.data = self._check_data(options.get('tape', options.get('grid')))
        else:
            self.data = self._sample()
        self.target = target_of(self.kind, self.data, self.vocab_size)
        self.emitted = []
        self.head = (0, 0) if self.two_dimensional else 0
        self.n_steps = 0
        self.done = False
        return self._observe(), self._info()

    def step(self, action):
        if self.done:
            raise ProtocolError('step called on a finished episode, call reset first')
        move, write, char = decode_action(action, self.vocab_size, self.moves)
        reward = 0.
        terminated = False

        if write:
            if char == self.target[len(self.emitted)]:
                self.emitted.append(char)
                reward = 1.
                terminated = len(self.emitted) == len(self.target)
            else:
                terminated = True
        self._move(move)

        self.n_steps += 1
        truncated = not terminated and self.n_steps >= self.max_steps
        self.done = terminated or truncated
        return self._observe(), reward, terminated, truncated, self._info()

    def render(self):
        digits = self.two_dimensional
        symbols = alphabet(self.vocab_size, digits)
        rows = np.atleast_2d(self.data)
        lines = [''.join(symbols[c] for c in row) for row in rows]
        lines.append('> '+''.join(symbols[c] for c in self.emitted))
        return '\n'.join(lines)

    def expected_output(self):
        """
        Target as a display string.
        """
        symbols = alphabet(self.vocab_size, self.two_dimensional)
        return ''.join(symbols[c] for c in self.target)


def make_task(kind, vocab_size, length_range=(2, 5), seed=None):
    """
    Sample a task instance.

    :param kind: task name
    :param vocab_size: number of symbols
    :param length_range: inclusive range of the input length
    :param seed: seed of the instance
    :returns: TapeTask, already reset

    .. rubric:: Basic usage

    >>> from spcl.envs import make_task
    >>> task = make_task('reverse', 5, seed=0)
    >>> len(task.target) == task.data.size
    True
    """
    task = TapeTask(kind, vocab_size, length_range)
    task.reset(seed=seed)
    return task

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: scripted.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Hand-written policies solving the tape tasks from observations only.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

from spcl.envs.tape import ALIASES, DOWN, KINDS, LEFT, RIGHT, UP, encode_action, n_moves
from spcl.core.exceptions import DomainError


class ScriptedSolver():
    """
    Oracle policy of a tape task.

    The solver only sees the symbol under the head and keeps a small
    control state: a scan phase for the reversing tasks, a parity for
    duplicated input, the pending digit, current row and carry for
    addition.

    :param kind: task name
    :param vocab_size: number of symbols
    """

    def __init__(self, kind, vocab_size):
        """
        Initialize the ScriptedSolver class.
        """
        kind = ALIASES.get(kind, kind)
        if kind not in KINDS:
            raise DomainError('unknown task '+repr(kind))
        self.kind = kind
        self.vocab_size = vocab_size
        self.blank = vocab_size
        self.moves = n_moves(kind)
        self.reset()

    def reset(self):
        self.phase = 0
        self.pending = None
        self.row = 0
        self.carry = 0

    def _action(self, move, char=None):
        return encode_action(move, char is not None, char, self.vocab_size, self.moves)

    def act(self, observation):
        """
        Action for the symbol under the head.
        """
        obs = int(observation)
        handler = getattr(self, '_'+self.kind)
        return handler(obs)

    def _copy(self, obs):
        return self._action(RIGHT, obs)

    def _duplicated_input(self, obs):
        self.phase ^= 1
        return self._action(RIGHT, obs if self.phase else None)

    def _reverse(self, obs):
        if self.phase == 0:
            if obs != self.blank:
                return self._action(RIGHT)
            self.phase = 1
            return self._action(LEFT)
        return self._action(LEFT, obs)

    def _repeat_copy(self, obs):
        # forward, backward, forward
        if obs == self.blank:
            self.phase += 1
            return self._action(LEFT if self.phase == 1 else RIGHT)
        if self.phase == 1:
            return self._action(LEFT, obs)
        return self._action(RIGHT, obs)

    def _reversed_addition(self, obs):
        if obs == self.blank:
            return self._action(RIGHT, self.carry)
        if self.pending is None:
            self.pending = obs
            move = DOWN if self.row == 0 else UP
            self.row = 1-self.row
            return self._action(move)
        self.carry, digit = divmod(self.pending+obs+self.carry, self.vocab_size)
        self.pending = None
        return self._action(RIGHT, digit)


def run_solver(task, seed=None, options=None):
    """
    Play one episode of a task with its scripted solver.

    :returns: (total reward, number of steps, terminated)
    """
    solver = ScriptedSolver(task.kind, task.vocab_size)
    obs, info = task.reset(seed=seed, options=options)
    total, steps = 0., 0
    terminated = truncated = False
    while not (terminated or truncated):
        obs, reward, terminated, truncated, info = task.step(solver.act(obs))
        total += reward
        steps += 1
    return total, steps, terminated

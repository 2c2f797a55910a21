#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: exceptions.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Exceptions raised by spcl.

Every domain error is also a ``ValueError`` so callers catching the
builtin keep working.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""


class SpclError(Exception):
    """
    Base class of all spcl errors.
    """


class DomainError(SpclError, ValueError):
    """
    Invalid argument: empty score vector, non-positive temperature,
    unknown kind, shape mismatch, log of a zero probability.
    """


class ConvergenceError(SpclError, RuntimeError):
    """
    An iterative solver stopped before reaching its tolerance.

    :param message: error message
    :param residual: last sup-norm residual
    :param iterations: number of iterations performed
    """

    def __init__(self, message, residual, iterations):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class DivergenceError(SpclError, FloatingPointError):
    """
    NaN or Inf in model outputs, consistency errors or gradients.

    :param message: error message
    :param index: index of the offending sub-trajectory, if known
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ProtocolError(SpclError, RuntimeError):
    """
    An environment was stepped before reset or after its episode ended.
    """


class TheoremViolation(SpclError, AssertionError):
    """
    A bound or theorem check failed. The report is attached.

    :param message: error message
    :param report: the report object describing the violation
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: __init__.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Initialization file for the spcl package.

Tsallis-entropy (sparse) and Shannon-entropy (soft) regularized Markov
decision processes: exact tabular solvers, sparse consistency equations
and path consistency learning.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import logging

__version__ = '0.1.0'

# The library never configures handlers itself
logging.getLogger(__name__).addHandler(logging.NullHandler())

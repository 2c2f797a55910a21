# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: Convenience import for spcl.cli
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Initialization file for spcl.cli.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

# Import spcl.cli classes and functions
from .config import RunConfig
from .config import UsageError
from .config import resolve
from .config import read_config_file
from .suites import SUITES
from .suites import SuiteResult
from .suites import run_suite
from .main import build_parser
from .main import main

if __name__ == '__main__':
    import doctest
    doctest.testmod(exclude_empty=True)

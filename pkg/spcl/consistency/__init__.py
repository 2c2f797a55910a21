# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: Convenience import for spcl.consistency
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Initialization file for spcl.consistency.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

# Import spcl.consistency classes and functions
from .witness import ConsistencyWitness
from .witness import SubTrajectory
from .witness import construct_witness
from .residuals import one_step_residual
from .residuals import one_step_residuals
from .residuals import multi_step_residual_exact
from .residuals import telescoped_residual
from .residuals import soft_consistency_residual
from .residuals import soft_multi_step_residual_exact
from .residuals import kkt_form_violation
from .theorems import GapReport
from .theorems import check_theorem2
from .theorems import check_corollary_original
from .theorems import search_consistent_witness
from .theorems import close_witness

if __name__ == '__main__':
    import doctest
    doctest.testmod(exclude_empty=True)

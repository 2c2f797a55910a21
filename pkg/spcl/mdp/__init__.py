# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: Convenience import for spcl.mdp
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Initialization file for spcl.mdp.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

# Import spcl.mdp classes and functions
from .tabular import TabularMDP
from .tabular import TabularPolicy
from .tabular import random_mdp
from .tabular import bandit_mdp
from .tabular import chain_mdp
from .solvers import q_from_v
from .solvers import backup
from .solvers import value_iteration
from .solvers import extract_policy
from .solvers import policy_evaluation
from .bounds import check_bounds
from .bounds import bellman_inequality_gap

if __name__ == '__main__':
    import doctest
    doctest.testmod(exclude_empty=True)

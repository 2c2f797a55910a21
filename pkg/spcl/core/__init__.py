# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: Convenience import for spcl.core
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Initialization file for spcl.core.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

# Import spcl.core classes and functions
from .exceptions import SpclError
from .exceptions import DomainError
from .exceptions import ConvergenceError
from .exceptions import DivergenceError
from .exceptions import ProtocolError
from .exceptions import TheoremViolation
from .operators import PolicyDistribution
from .operators import sfmax
from .operators import softmax_policy
from .operators import support_set
from .operators import g_threshold
from .operators import sparsemax_policy
from .operators import sparsemax_rows
from .operators import spmax
from .operators import spmax_rows
from .operators import spmax_gradient
from .operators import tsallis_entropy
from .operators import shannon_entropy

if __name__ == '__main__':
    import doctest
    doctest.testmod(exclude_empty=True)

# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: Convenience import for spcl.approx
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Initialization file for spcl.approx.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

# Import spcl.approx classes and functions
from .layers import Dense
from .layers import Trunk
from .model import Model
from .model import ModelOutputs
from .model import build_model
from .model import load_witness
from .model import model_from_description
from .model import parse_spec
from .gradcheck import GradCheckReport
from .gradcheck import check_gradient
from .gradcheck import check_model_gradient
from .gradcheck import numerical_gradient
from .gradcheck import relative_error

if __name__ == '__main__':
    import doctest
    doctest.testmod(exclude_empty=True)

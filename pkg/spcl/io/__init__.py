# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: Convenience import for spcl.io
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Initialization file for spcl.io.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

# Import spcl.io functions
from .mdpformat import mdpread
from .mdpformat import mdpwrite
from .ckptformat import ckptread
from .ckptformat import ckptwrite
from .trajformat import trajread
from .trajformat import trajwrite
from .metricsformat import MetricsWriter
from .metricsformat import metricsread
from .metricsformat import metricswrite

if __name__ == '__main__':
    import doctest
    doctest.testmod(exclude_empty=True)

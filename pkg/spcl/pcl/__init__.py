# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: Convenience import for spcl.pcl
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Initialization file for spcl.pcl.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

# Import spcl.pcl classes and functions
from .objective import consistency_error
from .objective import consistency_errors
from .objective import soft_consistency_error
from .objective import loss_and_grads
from .objective import soft_loss_and_grads
from .objective import surrogate_gap
from .replay import ReplayBuffer
from .replay import buffer_sample
from .optim import SGD
from .optim import Adam
from .optim import make_optimizer
from .trainer import MODES
from .trainer import METRICS
from .trainer import TrainerConfig
from .trainer import Episode
from .trainer import episode_windows
from .trainer import Trainer
from .trainer import train

if __name__ == '__main__':
    import doctest
    doctest.testmod(exclude_empty=True)

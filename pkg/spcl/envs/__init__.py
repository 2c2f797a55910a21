# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: Convenience import for spcl.envs
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Initialization file for spcl.envs.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import gymnasium

# Import spcl.envs classes and functions
from .tape import KINDS
from .tape import TapeTask
from .tape import make_task
from .tape import encode_action
from .tape import decode_action
from .tape import encode_string
from .tape import alphabet
from .tape import target_of
from .scripted import ScriptedSolver
from .scripted import run_solver
from .wrappers import ObservationWindow
from .tabular import TabularEnv
from .tabular import wrap_tabular

# Register the tape tasks
for _name, _kind in [('Copy', 'copy'), ('DuplicatedInput', 'duplicated_input'),
                     ('RepeatCopy', 'repeat_copy'), ('Reverse', 'reverse'),
                     ('ReversedAddition', 'reversed_addition')]:
    if 'spcl/'+_name+'-v0' not in gymnasium.registry:
        gymnasium.register(id='spcl/'+_name+'-v0', entry_point='spcl.envs.tape:TapeTask',
                           kwargs={'kind': _kind})

if __name__ == '__main__':
    import doctest
    doctest.testmod(exclude_empty=True)

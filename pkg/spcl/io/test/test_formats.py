#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: test_formats.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Test suite for the file formats (spcl.io)

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import os

import numpy as np
import pytest

import spcl
from spcl.core import DomainError
from spcl.approx import build_model
from spcl.io import (MetricsWriter, ckptread, ckptwrite, mdpread, mdpwrite, metricsread,
                     metricswrite, trajread, trajwrite)
from spcl.mdp import random_mdp

# List of test functions
# - test_mdpread_bundled()
# - test_mdp_file()
# - test_mdpread_errors()
# - test_checkpoint_bit_exact()
# - test_checkpoint_errors()
# - test_trajectory_dump()
# - test_metrics_csv()

DATA = os.path.join(os.path.dirname(spcl.__file__), 'data')

def test_mdpread_bundled():
    """
    Read the bundled two-state example.
    """
    m = mdpread(os.path.join(DATA, 'two_state.json'))
    assert (m.n_states, m.n_actions) == (2, 2)
    np.testing.assert_allclose(m.gamma, 0.9)
    np.testing.assert_allclose(m.transition[1, 1], [0.3, 0.7])
    assert not np.any(m.terminal)

def test_mdp_file(tmp_path):
    """
    Written MDPs read back identically, terminal states included.
    """
    m = random_mdp(4, 3, seed=1, n_terminal=1)
    fname = str(tmp_path/'m.json')
    mdpwrite(fname, m)
    back = mdpread(fname)
    np.testing.assert_equal(back.transition, m.transition)
    np.testing.assert_equal(back.reward, m.reward)
    np.testing.assert_equal(back.terminal, m.terminal)

def test_mdpread_errors(tmp_path):
    """
    Unparsable files, missing fields and wrong shapes.
    """
    cases = {'bad.json': '{"n_states": 1,', 'missing.json': '{"n_states": 1}',
             'shape.json': ('{"n_states": 1, "n_actions": 2, "gamma": 0.5, '
                            '"rewards": [[1.0]], "transitions": [[[1.0]]]}')}
    for name, text in cases.items():
        fname = tmp_path/name
        fname.write_text(text)
        with pytest.raises(DomainError):
            mdpread(str(fname))

def test_checkpoint_bit_exact(tmp_path):
    """
    Parameters and description survive a checkpoint bit for bit.
    """
    model = build_model('mlp:7:relu', 3, 4, 0.25, unified=True, lambda_factor='scalar', seed=2)
    fname = str(tmp_path/'model.ckpt')
    ckptwrite(fname, model, extra={'iteration': 12})
    restored, header = ckptread(fname)
    assert restored.params.tobytes() == model.params.tobytes()
    assert restored.describe() == model.describe()
    assert header['extra'] == {'iteration': 12}

def test_checkpoint_errors(tmp_path):
    """
    Foreign and truncated files are rejected.
    """
    fname = tmp_path/'other.ckpt'
    fname.write_bytes(b'{"format": "other"}\n')
    with pytest.raises(DomainError):
        ckptread(str(fname))
    model = build_model('tabular', 2, 2, 0.1)
    ckptwrite(str(fname), model)
    fname.write_bytes(fname.read_bytes()[:-8])
    with pytest.raises(DomainError):
        ckptread(str(fname))

def test_trajectory_dump(tmp_path):
    """
    Header and steps of a trajectory dump.
    """
    fname = tmp_path/'episode.csv'
    steps = [(0, 2, 5, 1., False), (1, 1, 4, 0., True)]
    trajwrite(str(fname), steps, 'copy', 5, 7)
    lines = fname.read_text().splitlines()
    assert lines[0] == '# kind=copy vocab=5 seed=7'
    assert lines[1] == 't,obs,action,reward,done'
    assert lines[2] == '0,2,5,1.0,0'
    header, back = trajread(str(fname))
    assert header == {'kind': 'copy', 'vocab': 5, 'seed': 7, 'length': None}
    assert back == steps
    trajwrite(str(fname), steps, 'reverse', 3, 2, length=4)
    assert fname.read_text().splitlines()[0] == '# kind=reverse vocab=3 seed=2 length=4'
    assert trajread(str(fname))[0]['length'] == 4
    fname.write_text('t,obs,action,reward,done\n')
    with pytest.raises(DomainError):
        trajread(str(fname))

def test_metrics_csv(tmp_path):
    """
    Header-only files and repr-formatted floats.
    """
    columns = ('iter', 'loss')
    fname = tmp_path/'metrics.csv'
    metricswrite(str(fname), [], columns)
    assert fname.read_text() == 'iter,loss\n'
    metricswrite(str(fname), [{'iter': 1, 'loss': 0.1}, {'iter': 2, 'loss': 1/3}], columns)
    assert fname.read_text() == 'iter,loss\n1,0.1\n2,'+repr(1/3)+'\n'
    assert metricsread(str(fname))[1]['iter'] == '2'
    with MetricsWriter(str(fname), columns) as writer:
        with pytest.raises(DomainError):
            writer.write({'iter': 1})

if __name__ == "__main__" :
    pytest.main([__file__])

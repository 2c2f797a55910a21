#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: ckptformat.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Support of model checkpoints.

A checkpoint is one JSON header line (model description, named slices,
extra metadata) followed by the flat parameter vector as little-endian
8-byte floats.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import json

import numpy as np

from spcl.approx.model import model_from_description
from spcl.core.exceptions import DomainError

MAGIC = 'spcl-checkpoint'
VERSION = 1


def ckptwrite(fname, model, extra=None):
    """
    Write a model checkpoint.

    :param fname: output filename
    :param model: Model instance
    :param extra: optional JSON-compatible metadata

    .. rubric:: Basic usage

    >>> from spcl.approx import build_model
    >>> from spcl.io import ckptwrite
    >>> ckptwrite('model.ckpt', build_model('tabular', 3, 2, 0.1, seed=0))
    """
    header = {'format': MAGIC, 'version': VERSION, 'dtype': '<f8',
              'model': model.describe(), 'extra': extra or {}}
    with open(fname, 'wb') as file:
        file.write((json.dumps(header, sort_keys=True)+'\n').encode('utf-8'))
        file.write(model.params.astype('<f8').tobytes())


def ckptread(fname):
    """
    Read a model checkpoint.

    :param fname: checkpoint filename
    :returns: (Model, header dictionary)
    """
    with open(fname, 'rb') as file:
        bdata = file.read()

    end = bdata.find(b'\n')
    if end < 0:
        raise DomainError(fname+' has no checkpoint header')
    try:
        header = json.loads(bdata[:end].decode('utf-8'))
    except ValueError:
        raise DomainError(fname+' has an invalid checkpoint header')
    if header.get('format') != MAGIC:
        raise DomainError(fname+' is not a checkpoint')

    desc = header['model']
    body = bdata[end+1:]
    if len(body) != 8*desc['n_params']:
        raise DomainError(fname+' holds '+str(len(body)//8)+' parameters, expected '
                          +str(desc['n_params']))
    params = np.frombuffer(body, dtype='<f8').astype(np.float64)
    return model_from_description(desc, params), header

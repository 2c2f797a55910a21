#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: metricsformat.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Support of CSV metric streams.

Floats are written with ``repr`` so that identical runs give identical
bytes.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import csv

from spcl.core.exceptions import DomainError


def _format(value):
    if isinstance(value, float):
        return repr(value)
    return str(value)


class MetricsWriter():
    """
    Row-by-row CSV writer; the header is written on opening so that an
    aborted run leaves a valid partial file.

    :param fname: output filename
    :param columns: column names
    """

    def __init__(self, fname, columns):
        """
        Initialize the MetricsWriter class.
        """
        self.columns = tuple(columns)
        self.file = open(fname, 'w', newline='')
        self.writer = csv.writer(self.file, lineterminator='\n')
        self.writer.writerow(self.columns)
        self.file.flush()

    def write(self, row):
        missing = [c for c in self.columns if c not in row]
        if missing:
            raise DomainError('metrics row misses '+', '.join(missing))
        self.writer.writerow([_format(row[c]) for c in self.columns])
        self.file.flush()

    def close(self):
        self.file.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def metricswrite(fname, rows, columns):
    """
    Write a list of metric dictionaries.
    """
    with MetricsWriter(fname, columns) as writer:
        for row in rows:
            writer.write(row)


def metricsread(fname):
    """
    Read a metrics CSV as a list of dictionaries of strings.
    """
    with open(fname, 'r', newline='') as file:
        return list(csv.DictReader(file))

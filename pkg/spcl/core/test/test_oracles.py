#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: test_oracles.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
Test suite for the brute-force oracles (spcl.core.oracles)

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import numpy as np
import pytest
from scipy.special import comb

from spcl.core import spmax
from spcl.core.oracles import (project_simplex_bruteforce, simplex_lattice,
                               spmax_grid)

# List of test functions
# - test_simplex_lattice()
# - test_projection_fixed_point()
# - test_spmax_grid()

def test_simplex_lattice():
    """
    Lattice size and feasibility.
    """
    lattice = simplex_lattice(4, 10)
    np.testing.assert_equal(lattice.shape, (comb(13, 3, exact=True), 4))
    np.testing.assert_allclose(lattice.sum(axis=1), 1., atol=1.e-14)
    assert np.all(lattice >= 0.)
    np.testing.assert_equal(simplex_lattice(1, 10), [[1.]])

def test_projection_fixed_point():
    """
    Points of the simplex are their own projection.
    """
    rng = np.random.default_rng(10)
    for i in range(10):
        mu = rng.dirichlet(np.ones(6))
        np.testing.assert_allclose(project_simplex_bruteforce(mu), mu, atol=1.e-12)
    np.testing.assert_allclose(project_simplex_bruteforce([3., 0.]), [1., 0.])

def test_spmax_grid():
    """
    spmax against an exhaustive simplex grid search.
    """
    rng = np.random.default_rng(11)
    for i in range(5):
        z = rng.normal(size=4)
        grid = spmax_grid(z, resolution=120)
        assert grid <= spmax(z)+1.e-12
        np.testing.assert_allclose(grid, spmax(z), atol=2.e-3)

if __name__ == "__main__" :
    pytest.main([__file__])

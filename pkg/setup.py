#! /usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages
import io
import os

# Package meta-data.
NAME = 'spcl'
DESCRIPTION = 'Sparse and soft regularized MDPs and path consistency learning.'
URL = ''
AUTHOR = 'spcl developers'
REQUIRES_PYTHON = '>=3.9'
VERSION = '0.1.0'

# Packages are required for spcl to be executed
REQUIRED = [
    'numpy', 'scipy', 'gymnasium',
]

# Optional packages
EXTRAS = {
    'test': ['pytest'],
}

here = os.path.abspath(os.path.dirname(__file__))

# Import the README and use it as the long-description.
try:
    with io.open(os.path.join(here, 'README.md'), encoding='utf-8') as f:
        long_description = '\n' + f.read()
except FileNotFoundError:
    long_description = DESCRIPTION

setup(
    name=NAME,
    version=VERSION,
    description=DESCRIPTION,
    long_description=long_description,
    long_description_content_type='text/markdown',

    # Meta-data informations
    author=AUTHOR,
    license="LGPL3",
    keywords="reinforcement learning sparsemax tsallis entropy path consistency",
    python_requires=REQUIRES_PYTHON,
    url=URL,
    packages=find_packages(exclude=['examples', 'examples.*']),

    install_requires=REQUIRED,
    extras_require=EXTRAS,
    package_data={'spcl': ['data/*.json']},

    # Command-line interface
    entry_points={
        'console_scripts': ['spcl = spcl.cli.main:main'],
    },

    classifiers=[
        # Trove classifiers
        # Full list: https://pypi.python.org/pypi?%3Aaction=list_classifiers
        'License :: OSI Approved :: GNU Lesser General Public License v3 (LGPLv3)',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
        ],
)

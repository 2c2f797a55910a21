# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))


# -- Project information -----------------------------------------------------

project = 'spcl'
copyright = '2026, spcl developers'
author = 'spcl developers'

# The short X.Y version
version = '0.1'
# The full version, including alpha/beta/rc tags
release = '0.1.0'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.imgmath',
    'sphinx.ext.autosummary'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'style_nav_header_background': '#eeeeec',
    'display_version': True,
}
htmlhelp_basename = 'spcldoc'


# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'spcl.tex', 'spcl Documentation',
     'spcl developers', 'manual'),
]

man_pages = [
    (master_doc, 'spcl', 'spcl Documentation',
     [author], 1)
]

todo_include_todos = True

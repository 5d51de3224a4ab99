#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# powertriad documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import re
import sys
sys.path.insert(0, os.path.abspath('../'))

import powertriad


# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

source_suffix = '.rst'
master_doc = 'index'

project = 'powertriad'
copyright = '2024, powertriad developers'
author = 'powertriad developers'

version = re.match(r'\d+\.\d+', powertriad.__version__).group()
release = powertriad.__version__

language = None
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_static_path = []

if not on_rtd:  # only import and set the theme if we're building docs locally
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

htmlhelp_basename = 'powertriaddoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'powertriad.tex', 'powertriad Documentation',
     'powertriad developers', 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'powertriad', 'powertriad Documentation',
     [author], 1)
]


# Example configuration for intersphinx: refer to the Python standard library.
intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'pandas': ('https://pandas.pydata.org/pandas-docs/stable/', None),
    'xarray': ('https://docs.xarray.dev/en/stable/', None),
}

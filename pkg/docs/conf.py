#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pyvdp documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

import pyvdp
import sphinx_rtd_theme

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.viewcode',
              'numpydoc',
              'sphinx.ext.autosummary',
              'sphinx.ext.intersphinx',
              'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pyvdp'
copyright = u"2026, pyvdp contributors"

# The short X.Y version.
version = pyvdp.__version__
# The full version, including alpha/beta/rc tags.
release = pyvdp.__version__

autoclass_content = 'both'
exclude_patterns = ['_build']
pygments_style = 'sphinx'
numpydoc_class_members_toctree = False

# -- Options for HTML output -------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = 'pyvdpdoc'

intersphinx_mapping = {
    'pandas': ('http://pandas.pydata.org/pandas-docs/stable/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None)}

# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'pyvdp',
     u'pyvdp Documentation',
     [u'pyvdp contributors'], 1)
]

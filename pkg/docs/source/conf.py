#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from datetime import datetime
now = datetime.now()

import hiddenqutrit

# -- General configuration ------------------------------------------------
extensions = [
    'sphinx.ext.autosummary',
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    ]

# autodoc options
autosummary_generate = True

# Napoleon settings
napoleon_use_rtype = False

# source suffix
source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = 'hiddenqutrit'
author = 'hiddenqutrit developers'
copyright = '{}, '.format(now.year) + author

# The short X.Y version.
version = hiddenqutrit.__version__
# The full version, including alpha/beta/rc tags.
release = version

# -- Options for HTML output ----------------------------------------------
html_theme = 'sphinx_rtd_theme'
html_show_sphinx = False
html_show_sourcelink = False
html_theme_options = {
    'collapse_navigation': False,
    'navigation_depth': 2,
    'prev_next_buttons_location': 'bottom',
    }

# Output file base name for HTML help builder.
htmlhelp_basename = 'hiddenqutritdoc'

# -*- coding: utf-8 -*-
#
# mixscope documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os

sys.path.append(os.path.abspath("../../"))

import mixscope

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.inheritance_diagram']

inheritance_node_attrs = dict(shape='rectangle', fontsize=10, height=0.40)

templates_path = ['.templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'mixscope'
copyright = u'2026, mixscope developers'

# The short X.Y version.
version = mixscope.__version__
# The full version, including alpha/beta/rc tags.
release = mixscope.__version__

exclude_patterns = ['build']

pygments_style = 'sphinx'
highlight_language = 'python'

# -- Options for HTML output ---------------------------------------------------

html_static_path = []

htmlhelp_basename = 'mixscopedoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'mixscope.tex', 'mixscope Documentation',
   'mixscope developers', 'manual'),
]

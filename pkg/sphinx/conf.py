# Configuration file for the Sphinx documentation builder.
#
# Build with
#
#     sphinx-build -b html sphinx docs/html
#
# from the repository root.

import os
import sys
sys.path.insert(0, os.path.abspath('./../'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc', 'sphinx.ext.autosummary', 'numpydoc',
    'sphinx.ext.mathjax'
]

numpydoc_class_members_toctree = False
autosummary_generate = True

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'tonalambiguity'
version = ''
release = ''

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
htmlhelp_basename = 'tonalambiguitydoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'tonalambiguity', 'tonalambiguity Documentation', [], 1)
]

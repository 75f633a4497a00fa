#!/usr/bin/env python3

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.mathjax']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'isg_amalgam'
copyright = '2026, isg_amalgam developers'
author = 'isg_amalgam developers'

version = '0.1.0'
release = '0.1.0'

language = 'en'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

html_theme = 'alabaster'

html_static_path = ['_static']

htmlhelp_basename = 'isg_amalgamdoc'

latex_elements = {}

latex_documents = [
    (master_doc, 'isg_amalgam.tex', 'isg\\_amalgam Documentation',
     'isg_amalgam developers', 'manual'),
]

man_pages = [
    (master_doc, 'isg_amalgam', 'isg_amalgam Documentation',
     [author], 1),
]

texinfo_documents = [
    (master_doc, 'isg_amalgam', 'isg_amalgam Documentation', author,
     'isg_amalgam', 'Calculators for amalgams of inverse semigroups.',
     'Miscellaneous'),
]

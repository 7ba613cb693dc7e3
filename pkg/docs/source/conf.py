# -*- coding: utf-8 -*-
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

import tempocover

project = u'tempocover'
copyright = u'tempocover contributors'
version = release = '.'.join(map(str, tempocover.__version__))

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx']

master_doc = 'index'
source_suffix = '.rst'
exclude_patterns = ['_build']

add_function_parentheses = True
pygments_style = 'friendly'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
    'django': ('https://docs.djangoproject.com/en/stable/', 'https://docs.djangoproject.com/en/stable/_objects/'),
}

html_title = 'tempocover'
html_domain_indices = False
html_use_index = False

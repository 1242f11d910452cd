import os
import sys
from datetime import datetime


sys.path.insert(0, os.path.abspath('..'))

from arbor.rank.version import get_version  # noqa: E402


# -- Project information -----------------------------------------------------

project = 'arbor-rank'
copyright = '{}, The arbor-rank developers'.format(datetime.now().year)
author = 'The arbor-rank developers'

release = get_version()


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosectionlabel',
    'sphinx_copybutton',
]

autosectionlabel_prefix_document = True
autodoc_member_order = 'bysource'

templates_path = ['_templates']

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_static_path = ['_static']

html_extra_path = ['manifest.schema.json', 'rank-report.schema.json', 'verdict.schema.json']

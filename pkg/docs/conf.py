# -*- coding: utf-8 -*-
#
# pyFormation documentation build configuration file.

import sys
import os

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath("../"))

import auvform  # noqa: E402

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
]

autoclass_content = "both"

source_suffix = ".rst"
master_doc = "index"

project = u"pyFormation"
copyright = u"2020, pyFormation contributors"
author = u"pyFormation contributors"

version = auvform.__version__
release = version

language = None
exclude_patterns = ["_build"]
pygments_style = "sphinx"
todo_include_todos = True

# on_rtd is whether we are on readthedocs.org
if os.environ.get("READTHEDOCS", "") != "True":
    try:
        import sphinx_rtd_theme

        html_theme = "sphinx_rtd_theme"
        html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
    except ImportError:
        html_theme = "classic"

htmlhelp_basename = "pyFormationdoc"

man_pages = [(master_doc, "pyformation", u"pyFormation Documentation", [author], 1)]

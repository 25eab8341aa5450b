# -*- coding: utf-8 -*-
#
# descentcodes documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import descentcodes

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.autosummary",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "descentcodes"
author = "descentcodes developers"

version = descentcodes.__version__
release = descentcodes.__version__

exclude_patterns = []
pygments_style = "sphinx"

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx-bluebrain-theme"
html_title = "descentcodes"
html_show_sourcelink = False
htmlhelp_basename = "descentcodesdoc"

# -- Options for manual page output ---------------------------------------

man_pages = [(master_doc, "descentcodes", "descentcodes Documentation", [author], 1)]

autodoc_default_options = {"members": True}
autosummary_generate = True

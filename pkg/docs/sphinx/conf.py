# Sphinx configuration for ialcbench.
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join("..", "..")))

project = "ialcbench"
copyright = "2020, ialcbench developers"
author = "ialcbench developers"
version = ""
release = "0.1.0"

extensions = [
    "m2r",
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
]
# numpy-style docstrings only
napoleon_google_docstring = False
napoleon_numpy_docstring = True

templates_path = ["_templates"]
source_suffix = [".rst", ".md"]
master_doc = "index"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]
htmlhelp_basename = "ialcbenchdoc"

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pandas": ("https://pandas.pydata.org/pandas-docs/stable/", None),
}

man_pages = [(master_doc, "ialcbench", "ialcbench Documentation", [author], 1)]

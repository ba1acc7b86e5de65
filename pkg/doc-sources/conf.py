"""
SPDX-FileCopyrightText: Siemens AG, 2020-2024 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""
# Sphinx configuration for guest_to_host.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
sys.path.append(os.path.dirname(__file__))
sys.path.insert(0, os.path.abspath('../src/'))


# -- Project information -----------------------------------------------------

project = 'guest_to_host'
copyright = '2020-2024, Siemens AG'
author = 'Gaurav Mishra <mishra.gaurav@siemens.com>'
release = '0.1.0'


# -- General configuration ---------------------------------------------------

extensions = ["sphinx.ext.autodoc",
              "sphinx.ext.viewcode",
              "sphinx.ext.mathjax",
              "sphinx.ext.autosummary"
              ]
source_suffix = [".rst"]
templates_path = ['_templates']
exclude_patterns = []

# reST docstrings use :param: / :return: / :raises: throughout
autodoc_member_order = 'bysource'


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'

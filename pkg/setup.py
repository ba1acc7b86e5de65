#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
SPDX-FileCopyrightText: Siemens AG, 2020-2022 Gaurav Mishra <mishra.gaurav@siemens.com>

SPDX-License-Identifier: MIT
"""

import os
from setuptools import setup, find_packages

__author__ = 'Siemens AG'


def read(fname):
    """
    Utility function to read the README file.

    Parameters:
        fname (string): Path to file to read

    Returns:
        content (string): Content of the file
    """
    return open(os.path.join(os.path.dirname(__file__), fname), encoding='UTF-8').read()


metadata = dict(
    name="guest_to_host",
    version="0.1.0",
    author="Gaurav Mishra",
    author_email="mishra.gaurav@siemens.com",
    description=("Embed bounded Ore-degree graphs into dense hosts"),
    license="MIT",
    long_description=read('README.md'),
    long_description_content_type='text/markdown',
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics"
    ],
    keywords=[
        "graph", "embedding", "ore-degree", "triangle-factor", "matching"
    ],
    python_requires=">=3.8",
    package_dir={
        "guest_to_host": "src/guest_to_host",
        "guest_to_host.graph": "src/guest_to_host/graph",
        "guest_to_host.handlers": "src/guest_to_host/handlers",
        "guest_to_host.runner": "src/guest_to_host/runner"
    },
    packages=find_packages("./src"),
    install_requires=[
        'psutil',
        'Click',
        'networkx',
        'numpy',
        'scipy'
    ],
    extras_require={
        'test': ['pytest']
    },
    entry_points = {
        'console_scripts': [
            'guest2host = guest_to_host.run:main'
        ]
    },
)

setup(**metadata)

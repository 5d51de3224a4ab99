# -*- coding: utf-8 -*-
"""
Created on 05.03.24

Based on: https://github.com/pypa/sampleproject

    Copyright (C) {2024}  {powertriad developers}

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""
# System modules
import re
from codecs import open
from os import path

from setuptools import setup, find_packages

# External modules

# Internal modules


here = path.abspath(path.dirname(__file__))

# The version is read from the package without importing it, because the
# package imports its numerical dependencies.
with open(path.join(here, 'powertriad', '__init__.py'), encoding='utf-8') as f:
    __version__ = re.search(r"__version__ = '([^']+)'", f.read()).group(1)

with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()


setup(
    name='powertriad',

    # Versions should comply with PEP440.  For a discussion on single-sourcing
    # the version across setup.py and the project code, see
    # https://packaging.python.org/en/latest/single_source_version.html
    version=__version__,

    description='Active, non-active and apparent power of arbitrary '
                'waveforms based on analytic signals',
    long_description=long_description,

    # Choose your license
    license='GPL3',

    # What does your project relate to?
    keywords='power theory analytic signal hilbert transform reactive power '
             'power meter signal processing',
    packages=find_packages(exclude=['tests', 'tests.*', 'docs']),
    python_requires='>=3.6',
    install_requires=['numpy', 'scipy', 'pandas', 'xarray', 'tqdm'],
    entry_points={
        'console_scripts': [
            'powertriad=powertriad.cli.main:main',
        ],
    },
)

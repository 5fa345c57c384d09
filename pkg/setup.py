#! /usr/bin/env python
# -*- coding: utf-8 -*-


# dompoly, exact domination polynomial computation and analysis

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.

# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

from setuptools import setup

setup(name="dompoly",
      description="dompoly, exact domination polynomials of graphs and "
                  "their unimodality",
      long_description="""
dompoly counts the dominating sets of a graph by size, exactly, and checks
the shape of the resulting domination polynomial: unimodality, modes,
log-concavity, and sufficient conditions for unimodality. It also ships a
reproduction harness: golden tables, seeded random graph censuses,
exhaustive sweeps of small labeled graphs and graph6 stream classification.
""",
      version="1.0",
      author="The dompoly developers",
      license="AGPL",
      packages = ['dompoly',
                  'dompoly.graphlib',
                  'dompoly.polylib',
                  'dompoly.domlib',
                  'dompoly.analysislib',
                  'dompoly.experimentlib' ],
      scripts = ['bin/dompoly' ],
      entry_points = {
          'console_scripts': ['dompoly = dompoly.cli:main'],
      },
      install_requires = ['numpy', 'networkx'],
      python_requires = '>=3.8',
      data_files = [
          ('share/doc/dompoly', ['dompoly.conf.dist'])
      ]
)

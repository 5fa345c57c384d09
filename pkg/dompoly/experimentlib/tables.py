# -*- coding: utf-8 -*-

# dompoly, exact domination polynomial computation and analysis
#
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

from dataclasses import dataclass
import logging

from dompoly import fixtures
from dompoly.domlib.enumeration import brute_force_profile
from dompoly.graphlib import families
from dompoly.polylib.coeffseq import CoeffSeq, format_poly
from dompoly.polylib.shape import analyze_shape

LOG = logging.getLogger('dompoly')


@dataclass(frozen=True)
class TableRow:
    n: int
    poly: CoeffSeq
    mode_max: int
    match: bool

    def as_dict(self):
        return {
            'n': self.n,
            'poly': self.poly,
            'text': format_poly(self.poly),
            'mode_max': self.mode_max,
            'match': self.match,
        }


@dataclass(frozen=True)
class TableReport:
    name: str
    title: str
    rows: tuple

    @property
    def match(self):
        return all(row.match for row in self.rows)

    def as_dict(self):
        return {
            'table': self.name,
            'title': self.title,
            'match': self.match,
            'rows': list(self.rows),
        }

    def csv_rows(self):
        rows = [('table', 'n', 'coefficients', 'mode_max', 'match')]
        for row in self.rows:
            rows.append((self.name, row.n, ' '.join(str(c) for c in row.poly),
                         row.mode_max, int(row.match)))
        return rows


class GoldenTable:
    name = 'abstract'
    title = 'The abstract interface of a golden table'
    family = None
    golden = ()

    def reproduce(self, config=None):
        """ Recompute every row by brute force and compare to the fixture

        Returns
        -------
        TableReport
        """
        rows = []
        for n, coeffs, mode in self.golden:
            g = families.generate(self.family(n))
            poly = brute_force_profile(g, config).d
            mode_max = analyze_shape(poly).mode_max
            match = poly == CoeffSeq(coeffs) and mode_max == mode
            if not match:
                LOG.error('%s row n=%d differs from the golden value: got %s '
                          'mode %d, expected %s mode %d'
                          % (self.name, n, list(poly), mode_max,
                             list(coeffs), mode))
            rows.append(TableRow(n, poly, mode_max, match))
        return TableReport(self.name, self.title, tuple(rows))


class PathTable(GoldenTable):
    name = 't1paths'
    title = 'Domination polynomials of paths'
    family = families.Path
    golden = fixtures.PATHS


class CycleTable(GoldenTable):
    name = 't1cycles'
    title = 'Domination polynomials of cycles'
    family = families.Cycle
    golden = fixtures.CYCLES


class LTable(GoldenTable):
    name = 't2L'
    title = 'Domination polynomials of the L graphs'
    family = families.LGraph
    golden = fixtures.L_GRAPHS


_TABLES = [
    PathTable,
    CycleTable,
    LTable,
    ]

def get_table_class_by_name(name):
    """Retrieves a golden table class, by name."""
    for table in _TABLES:
        if table.name == name:
            return table
    raise LookupError('The requested table %s was not found!' % name)

def get_tables():
    """Returns the list of available golden table classes."""
    return _TABLES

def reproduce_table(which, config=None):
    """Recompute the named golden table ('t1paths', 't1cycles' or 't2L')."""
    return get_table_class_by_name(which)().reproduce(config)

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

"""Rendering of reports as JSON or CSV text.

Any object with an as_dict() method is a report. JSON output keeps the key
order of as_dict(), writes coefficient sequences as arrays of decimal
strings and rationals as {"num": ..., "den": ...} with decimal strings, so
that identical reports always render to identical bytes. CSV output is
available for reports with a csv_rows() method.
"""

import csv
from fractions import Fraction
import io
import json
import logging

from dompoly.polylib.coeffseq import CoeffSeq

LOG = logging.getLogger('dompoly')

FORMATS = ['json', 'csv']


def jsonable(value):
    """Convert a report, or any value found in one, to plain JSON types."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return {'num': str(value.numerator), 'den': str(value.denominator)}
    if isinstance(value, CoeffSeq):
        return value.as_json()
    if hasattr(value, 'as_dict'):
        return jsonable(value.as_dict())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    raise TypeError("Cannot render %r as JSON" % (value,))

def supports_csv(report):
    if isinstance(report, (list, tuple)):
        return all(supports_csv(r) for r in report)
    return hasattr(report, 'csv_rows')

def render_report(report, fmt='json', meta=None):
    """ Render a report as text

    Parameters
    ----------
    report : object or list of objects
        Reports with as_dict(), or csv_rows() for CSV.
    fmt : str
        'json' or 'csv'.
    meta : dict, optional
        Run metadata, written under a "meta" key ahead of the JSON payload.
        Ignored for CSV.

    Returns
    -------
    str
        The rendered text, newline terminated.
    """
    if fmt == 'json':
        payload = jsonable(report)
        if meta is not None:
            payload = {'meta': jsonable(meta), 'result': payload}
        return json.dumps(payload, separators=(',', ':'),
                          ensure_ascii=True) + '\n'

    if fmt == 'csv':
        if not supports_csv(report):
            raise ValueError("%s has no CSV rendering"
                             % type(report).__name__)
        reports = report if isinstance(report, (list, tuple)) else [report]
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        for i, item in enumerate(reports):
            rows = item.csv_rows()
            # repeated headers are dropped when tables are concatenated
            writer.writerows(rows if i == 0 else rows[1:])
        return out.getvalue()

    raise ValueError("Unknown output format '%s', use one of %s"
                     % (fmt, ', '.join(FORMATS)))

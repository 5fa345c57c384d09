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

"""Shape of coefficient sequences.

All checks run over the full index range 0..d, leading zeros included.
Domination polynomials have contiguous support, so the leading zeros never
create spurious violations.
"""

from dataclasses import dataclass
from fractions import Fraction
import logging
import math

from dompoly.commons import PolynomialError

LOG = logging.getLogger('dompoly')


@dataclass(frozen=True)
class ShapeReport:
    unimodal: bool
    mode_set: tuple      # every index reaching the maximum
    mode_max: int        # largest of them, the mode reported in tables
    logconcave: bool
    lc_witness: object   # smallest i with a_i^2 < a_{i-1} a_{i+1}, or None
    tail_from: int       # smallest t with a_t >= a_{t+1} >= ... >= a_d

    def as_dict(self):
        return {
            'unimodal': self.unimodal,
            'mode_set': list(self.mode_set),
            'mode_max': self.mode_max,
            'logconcave': self.logconcave,
            'lc_witness': self.lc_witness,
            'tail_from': self.tail_from,
        }

    def csv_rows(self):
        rows = [('field', 'value')]
        for key, value in self.as_dict().items():
            if isinstance(value, list):
                value = ' '.join(str(v) for v in value)
            rows.append((key, '' if value is None else value))
        return rows


def _nonzero_coeffs(p):
    a = p.normalized().coeffs
    if not a:
        raise PolynomialError("The zero polynomial has no shape")
    return a

def analyze_shape(p):
    """ Unimodality, log-concavity, modes and tail of a polynomial

    Parameters
    ----------
    p : CoeffSeq
        A nonzero polynomial.

    Returns
    -------
    ShapeReport
    """
    a = _nonzero_coeffs(p)
    d = len(a) - 1

    # climb, then descend; unimodal iff the descent reaches the end
    i = 0
    while i < d and a[i] <= a[i + 1]:
        i += 1
    while i < d and a[i] >= a[i + 1]:
        i += 1
    unimodal = (i == d)

    peak = max(a)
    mode_set = tuple(j for j, c in enumerate(a) if c == peak)

    lc_witness = None
    for j in range(1, d):
        if a[j] * a[j] < a[j - 1] * a[j + 1]:
            lc_witness = j
            break

    t = d
    while t > 0 and a[t - 1] >= a[t]:
        t -= 1

    return ShapeReport(unimodal=unimodal,
                       mode_set=mode_set,
                       mode_max=mode_set[-1],
                       logconcave=lc_witness is None,
                       lc_witness=lc_witness,
                       tail_from=t)

def is_unimodal_bruteforce(p):
    """Reference unimodality test trying every candidate peak, O(d^2)."""
    a = _nonzero_coeffs(p)
    for k in range(len(a)):
        if all(a[j] <= a[j + 1] for j in range(k)) and \
           all(a[j] >= a[j + 1] for j in range(k, len(a) - 1)):
            return True
    return False

def avd_from_poly(p):
    """ Average size of a counted set

    Parameters
    ----------
    p : CoeffSeq
        A nonzero polynomial.

    Returns
    -------
    fractions.Fraction
        p'(1) / p(1) in lowest terms.
    """
    _nonzero_coeffs(p)
    return Fraction(p.derivative_at_one(), p.value_at_one())

def floor_ceil(q):
    """(floor(q), ceil(q)) of an exact rational."""
    return (math.floor(q), math.ceil(q))

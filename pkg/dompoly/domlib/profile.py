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

from fractions import Fraction
import logging
import math

from dompoly.commons import PolynomialError
from dompoly.polylib.coeffseq import CoeffSeq

LOG = logging.getLogger('dompoly')


class DominationProfile:
    """
    The domination polynomial of a graph of order n, as the counts d_i of
    dominating sets of each cardinality 0 <= i <= n, together with the
    domination number gamma and the exact ratios r_i = d_i / C(n, i).
    """
    __slots__ = ['_n', '_d']

    def __init__(self, n, d):
        """
        Args:
           n (int): graph order.
           d (CoeffSeq or sequence of int): the counts; entries beyond
              degree n must be zero.
        """
        if not isinstance(d, CoeffSeq):
            d = CoeffSeq(d)
        if d.degree > n:
            raise PolynomialError("Profile of order %d has a term of degree %d"
                                  % (n, d.degree))
        self._n = n
        self._d = CoeffSeq(d.padded(n + 1).coeffs[:n + 1])

    @property
    def n(self):
        return self._n

    @property
    def d(self):
        """Counts as a CoeffSeq with exactly n+1 entries."""
        return self._d

    @property
    def gamma(self):
        """Smallest i with d_i > 0, None for an all-zero profile."""
        for i, c in enumerate(self._d):
            if c:
                return i
        return None

    def ratios(self):
        return [Fraction(c, math.comb(self._n, i))
                for i, c in enumerate(self._d)]

    def __eq__(self, other):
        if not isinstance(other, DominationProfile):
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        return hash((self._n, self._d))

    def __repr__(self):
        return 'DominationProfile(n=%d, d=%s)' % (self._n, list(self._d))

    def as_dict(self):
        return {
            'n': self._n,
            'gamma': self.gamma,
            'd': self._d.as_json(),
            'r': [{'num': str(r.numerator), 'den': str(r.denominator)}
                  for r in self.ratios()],
        }

    def csv_rows(self):
        rows = [('i', 'd_i', 'r_i_num', 'r_i_den')]
        for i, (c, r) in enumerate(zip(self._d, self.ratios())):
            rows.append((i, c, r.numerator, r.denominator))
        return rows


def profile_to_poly(p):
    """The domination polynomial of a profile."""
    return p.d

def ratios(p):
    """Exact ratios r_i = d_i / C(n, i), in lowest terms, 0 <= i <= n."""
    return p.ratios()

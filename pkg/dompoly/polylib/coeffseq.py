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

import logging

from dompoly.commons import PolynomialError

LOG = logging.getLogger('dompoly')


class CoeffSeq:
    """
    A polynomial with non-negative integer coefficients, stored densely:
    coeffs[i] is the coefficient of x^i. Python integers keep every
    coefficient exact whatever its size.

    Trailing zeros may be carried by a representation, but equality and
    hashing use the normalized form.
    """
    __slots__ = ['_coeffs']

    def __init__(self, coeffs=()):
        coeffs = tuple(coeffs)
        for i, c in enumerate(coeffs):
            if isinstance(c, bool) or not isinstance(c, int):
                try:
                    c = int(c)
                except (TypeError, ValueError):
                    raise PolynomialError("Coefficient %d is not an integer: "
                                          "%r" % (i, c))
            if c < 0:
                raise PolynomialError("Coefficient %d is negative: %d"
                                      % (i, c))
        self._coeffs = tuple(int(c) for c in coeffs)

    @property
    def coeffs(self):
        return self._coeffs

    def coeff(self, i):
        """Coefficient of x^i, zero beyond the stored range."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def normalized(self):
        """The same polynomial without trailing zeros."""
        end = len(self._coeffs)
        while end > 0 and self._coeffs[end - 1] == 0:
            end -= 1
        return CoeffSeq(self._coeffs[:end])

    def is_zero(self):
        return not any(self._coeffs)

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.normalized()._coeffs) - 1

    def padded(self, length):
        """Representation with at least `length` entries."""
        return CoeffSeq(self._coeffs + (0,) * (length - len(self._coeffs)))

    def value_at_one(self):
        return sum(self._coeffs)

    def derivative_at_one(self):
        return sum(i * c for i, c in enumerate(self._coeffs))

    def __add__(self, other):
        return poly_add(self, other)

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __getitem__(self, i):
        return self._coeffs[i]

    def __eq__(self, other):
        if not isinstance(other, CoeffSeq):
            return NotImplemented
        return self.normalized()._coeffs == other.normalized()._coeffs

    def __hash__(self):
        return hash(self.normalized()._coeffs)

    def __repr__(self):
        return 'CoeffSeq(%s)' % (list(self._coeffs),)

    def __str__(self):
        return format_poly(self)

    def as_json(self):
        """JSON array of decimal strings, index = degree."""
        return [str(c) for c in self._coeffs]

    @staticmethod
    def from_json(values):
        return CoeffSeq(int(v) for v in values)

    def csv_rows(self):
        rows = [('degree', 'coefficient')]
        rows += [(i, c) for i, c in enumerate(self._coeffs)]
        return rows


def poly_add(p, q):
    """Coefficient-wise sum of two polynomials."""
    length = max(len(p), len(q))
    return CoeffSeq(p.coeff(i) + q.coeff(i) for i in range(length))

def shift_by_x(p):
    """Multiply by x."""
    return CoeffSeq((0,) + p.coeffs)

def monomial(i, c=1):
    """The polynomial c*x^i."""
    return CoeffSeq((0,) * i + (c,))

def format_poly(p):
    """ Human readable rendering, highest degree first

    e.g. CoeffSeq([0, 0, 4, 4, 1]) gives 'x^4+4x^3+4x^2'.
    """
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            terms.append('%d' % c)
            continue
        coeff = '' if c == 1 else '%d' % c
        power = 'x' if i == 1 else 'x^%d' % i
        terms.append(coeff + power)
    return '+'.join(terms) if terms else '0'

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

"""Exact bounds on the dominating fractions r_i.

Every comparison here is done on integers or Fractions, so that boundary
cases such as 2^delta = n^2 are decided exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
import logging
import math

from dompoly.commons import PreconditionError
from dompoly.graphlib import operations
from dompoly.polylib.shape import analyze_shape, avd_from_poly, floor_ceil

LOG = logging.getLogger('dompoly')


def degree_condition(n, delta):
    """delta >= 2 log2(n), decided exactly as 2^delta >= n^2."""
    return (1 << delta) >= n * n

def thm32_applicable(g):
    """ Whether the minimum degree is at least 2 log2(n)

    Decided as 2^delta >= n^2.

    Throws
    ------
    GraphError
        On the order 0 graph.
    """
    return degree_condition(g.n, operations.min_degree(g))

def r_lower_bound(n, delta, i):
    """ 1 - (n-i) ((n-i)/n)^delta

    Lower bound on r_i for any graph of order n and minimum degree delta.

    Returns
    -------
    fractions.Fraction
    """
    if n < 1:
        raise PreconditionError("Ratio bound needs n >= 1, got %d" % n)
    if not 0 <= i <= n:
        raise PreconditionError("Index %d outside of 0..%d" % (i, n))
    if delta < 0:
        raise PreconditionError("Negative minimum degree %d" % delta)
    return 1 - (n - i) * Fraction(n - i, n) ** delta

def g_threshold(n, k):
    """(n-k)/(k+1), the ratio a profile must reach at k for a falling tail."""
    if not 0 <= k <= n:
        raise PreconditionError("Index %d outside of 0..%d" % (k, n))
    return Fraction(n - k, k + 1)

def r_degree_bound(g, i):
    """ Union bound on r_i from the degrees of g

    An i-set misses N[v] in C(n - deg(v) - 1, i) ways, so
    r_i >= 1 - sum_v C(n - deg(v) - 1, i) / C(n, i). May be negative.

    Returns
    -------
    fractions.Fraction
    """
    n = g.n
    if not 0 <= i <= n:
        raise PreconditionError("Index %d outside of 0..%d" % (i, n))
    missed = sum(math.comb(n - d - 1, i) for d in g.degrees())
    return 1 - Fraction(missed, math.comb(n, i))

def chain_ratios(n, i, delta):
    """Factors (n-i-j)/(n-j), 0 <= j <= delta, of C(n-delta-1, i)/C(n, i)."""
    if n < 1 or not 0 <= delta <= n - 1:
        raise PreconditionError("Chain needs 0 <= delta < n, got n=%d, "
                                "delta=%d" % (n, delta))
    if not 0 <= i <= n - delta - 1:
        raise PreconditionError("Chain needs 0 <= i <= n-delta-1, got i=%d"
                                % i)
    return [Fraction(n - i - j, n - j) for j in range(delta + 1)]

def chain_ratios_nonincreasing(n, i, delta):
    """Whether (n-i)/n >= (n-i-1)/(n-1) >= ... >= (n-i-delta)/(n-delta)."""
    factors = chain_ratios(n, i, delta)
    return all(a >= b for a, b in zip(factors, factors[1:]))


@dataclass(frozen=True)
class AvdReport:
    mode_set: tuple
    avd: Fraction
    avd_floor: int
    avd_ceil: int
    agree: bool

    def as_dict(self):
        return {
            'mode_set': list(self.mode_set),
            'avd': self.avd,
            'avd_floor': self.avd_floor,
            'avd_ceil': self.avd_ceil,
            'agree': self.agree,
        }


def mode_vs_avd(p):
    """ Compare the modes of a profile with the average dominating set size

    Reports whether floor(avd) or ceil(avd) is a mode. No claim is made
    either way.
    """
    if p.n < 1:
        raise PreconditionError("Average domination size needs n >= 1")
    shape = analyze_shape(p.d)
    avd = avd_from_poly(p.d)
    low, high = floor_ceil(avd)
    return AvdReport(mode_set=shape.mode_set,
                     avd=avd,
                     avd_floor=low,
                     avd_ceil=high,
                     agree=low in shape.mode_set or high in shape.mode_set)

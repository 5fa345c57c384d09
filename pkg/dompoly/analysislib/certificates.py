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

"""Sufficient-condition certificates on domination profiles.

A certificate is `applicable` when the hypothesis of the underlying result
holds for the profile at hand, and `verified` when in addition its
conclusion was observed on the exact counts. An applicable but unverified
certificate of a proven result means the counts are wrong.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import logging
import math

from dompoly.commons import GraphError, PreconditionError, SoundnessError
from dompoly.graphlib import operations
from dompoly.polylib.shape import analyze_shape, avd_from_poly
from .bounds import g_threshold, thm32_applicable

LOG = logging.getLogger('dompoly')

LEMMA31 = 'Lemma31'
THM32 = 'Thm32'
PROP25 = 'Prop25'
TAIL_THREE_QUARTERS = 'TailThreeQuarters'
UNIVERSAL_VERTEX_RATIO = 'UniversalVertexRatio'
AVD_BOUNDS = 'AvdBounds'
THM32_AVD = 'Thm32Avd'

# kinds whose conclusion is a proven consequence of their hypothesis
PROVEN_KINDS = (LEMMA31, THM32, THM32_AVD, PROP25, UNIVERSAL_VERTEX_RATIO)


@dataclass(frozen=True)
class Certificate:
    kind: str
    applicable: bool
    verified: bool
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verified and not self.applicable:
            raise ValueError("A %s certificate cannot be verified without "
                             "being applicable" % self.kind)

    @property
    def holds(self):
        """False only for an applicable certificate whose conclusion failed."""
        return self.verified or not self.applicable

    def as_dict(self):
        return {
            'kind': self.kind,
            'applicable': self.applicable,
            'verified': self.verified,
            'details': self.details,
        }


def require_sound(certificate):
    """ Raise if a proven certificate is applicable but not verified

    Throws
    ------
    SoundnessError
    """
    if certificate.kind in PROVEN_KINDS and not certificate.holds:
        LOG.error('%s certificate failed: %s'
                  % (certificate.kind, certificate.details))
        raise SoundnessError("%s conclusion violated: %s"
                             % (certificate.kind, certificate.details))
    return certificate


def _first_increase(d, start):
    """Smallest i >= start with d[i] < d[i+1], or None."""
    for i in range(start, len(d) - 1):
        if d[i] < d[i + 1]:
            return i
    return None

def lemma31_certificate(p, k=None):
    """ Ratio certificate for a non-increasing tail

    If r_k >= (n-k)/(k+1) for some k >= n/2, the counts are non-increasing
    from k on. With k = ceil(n/2) and the non-decreasing lower half, this
    makes the profile unimodal with mode ceil(n/2).

    Parameters
    ----------
    p : DominationProfile
    k : int, optional
        Defaults to ceil(n/2).

    Returns
    -------
    Certificate

    Throws
    ------
    PreconditionError
        When k < n/2 or k > n.
    """
    n = p.n
    if k is None:
        k = (n + 1) // 2
    if 2 * k < n or k > n:
        raise PreconditionError("Ratio certificate needs n/2 <= k <= n, got "
                                "k=%d for n=%d" % (k, n))

    r_k = p.ratios()[k]
    threshold = g_threshold(n, k)
    applicable = r_k >= threshold
    violation = _first_increase(p.d, k)
    return Certificate(LEMMA31, applicable, applicable and violation is None,
                       {'k': k, 'r_k': r_k, 'threshold': threshold,
                        'violation': violation})

def thm32_certificate(g, p):
    """ Minimum degree certificate

    When 2^delta >= n^2, the profile is unimodal with ceil(n/2) among its
    modes and non-increasing from ceil(n/2) on.
    """
    if p.n != g.n:
        raise GraphError("Profile of order %d given for a graph of order %d"
                         % (p.n, g.n))
    applicable = thm32_applicable(g)
    half = (g.n + 1) // 2
    shape = analyze_shape(p.d)
    violation = _first_increase(p.d, half)
    verified = (applicable and shape.unimodal and half in shape.mode_set
                and violation is None)
    return Certificate(THM32, applicable, verified,
                       {'min_degree': operations.min_degree(g),
                        'half': half,
                        'mode_set': list(shape.mode_set),
                        'violation': violation})

def prop25_check(p):
    """d_i <= d_{i+1} for every 0 <= i < n/2."""
    violation = None
    for i in range(p.n):
        if 2 * i >= p.n:
            break
        if p.d[i] > p.d[i + 1]:
            violation = i
            break
    return Certificate(PROP25, True, violation is None,
                       {'violation': violation})

def tail_nonincreasing_check(p, isolated_free=True):
    """ Non-increasing counts from floor(3n/4) on

    Only claimed for graphs without isolated vertices; the caller states
    whether the graph has some.
    """
    start = (3 * p.n) // 4
    violation = _first_increase(p.d, start)
    return Certificate(TAIL_THREE_QUARTERS, isolated_free,
                       isolated_free and violation is None,
                       {'from': start, 'isolated_free': isolated_free,
                        'violation': violation})

def universal_vertex_ratio_check(g, p):
    """ Counts of a graph with a universal vertex

    Every i-set containing a universal vertex dominates, so
    d_i >= C(n-1, i-1) and r_i >= i/n for 1 <= i <= n.

    Throws
    ------
    GraphError
        When g has no universal vertex.
    """
    universal = g.universal_vertices()
    if not universal:
        raise GraphError("%r has no universal vertex" % (g,))
    if p.n != g.n:
        raise GraphError("Profile of order %d given for a graph of order %d"
                         % (p.n, g.n))

    n = p.n
    ratios = p.ratios()
    violation = None
    for i in range(1, n + 1):
        if p.d[i] < math.comb(n - 1, i - 1) or ratios[i] < Fraction(i, n):
            violation = i
            break
    return Certificate(UNIVERSAL_VERTEX_RATIO, True, violation is None,
                       {'universal': universal, 'violation': violation})

def avd_bounds_check(p):
    """n/2 <= avd <= (n+1)/2, reported as a certificate."""
    avd = avd_from_poly(p.d)
    low = Fraction(p.n, 2)
    high = Fraction(p.n + 1, 2)
    return Certificate(AVD_BOUNDS, True, low <= avd <= high,
                       {'avd': avd, 'low': low, 'high': high})

def thm32_avd_check(g, p):
    """ n/2 <= avd <= (n+1)/2 for a graph with 2^delta >= n^2

    Applicable under the minimum degree condition only, where the bound is
    proven; avd_bounds_check() reports it for any graph.
    """
    if p.n != g.n:
        raise GraphError("Profile of order %d given for a graph of order %d"
                         % (p.n, g.n))
    bounds = avd_bounds_check(p)
    applicable = thm32_applicable(g)
    return Certificate(THM32_AVD, applicable, applicable and bounds.verified,
                       bounds.details)

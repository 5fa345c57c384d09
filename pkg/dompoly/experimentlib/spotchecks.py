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

"""Spot checks of families known to be unimodal or log-concave.

Random base graphs are G(m, 1/2) samples whose seeds derive from a master
seed as in a census; sample i has order 1 + i mod max_order.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import logging

import dompoly
from dompoly.analysislib import certificates
from dompoly.commons import PreconditionError
from dompoly.domlib.enumeration import brute_force_profile
from dompoly.graphlib import families, operations
from dompoly.graphlib.graph import complete_graph
from dompoly.graphlib.graph6 import encode_graph6
from dompoly.polylib.shape import analyze_shape
from .census import sample_seeds

LOG = logging.getLogger('dompoly')

HALF = Fraction(1, 2)

# crown graphs H of the coronas G o H
CROWNS = {
    'K1': lambda: complete_graph(1),
    'K2': lambda: complete_graph(2),
    'P3': lambda: families.generate(families.Path(3)),
}


@dataclass
class SpotCheckReport:
    name: str
    examined: int = 0
    violation_count: int = 0
    violations: list = field(default_factory=list)
    observations: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            'name': self.name,
            'examined': self.examined,
            'violation_count': self.violation_count,
            'violations': list(self.violations),
            'observations': self.observations,
        }


def _random_bases(samples, max_order, seed):
    if samples < 1 or max_order < 1:
        raise PreconditionError("Spot checks need samples >= 1 and "
                                "max_order >= 1")
    for i, sample_seed in enumerate(sample_seeds(seed, samples)):
        order = 1 + i % max_order
        yield families.generate(families.ErdosRenyi(order, HALF, sample_seed))

def corona_spot_check(samples=50, max_order=6, seed=0, crowns=('K1', 'K2'),
                      config=None):
    """ Log-concavity of coronas G o H for seeded random G

    Parameters
    ----------
    crowns : sequence of str
        Keys of CROWNS.

    Returns
    -------
    SpotCheckReport
        One examined graph per (sample, crown) pair.
    """
    for crown in crowns:
        if crown not in CROWNS:
            raise LookupError('The requested crown %s was not found!' % crown)
    if config is None:
        config = dompoly.Configuration()
    report = SpotCheckReport('corona')
    for base in _random_bases(samples, max_order, seed):
        for crown in crowns:
            g = operations.corona(base, CROWNS[crown]())
            shape = analyze_shape(brute_force_profile(g, config).d)
            report.examined += 1
            if not shape.logconcave:
                report.violation_count += 1
                report.violations.append({'base': encode_graph6(base),
                                          'crown': crown,
                                          'lc_witness': shape.lc_witness})
    LOG.info('Corona spot check: %d violations out of %d'
             % (report.violation_count, report.examined))
    return report

def family_spot_check(max_k=8, config=None):
    """Unimodality of friendship graphs and universal-matching graphs."""
    if config is None:
        config = dompoly.Configuration()
    report = SpotCheckReport('friendship')
    for k in range(1, max_k + 1):
        for spec in (families.Friendship(k), families.UniversalMatching(k)):
            shape = analyze_shape(
                brute_force_profile(families.generate(spec), config).d)
            report.examined += 1
            if not shape.unimodal:
                report.violation_count += 1
                report.violations.append({'family': spec.name, 'k': k})
    return report

def universal_vertex_survey(samples=30, max_order=9, seed=0, config=None):
    """ Graphs join(K_1, G) for seeded random G of order < max_order

    The bound r_i >= i/n is proven and enforced with a SoundnessError. Whether
    the largest mode is ceil(n/2) or ceil(n/2)+1 is only observed: graphs
    where it is not are listed as violations without failing.
    """
    if config is None:
        config = dompoly.Configuration()
    if max_order < 2:
        raise PreconditionError("Universal vertex survey needs max_order >= 2")
    report = SpotCheckReport('universal-vertex')
    in_range = 0
    for base in _random_bases(samples, max_order - 1, seed):
        g = operations.join(complete_graph(1), base)
        profile = brute_force_profile(g, config)
        certificates.require_sound(
            certificates.universal_vertex_ratio_check(g, profile))

        half = (g.n + 1) // 2
        mode_max = analyze_shape(profile.d).mode_max
        report.examined += 1
        if mode_max in (half, half + 1):
            in_range += 1
        else:
            report.violation_count += 1
            report.violations.append({'graph6': encode_graph6(g),
                                      'mode_max': mode_max, 'half': half})
    report.observations['mode_in_range'] = in_range
    return report

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

"""Named checks run on a graph and its profile.

Each check returns a CheckResult: a JSON-ready payload, and an `ok` flag
which is False when the check found a violation of the property it tests.
"""

from dataclasses import dataclass
import logging

from dompoly.graphlib import operations
from dompoly.polylib.shape import analyze_shape
from . import bounds, certificates

LOG = logging.getLogger('dompoly')


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    payload: object

    def as_dict(self):
        return {'name': self.name, 'ok': self.ok, 'result': self.payload}


class Check:
    name = 'abstract'
    description = 'The abstract interface of a profile check'

    def run(self, g, profile, k=None):
        raise NotImplementedError


class ShapeCheck(Check):
    name = 'shape'
    description = 'Unimodality, log-concavity, modes and tail'

    def run(self, g, profile, k=None):
        return CheckResult(self.name, True, analyze_shape(profile.d))


class UnimodalCheck(Check):
    name = 'unimodal'
    description = 'Unimodality and mode set'

    def run(self, g, profile, k=None):
        shape = analyze_shape(profile.d)
        return CheckResult(self.name, shape.unimodal,
                           {'unimodal': shape.unimodal,
                            'mode_set': list(shape.mode_set),
                            'mode_max': shape.mode_max})


class LogConcaveCheck(Check):
    name = 'logconcave'
    description = 'Log-concavity and the smallest failing index'

    def run(self, g, profile, k=None):
        shape = analyze_shape(profile.d)
        return CheckResult(self.name, shape.logconcave,
                           {'logconcave': shape.logconcave,
                            'lc_witness': shape.lc_witness})


class AvdCheck(Check):
    name = 'avd'
    description = 'Average dominating set size against the modes'

    def run(self, g, profile, k=None):
        report = bounds.mode_vs_avd(profile).as_dict()
        report['bounds'] = certificates.avd_bounds_check(profile)
        return CheckResult(self.name, True, report)


class Prop25Check(Check):
    name = 'prop25'
    description = 'Non-decreasing counts below n/2'

    def run(self, g, profile, k=None):
        cert = certificates.prop25_check(profile)
        return CheckResult(self.name, cert.holds, cert)


class Lemma31Check(Check):
    name = 'lemma31'
    description = 'Ratio certificate for a non-increasing tail from k'

    def run(self, g, profile, k=None):
        cert = certificates.lemma31_certificate(profile, k)
        return CheckResult(self.name, cert.holds, cert)


class Thm32Check(Check):
    name = 'thm32'
    description = 'Minimum degree certificate 2^delta >= n^2'

    def run(self, g, profile, k=None):
        cert = certificates.thm32_certificate(g, profile)
        return CheckResult(self.name, cert.holds, cert)


class BoundsCheck(Check):
    name = 'bounds'
    description = 'Exact ratios against the degree and minimum degree bounds'

    def run(self, g, profile, k=None):
        delta = operations.min_degree(g)
        rows = []
        ok = True
        for i, r in enumerate(profile.ratios()):
            by_degree = bounds.r_degree_bound(g, i)
            by_delta = bounds.r_lower_bound(g.n, delta, i)
            ok = ok and r >= by_degree >= by_delta
            rows.append({'i': i, 'r': r, 'degree_bound': by_degree,
                         'min_degree_bound': by_delta})
        return CheckResult(self.name, ok, {'min_degree': delta,
                                           'ratios': rows})


class TailCheck(Check):
    name = 'tail'
    description = 'Non-increasing counts from floor(3n/4) (empirical)'

    def run(self, g, profile, k=None):
        cert = certificates.tail_nonincreasing_check(
            profile, isolated_free=not g.isolated_vertices())
        return CheckResult(self.name, cert.holds, cert)


class UniversalCheck(Check):
    name = 'universal'
    description = 'Ratio bound r_i >= i/n of graphs with a universal vertex'

    def run(self, g, profile, k=None):
        if not g.universal_vertices():
            cert = certificates.Certificate(
                certificates.UNIVERSAL_VERTEX_RATIO, False, False,
                {'universal': []})
        else:
            cert = certificates.universal_vertex_ratio_check(g, profile)
        return CheckResult(self.name, cert.holds, cert)


_CHECKS = [
    ShapeCheck,
    UnimodalCheck,
    LogConcaveCheck,
    AvdCheck,
    Prop25Check,
    Lemma31Check,
    Thm32Check,
    BoundsCheck,
    TailCheck,
    UniversalCheck,
    ]

DEFAULT_CHECKS = ['shape', 'prop25', 'lemma31', 'thm32', 'tail', 'avd']

def get_check_class_by_name(name):
    """Retrieves a check class, by name."""
    for check in _CHECKS:
        if check.name == name:
            return check
    raise LookupError('The requested check %s was not found!' % name)

def get_checks():
    """Returns the list of available check classes."""
    return _CHECKS

def run_checks(g, profile, names=None, k=None):
    """ Run the named checks, in the given order

    Returns
    -------
    list of CheckResult
    """
    if names is None:
        names = DEFAULT_CHECKS
    results = []
    for name in names:
        check = get_check_class_by_name(name)()
        LOG.debug('Running check %s' % name)
        results.append(check.run(g, profile, k))
    return results

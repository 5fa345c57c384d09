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

"""Computation engines, selected by method name.

Every engine computes the domination profile of a graph family member;
only the brute-force engine accepts every family.
"""

import logging

from dompoly.graphlib import families
from .enumeration import brute_force_profile
from .multipartite import multipartite_profile
from .recurrence import family_by_recurrence

LOG = logging.getLogger('dompoly')


class Engine:
    name = 'abstract'
    description = 'The abstract interface of a computation engine'

    def supports(self, spec):
        """Whether this engine can handle the given FamilySpec."""
        raise NotImplementedError

    def profile(self, spec, config=None):
        raise NotImplementedError


class BruteForceEngine(Engine):
    name = 'brute'
    description = 'Exhaustive enumeration of vertex subsets'

    def supports(self, spec):
        return True

    def profile(self, spec, config=None):
        return brute_force_profile(families.generate(spec), config)


class RecurrenceEngine(Engine):
    name = 'recurrence'
    description = 'Three-term contraction recurrence (paths, cycles, L graphs)'

    _KINDS = {
        families.Path: 'path',
        families.Cycle: 'cycle',
        families.LGraph: 'L',
    }

    def supports(self, spec):
        return type(spec) in self._KINDS

    def profile(self, spec, config=None):
        spec.validate()
        return family_by_recurrence(self._KINDS[type(spec)], spec.n)


class ClosedFormEngine(Engine):
    name = 'closed'
    description = 'Closed form for complete multipartite graphs'

    def supports(self, spec):
        return isinstance(spec, (families.CompleteMultipartite,
                                 families.Complete))

    def profile(self, spec, config=None):
        spec.validate()
        if isinstance(spec, families.Complete):
            return multipartite_profile([1] * spec.n)
        return multipartite_profile(spec.parts)


_ENGINES = [
    BruteForceEngine,
    RecurrenceEngine,
    ClosedFormEngine,
    ]

def get_engine_class_by_name(name):
    """Retrieves an engine class, by name."""
    for engine in _ENGINES:
        if engine.name == name:
            return engine
    raise LookupError('The requested engine %s was not found!' % name)

def get_engines():
    """Returns the list of available engine classes."""
    return _ENGINES

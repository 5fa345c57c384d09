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

from dompoly.commons import PreconditionError
from dompoly.polylib.shape import analyze_shape

LOG = logging.getLogger('dompoly')


def mode_chain(seq):
    """ Feasible modes along a recurrence sequence

    Entry i is the interval (lo, hi) of the modes m_i for which modes
    m_1 <= ... <= m_i can be picked, one per entry, with each step at most
    one. Ties are handled by allowing any index of the mode set.

    Parameters
    ----------
    seq : RecurrenceSeq

    Returns
    -------
    list
        One (lo, hi) tuple per entry, None from the first non-unimodal entry
        or empty interval on.
    """
    chain = []
    previous = None
    for index, poly in zip(seq.indices(), seq.polys):
        shape = analyze_shape(poly)
        if not shape.unimodal or (chain and previous is None):
            LOG.debug('Mode chain broken at index %d' % index)
            chain.append(None)
            previous = None
            continue

        lo, hi = shape.mode_set[0], shape.mode_set[-1]
        if previous is not None:
            lo = max(lo, previous[0])
            hi = min(hi, previous[1] + 1)
        previous = (lo, hi) if lo <= hi else None
        chain.append(previous)
    return chain

def mode_progression_check(seq):
    """ Unimodal entries with modes advancing by 0 or 1

    Throws
    ------
    PreconditionError
        With fewer than four entries.
    """
    if len(seq) < 4:
        raise PreconditionError("Mode progression needs at least 4 entries, "
                                "got %d" % len(seq))
    return all(interval is not None for interval in mode_chain(seq))

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
import math

from dompoly.commons import GraphError, MAX_ORDER
from dompoly.polylib.coeffseq import CoeffSeq
from .profile import DominationProfile

LOG = logging.getLogger('dompoly')


def multipartite_profile(parts):
    """ Domination profile of K_{n_1,...,n_k} in closed form

    A subset of a complete multipartite graph dominates iff it contains an
    edge or is a whole part. The independent subsets are exactly the subsets
    of a single part, so

        d_i = C(n, i) - sum_j C(n_j, i) + #{j : n_j = i}     (i >= 1)

    and d_0 = 0.

    Parameters
    ----------
    parts : sequence of int
        Positive part sizes, summing to at most 64.

    Returns
    -------
    DominationProfile
    """
    parts = list(parts)
    if not parts:
        raise GraphError("Complete multipartite graph needs at least one part")
    for size in parts:
        if not isinstance(size, int) or size < 1:
            raise GraphError("Invalid part size %r" % (size,))
    n = sum(parts)
    if n > MAX_ORDER:
        raise GraphError("Complete multipartite graph of order %d, at most %d "
                         "vertices are supported" % (n, MAX_ORDER))

    d = [0]
    for i in range(1, n + 1):
        d.append(math.comb(n, i)
                 - sum(math.comb(size, i) for size in parts)
                 + sum(1 for size in parts if size == i))
    return DominationProfile(n, CoeffSeq(d))

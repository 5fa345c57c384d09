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

"""Contraction recurrence along simple 3-paths.

If u, v, w are degree-2 vertices inducing a path of G, then
D(G) = x (D(G/u) + D(G/u/v) + D(G/u/v/w)). Paths, cycles and L graphs all
shrink to the previous member of their family under such a contraction,
which gives f_n = x (f_{n-1} + f_{n-2} + f_{n-3}) for each of them.
"""

from dataclasses import dataclass
import logging

from dompoly import fixtures
from dompoly.commons import GraphError, PreconditionError
from dompoly.graphlib import operations
from dompoly.polylib.coeffseq import CoeffSeq, poly_add, shift_by_x
from .enumeration import brute_force_profile
from .profile import DominationProfile

LOG = logging.getLogger('dompoly')


@dataclass(frozen=True)
class RecurrenceSeq:
    """
    Consecutive polynomials f_start, f_start+1, ... of a family obeying the
    three-term recurrence.
    """
    start_index: int
    polys: tuple

    def __post_init__(self):
        object.__setattr__(self, 'polys', tuple(self.polys))

    def __len__(self):
        return len(self.polys)

    def indices(self):
        return range(self.start_index, self.start_index + len(self.polys))

    def poly_at(self, index):
        pos = index - self.start_index
        if not 0 <= pos < len(self.polys):
            raise IndexError("Index %d outside of %d..%d"
                             % (index, self.start_index,
                                self.start_index + len(self.polys) - 1))
        return self.polys[pos]


def recurrence_extend(base, steps, start_index=1):
    """ Extend a family by f_n = x (f_{n-1} + f_{n-2} + f_{n-3})

    Parameters
    ----------
    base : sequence of CoeffSeq
        At least three consecutive members, in index order; only the last
        three seed the extension.
    steps : int
        Number of members to append.
    start_index : int
        Index of base[0].

    Returns
    -------
    RecurrenceSeq
        The base followed by the `steps` new members.

    Throws
    ------
    PreconditionError
        With fewer than three base members, or a negative step count.
    """
    polys = [p if isinstance(p, CoeffSeq) else CoeffSeq(p) for p in base]
    if len(polys) < 3:
        raise PreconditionError("The recurrence needs three base polynomials, "
                                "got %d" % len(polys))
    if steps < 0:
        raise PreconditionError("Negative number of steps: %d" % steps)

    for _ in range(steps):
        polys.append(shift_by_x(poly_add(polys[-1],
                                         poly_add(polys[-2], polys[-3]))))
    return RecurrenceSeq(start_index, polys)


def _golden_base(rows):
    return RecurrenceSeq(rows[0][0],
                         [CoeffSeq(coeffs) for _, coeffs, _ in rows[:3]])

def path_bases():
    """D(P_1), D(P_2), D(P_3)."""
    return _golden_base(fixtures.PATHS)

def cycle_bases():
    """D(C_3), D(C_4), D(C_5)."""
    return _golden_base(fixtures.CYCLES)

def l_bases():
    """D(L_4), D(L_5), D(L_6)."""
    return _golden_base(fixtures.L_GRAPHS)

_BASES = {
    'path': path_bases,
    'cycle': cycle_bases,
    'L': l_bases,
}

def recurrence_kinds():
    return list(_BASES)

def family_by_recurrence(kind, n):
    """ Domination profile of P_n, C_n or L_n from the recurrence

    Parameters
    ----------
    kind : str
        'path', 'cycle' or 'L'.
    n : int
        Order, at least the index of the first base member.

    Returns
    -------
    DominationProfile
    """
    try:
        base = _BASES[kind]()
    except KeyError:
        raise LookupError('No recurrence is known for family %s' % kind)
    if n < base.start_index:
        raise PreconditionError("%s recurrence starts at order %d, got %d"
                                % (kind, base.start_index, n))

    last = base.start_index + len(base) - 1
    seq = recurrence_extend(base.polys, max(0, n - last), base.start_index)
    LOG.debug('%s_%d from the recurrence' % (kind, n))
    return DominationProfile(n, seq.poly_at(n))


def simple3path_identity_check(g, u, v, w, config=None):
    """ Check D(G) = x (D(G/u) + D(G/u/v) + D(G/u/v/w)) by brute force

    The labels of v and w are followed through each deletion-shift, so that
    the second and third contractions remove the intended vertices.

    Throws
    ------
    GraphError
        When (u, v, w) is not a simple 3-path of g.
    """
    if not operations.is_simple_3path(g, u, v, w):
        raise GraphError("(%d, %d, %d) is not a simple 3-path" % (u, v, w))

    g1 = operations.contract(g, u)
    v1 = operations.shifted_label(v, u)
    w1 = operations.shifted_label(w, u)

    g2 = operations.contract(g1, v1)
    w2 = operations.shifted_label(w1, v1)

    g3 = operations.contract(g2, w2)
    LOG.debug('Contracted %d, %d, %d of %r' % (u, v, w, g))

    parts = [brute_force_profile(h, config).d for h in (g1, g2, g3)]
    expected = shift_by_x(poly_add(parts[0], poly_add(parts[1], parts[2])))
    return brute_force_profile(g, config).d == expected

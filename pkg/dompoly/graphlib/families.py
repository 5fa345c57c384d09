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

"""Graph family generators.

Every family is a small immutable parameter object (a FamilySpec) with a
registry name, so that the command line and the experiments can refer to
families by name. generate() validates the parameters and builds the graph.
"""

from dataclasses import dataclass
from fractions import Fraction
import logging

import numpy as np

from dompoly.commons import GraphError, MAX_ORDER
from .graph import Graph, from_edge_list, empty_graph, complete_graph
from . import operations

LOG = logging.getLogger('dompoly')

# Name recorded in census reports; every G(n,p) sample comes from it.
RNG_NAME = 'numpy.random.PCG64'

_TWO_64 = 1 << 64


def _check_range(name, value, low, high=MAX_ORDER):
    if not isinstance(value, int) or not low <= value <= high:
        raise GraphError("%s must be an integer in %d..%d, got %r"
                         % (name, low, high, value))

def parse_probability(value):
    """ Exact edge probability

    Accepts a Fraction, an int, or a string 'NUM/DEN' (or a decimal
    string). Floats are rejected, all probabilities are exact rationals.
    """
    if isinstance(value, float):
        raise GraphError("Probability %r must be given exactly, e.g. '1/2'"
                         % value)
    try:
        p = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise GraphError("Invalid probability '%s'" % (value,))
    if not 0 <= p <= 1:
        raise GraphError("Probability %s outside of [0, 1]" % p)
    return p


class FamilySpec:
    """Base class of all family parameter objects."""
    name = 'abstract'
    description = 'The abstract interface of a graph family'

    def validate(self):
        pass

    def build(self):
        raise NotImplementedError

    def order(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Path(FamilySpec):
    n: int
    name = 'path'
    description = 'Path P_n'

    def validate(self):
        _check_range('Path order', self.n, 1)

    def order(self):
        return self.n

    def build(self):
        return from_edge_list(self.n, [(i, i + 1) for i in range(self.n - 1)])


@dataclass(frozen=True)
class Cycle(FamilySpec):
    n: int
    name = 'cycle'
    description = 'Cycle C_n, n >= 3'

    def validate(self):
        _check_range('Cycle order', self.n, 3)

    def order(self):
        return self.n

    def build(self):
        return from_edge_list(self.n,
                              [(i, (i + 1) % self.n) for i in range(self.n)])


@dataclass(frozen=True)
class LGraph(FamilySpec):
    """
    Path on n-2 vertices with a K_2 joined to one of its leaves: vertices 0
    and 1 form the K_2, both adjacent to vertex 2, which starts the path
    2-3-...-(n-1). L_4 is a triangle with a pendant vertex.
    """
    n: int
    name = 'L'
    description = 'Triangle with a pendant path, n vertices in total'

    def validate(self):
        _check_range('L graph order', self.n, 4)

    def order(self):
        return self.n

    def build(self):
        edges = [(0, 1), (0, 2), (1, 2)]
        edges += [(i, i + 1) for i in range(2, self.n - 1)]
        return from_edge_list(self.n, edges)


@dataclass(frozen=True)
class CompleteMultipartite(FamilySpec):
    parts: tuple
    name = 'multipartite'
    description = 'Complete multipartite graph K_{n_1,...,n_k}'

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(self.parts))

    def validate(self):
        if not self.parts:
            raise GraphError("Complete multipartite graph needs at least "
                             "one part")
        for size in self.parts:
            _check_range('Part size', size, 1)
        _check_range('Complete multipartite order', sum(self.parts), 1)

    def order(self):
        return sum(self.parts)

    def build(self):
        n = sum(self.parts)
        full = (1 << n) - 1
        adj = []
        start = 0
        for size in self.parts:
            part_mask = ((1 << size) - 1) << start
            adj += [full & ~part_mask] * size
            start += size
        return Graph(n, adj)


@dataclass(frozen=True)
class Complete(FamilySpec):
    n: int
    name = 'complete'
    description = 'Complete graph K_n'

    def validate(self):
        _check_range('Complete graph order', self.n, 1)

    def order(self):
        return self.n

    def build(self):
        return complete_graph(self.n)


@dataclass(frozen=True)
class Empty(FamilySpec):
    n: int
    name = 'empty'
    description = 'Edgeless graph on n vertices'

    def validate(self):
        _check_range('Empty graph order', self.n, 0)

    def order(self):
        return self.n

    def build(self):
        return empty_graph(self.n)


@dataclass(frozen=True)
class MatchingUnion(FamilySpec):
    k: int
    name = 'matching'
    description = 'k disjoint edges kK_2'

    def validate(self):
        _check_range('Matching size', self.k, 1, MAX_ORDER // 2)

    def order(self):
        return 2 * self.k

    def build(self):
        return from_edge_list(2 * self.k,
                              [(2 * i, 2 * i + 1) for i in range(self.k)])


@dataclass(frozen=True)
class Friendship(FamilySpec):
    k: int
    name = 'friendship'
    description = 'Friendship graph F_k = K_1 joined to kK_2'

    def validate(self):
        _check_range('Friendship size', self.k, 1, (MAX_ORDER - 1) // 2)

    def order(self):
        return 2 * self.k + 1

    def build(self):
        matching = MatchingUnion(self.k).build()
        return operations.join(complete_graph(1), matching)


@dataclass(frozen=True)
class UniversalMatching(FamilySpec):
    k: int
    name = 'universal-matching'
    description = 'Universal vertex added to kK_2 plus an isolated vertex'

    def validate(self):
        _check_range('Matching size', self.k, 1, (MAX_ORDER - 2) // 2)

    def order(self):
        return 2 * self.k + 2

    def build(self):
        base = operations.disjoint_union(MatchingUnion(self.k).build(),
                                         complete_graph(1))
        return operations.join(complete_graph(1), base)


@dataclass(frozen=True)
class Corona(FamilySpec):
    """Corona P_n o K_m of a path with complete graphs."""
    n: int
    m: int
    name = 'corona'
    description = 'Corona of the path P_n with K_m'

    def validate(self):
        _check_range('Corona base order', self.n, 1)
        _check_range('Corona crown order', self.m, 1)
        if self.order() > MAX_ORDER:
            raise GraphError("Corona would have %d vertices, at most %d are "
                             "supported" % (self.order(), MAX_ORDER))

    def order(self):
        return self.n * (1 + self.m)

    def build(self):
        return operations.corona(Path(self.n).build(), complete_graph(self.m))


@dataclass(frozen=True)
class ErdosRenyi(FamilySpec):
    """
    G(n,p) random graph.

    The pairs (0,1), (0,2), ..., (n-2,n-1) are visited in lexicographic order
    and each consumes one raw 64-bit output u of a PCG64 generator seeded
    with `seed`; the pair is an edge iff u < p * 2^64, compared exactly.
    """
    n: int
    p: Fraction
    seed: int
    name = 'gnp'
    description = 'Erdos-Renyi random graph G(n,p), seeded'

    def __post_init__(self):
        object.__setattr__(self, 'p', parse_probability(self.p))

    def validate(self):
        _check_range('Random graph order', self.n, 0)
        if not isinstance(self.seed, int) or not 0 <= self.seed < _TWO_64:
            raise GraphError("Seed must be a 64-bit unsigned integer, got %r"
                             % (self.seed,))

    def order(self):
        return self.n

    def build(self):
        pairs = [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]
        if not pairs:
            return empty_graph(self.n)
        draws = np.random.PCG64(self.seed).random_raw(len(pairs))
        threshold_num = self.p.numerator * _TWO_64
        den = self.p.denominator
        edges = [pair for pair, u in zip(pairs, draws.tolist())
                 if u * den < threshold_num]
        return from_edge_list(self.n, edges)


_FAMILIES = [
    Path,
    Cycle,
    LGraph,
    CompleteMultipartite,
    Complete,
    Empty,
    MatchingUnion,
    Friendship,
    UniversalMatching,
    Corona,
    ErdosRenyi,
    ]

def get_family_class_by_name(name):
    """Retrieves a family class, by name."""
    for family in _FAMILIES:
        if family.name == name:
            return family
    raise LookupError('The requested graph family %s was not found!' % name)

def get_families():
    """Returns the list of available family classes."""
    return _FAMILIES

def generate(spec):
    """ Build the graph described by a family spec

    Parameters
    ----------
    spec : FamilySpec

    Returns
    -------
    Graph

    Throws
    ------
    GraphError
        When the parameters are out of range.
    """
    spec.validate()
    LOG.debug('Generating %s' % (spec,))
    return spec.build()

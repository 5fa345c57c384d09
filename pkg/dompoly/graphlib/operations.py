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

from dompoly.commons import GraphError, MAX_ORDER
from .graph import Graph, mask_to_list

LOG = logging.getLogger('dompoly')


def _check_order(n, what):
    if n > MAX_ORDER:
        raise GraphError("%s would have %d vertices, at most %d are supported"
                         % (what, n, MAX_ORDER))

def disjoint_union(g, h):
    """Disjoint union; the vertices of h follow those of g."""
    _check_order(g.n + h.n, "Disjoint union")
    shift = g.n
    adj = list(g.adj) + [mask << shift for mask in h.adj]
    return Graph(g.n + h.n, adj)

def join(g, h):
    """ Join of two graphs

    Disjoint union of g and h plus every edge between a vertex of g and a
    vertex of h. The vertices of h are numbered after those of g, so that
    join(K_1, h) puts the new universal vertex at 0.

    Parameters
    ----------
    g, h : Graph

    Returns
    -------
    Graph
    """
    _check_order(g.n + h.n, "Join")
    shift = g.n
    g_all = g.full_mask
    h_all = h.full_mask << shift
    adj = [mask | h_all for mask in g.adj]
    adj += [(mask << shift) | g_all for mask in h.adj]
    return Graph(g.n + h.n, adj)

def corona(g, h):
    """ Corona product of g and h

    One copy of h per vertex v of g, with v adjacent to every vertex of its
    copy. The vertices of g keep their numbers; the copy attached to v
    occupies n(g) + v*n(h) .. n(g) + (v+1)*n(h) - 1.

    Parameters
    ----------
    g, h : Graph

    Returns
    -------
    Graph
    """
    total = g.n * (1 + h.n)
    _check_order(total, "Corona")

    adj = list(g.adj) + [0] * (g.n * h.n)
    for v in range(g.n):
        offset = g.n + v * h.n
        copy_mask = h.full_mask << offset
        adj[v] |= copy_mask
        for x in range(h.n):
            adj[offset + x] = (h.adj[x] << offset) | (1 << v)
    return Graph(total, adj)

def contract(g, u):
    """ Contract a vertex

    Make every pair of neighbours of u adjacent, then delete u. Vertices
    above u shift down by one, all others keep their number.

    Parameters
    ----------
    g : Graph
    u : int
        Vertex to contract.

    Returns
    -------
    Graph
        The graph G/u with n(g) - 1 vertices.
    """
    if not 0 <= u < g.n:
        raise GraphError("Vertex %d out of range 0..%d" % (u, g.n - 1))

    nbrs = g.adj[u]
    adj = []
    for v in range(g.n):
        if v == u:
            continue
        mask = g.adj[v]
        if nbrs >> v & 1:
            mask |= nbrs & ~(1 << v)
        mask &= ~(1 << u)
        adj.append(_drop_bit(mask, u))
    return Graph(g.n - 1, adj)

def _drop_bit(mask, u):
    low = mask & ((1 << u) - 1)
    return low | ((mask >> (u + 1)) << u)

def shifted_label(v, removed):
    """New number of vertex v once vertex `removed` has been deleted."""
    if v == removed:
        raise GraphError("Vertex %d is the removed vertex" % v)
    return v - 1 if v > removed else v

def min_degree(g):
    """ Minimum degree of g

    Throws
    ------
    GraphError
        On the empty (order 0) graph.
    """
    if g.n == 0:
        raise GraphError("The empty graph has no minimum degree")
    return min(g.degrees())

def is_simple_3path(g, u, v, w):
    """Whether u, v, w are degree-2 vertices inducing the path u-v-w."""
    for x in (u, v, w):
        if not 0 <= x < g.n:
            return False
    if len({u, v, w}) != 3:
        return False
    if any(g.degree(x) != 2 for x in (u, v, w)):
        return False
    return g.has_edge(u, v) and g.has_edge(v, w) and not g.has_edge(u, w)

def detect_simple_3path(g):
    """ Find a simple 3-path

    Returns the lexicographically smallest triple (u, v, w) of degree-2
    vertices inducing the path u-v-w, or None.
    """
    deg2 = [x for x in range(g.n) if g.degree(x) == 2]
    deg2_mask = 0
    for x in deg2:
        deg2_mask |= 1 << x

    for u in deg2:
        for v in mask_to_list(g.adj[u] & deg2_mask):
            for w in mask_to_list(g.adj[v] & deg2_mask):
                if w != u and not g.has_edge(u, w):
                    return (u, v, w)
    return None

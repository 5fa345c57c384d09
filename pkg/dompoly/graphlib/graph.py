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

LOG = logging.getLogger('dompoly')


class Graph:
    """
    A finite simple undirected graph on the vertices 0..n-1.

    Each vertex owns an integer bitmask of its neighbours, so that a vertex
    set is an integer as well and set operations are word operations. Closed
    neighbourhoods N[v] are computed once at construction.

    Graphs are immutable: every operation of this library returns a new
    Graph, and instances can be shared freely between worker processes.
    """
    __slots__ = ['_n', '_adj', '_closed']

    def __init__(self, n, adj):
        """
        Args:
           n (int): number of vertices, 0 <= n <= 64.
           adj (sequence of int): neighbour bitmask of each vertex. Must be
              symmetric and irreflexive.
        """
        if not 0 <= n <= MAX_ORDER:
            raise GraphError("Graph order %d outside of 0..%d"
                             % (n, MAX_ORDER))
        if len(adj) != n:
            raise GraphError("Expected %d adjacency masks, got %d"
                             % (n, len(adj)))

        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full:
                raise GraphError("Vertex %d has a neighbour out of range" % v)
            if mask >> v & 1:
                raise GraphError("Self-loop at vertex %d" % v)
            rest = mask
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise GraphError("Edge %d-%d is not symmetric" % (v, u))
                rest ^= low

        self._n = n
        self._adj = tuple(adj)
        self._closed = tuple(mask | (1 << v) for v, mask in enumerate(adj))

    @property
    def n(self):
        return self._n

    @property
    def adj(self):
        """Tuple of neighbour bitmasks, one per vertex."""
        return self._adj

    @property
    def closed(self):
        """Tuple of closed neighbourhood bitmasks N[v]."""
        return self._closed

    @property
    def full_mask(self):
        return (1 << self._n) - 1

    def neighbors(self, v):
        """Sorted list of the neighbours of v."""
        return mask_to_list(self._adj[v])

    def degree(self, v):
        return bin(self._adj[v]).count('1')

    def degrees(self):
        return [self.degree(v) for v in range(self._n)]

    def degree_sequence(self):
        """Degrees sorted in non-increasing order."""
        return sorted(self.degrees(), reverse=True)

    def has_edge(self, u, v):
        return bool(self._adj[u] >> v & 1)

    def edges(self):
        """List of edges (u, v) with u < v, in lexicographic order."""
        result = []
        for u in range(self._n):
            for v in mask_to_list(self._adj[u] >> (u + 1)):
                result.append((u, u + 1 + v))
        return result

    def edge_count(self):
        return sum(self.degrees()) // 2

    def universal_vertices(self):
        """Vertices adjacent to every other vertex."""
        return [v for v in range(self._n) if self.degree(v) == self._n - 1]

    def isolated_vertices(self):
        return [v for v in range(self._n) if self._adj[v] == 0]

    def is_dominating(self, mask):
        """Whether the vertex set given as bitmask dominates the graph."""
        dominated = 0
        rest = mask
        while rest:
            low = rest & -rest
            dominated |= self._closed[low.bit_length() - 1]
            rest ^= low
        return dominated == self.full_mask

    def to_networkx(self):
        """Returns this graph as a networkx.Graph on nodes 0..n-1."""
        import networkx as nx
        result = nx.Graph()
        result.add_nodes_from(range(self._n))
        result.add_edges_from(self.edges())
        return result

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return 'Graph(n=%d, edges=%s)' % (self._n, self.edges())

    def __reduce__(self):
        return (Graph, (self._n, self._adj))


def mask_to_list(mask):
    """Sorted list of the positions of the set bits of mask."""
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return result

def from_edge_list(n, edges):
    """ Build a graph from a vertex count and a list of edges

    Duplicate edges, in either orientation, are collapsed.

    Parameters
    ----------
    n : int
        Number of vertices, 0 <= n <= 64.
    edges : iterable of (int, int)
        Vertex pairs, 0-based.

    Returns
    -------
    Graph
        The graph with exactly the given edges.

    Throws
    ------
    GraphError
        On out-of-range vertices and self-loops.
    """
    if not 0 <= n <= MAX_ORDER:
        raise GraphError("Graph order %d outside of 0..%d" % (n, MAX_ORDER))
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError("Edge %d-%d has a vertex out of range 0..%d"
                             % (u, v, n - 1))
        if u == v:
            raise GraphError("Self-loop at vertex %d" % u)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)

def empty_graph(n):
    """The edgeless graph on n vertices."""
    return Graph(n, [0] * n)

def complete_graph(n):
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])

def parse_edge_list_text(text):
    """ Parse the edge list text format

    The first non-blank line holds "n m", followed by m lines "u v" of
    0-based vertices. Lines starting with '#' are comments.

    Parameters
    ----------
    text : str
        The whole file content.

    Returns
    -------
    Graph
    """
    lines = [l.strip() for l in text.splitlines()]
    lines = [l for l in lines if l and not l.startswith('#')]
    if not lines:
        raise GraphError("Empty edge list input")

    try:
        n, m = [int(tok) for tok in lines[0].split()]
    except ValueError:
        raise GraphError("Invalid edge list header '%s', expected 'n m'"
                         % lines[0])

    body = lines[1:]
    if len(body) != m:
        raise GraphError("Edge list header announces %d edges, found %d"
                         % (m, len(body)))

    edges = []
    for line in body:
        try:
            u, v = [int(tok) for tok in line.split()]
        except ValueError:
            raise GraphError("Invalid edge line '%s', expected 'u v'" % line)
        edges.append((u, v))

    return from_edge_list(n, edges)

def format_edge_list_text(g):
    """Inverse of parse_edge_list_text()."""
    edges = g.edges()
    lines = ['%d %d' % (g.n, len(edges))]
    lines += ['%d %d' % e for e in edges]
    return '\n'.join(lines) + '\n'

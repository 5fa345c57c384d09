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

"""graph6 short form codec.

A graph6 line is one header byte 63+n followed by the upper triangle of the
adjacency matrix, column by column ((0,1), (0,2), (1,2), (0,3), ...), packed
six bits per byte, each byte offset by 63. Only the short form (n <= 62) is
supported.
"""

import logging

from dompoly.commons import Graph6Error, MAX_GRAPH6_ORDER
from .graph import Graph

LOG = logging.getLogger('dompoly')

GRAPH6_HEADER = '>>graph6<<'

_OFFSET = 63


def _body_length(n):
    return (n * (n - 1) // 2 + 5) // 6

def strip_graph6_header(text):
    """Remove whitespace and an optional '>>graph6<<' header."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    return s

def parse_graph6(text):
    """ Decode one graph6 line

    Parameters
    ----------
    text : str
        One ASCII graph6 line, optionally prefixed with '>>graph6<<'.

    Returns
    -------
    Graph
        The decoded graph.

    Throws
    ------
    Graph6Error
        On an empty line, a header byte out of range, a long form header
        (n > 62), characters outside the graph6 alphabet, or a truncated or
        overlong bit body.
    """
    s = strip_graph6_header(text)
    if not s:
        raise Graph6Error("Empty graph6 line")

    header = ord(s[0])
    if header == 126:
        raise Graph6Error("graph6 long form (n > %d) is not supported"
                          % MAX_GRAPH6_ORDER)
    if not _OFFSET <= header <= _OFFSET + MAX_GRAPH6_ORDER:
        raise Graph6Error("Malformed graph6 header byte %r" % s[0])
    n = header - _OFFSET

    body = s[1:]
    expected = _body_length(n)
    if len(body) < expected:
        raise Graph6Error("Truncated graph6 body: %d bytes, expected %d"
                          % (len(body), expected))
    if len(body) > expected:
        raise Graph6Error("Overlong graph6 body: %d bytes, expected %d"
                          % (len(body), expected))

    bits = []
    for c in body:
        value = ord(c) - _OFFSET
        if not 0 <= value < 64:
            raise Graph6Error("Invalid graph6 character %r" % c)
        for shift in range(5, -1, -1):
            bits.append(value >> shift & 1)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1

    return Graph(n, adj)

def encode_graph6(g):
    """ Encode a graph as a graph6 line (without header or newline)

    Parameters
    ----------
    g : Graph
        Graph with at most 62 vertices.

    Returns
    -------
    str
        The graph6 encoding.
    """
    n = g.n
    if n > MAX_GRAPH6_ORDER:
        raise Graph6Error("graph6 long form (n > %d) is not supported"
                          % MAX_GRAPH6_ORDER)

    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)

    chars = [chr(_OFFSET + n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        chars.append(chr(_OFFSET + value))
    return ''.join(chars)

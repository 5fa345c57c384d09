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

"""Golden reference data.

Known domination polynomials of small paths, cycles and L graphs, with the
mode reported for each, and the smallest graph whose domination polynomial
is not log-concave. Coefficients are listed by increasing degree.
"""

# (n, coefficients, mode)
PATHS = [
    (1, (0, 1), 1),
    (2, (0, 2, 1), 1),
    (3, (0, 1, 3, 1), 2),
    (4, (0, 0, 4, 4, 1), 3),
]

CYCLES = [
    (3, (0, 3, 3, 1), 2),
    (4, (0, 0, 6, 4, 1), 2),
    (5, (0, 0, 5, 10, 5, 1), 3),
    (6, (0, 0, 3, 14, 15, 6, 1), 4),
]

L_GRAPHS = [
    (4, (0, 1, 5, 4, 1), 2),
    (5, (0, 0, 6, 9, 5, 1), 3),
    (6, (0, 0, 4, 14, 14, 6, 1), 4),
    (7, (0, 0, 1, 15, 27, 20, 7, 1), 4),
]

# Order 9, the only non log-concave graph of its order. Edges as drawn with
# vertices numbered 1..9.
NON_LOGCONCAVE_9_EDGES_1BASED = [
    (1, 2), (2, 3), (2, 4), (3, 5), (3, 7), (4, 6),
    (4, 8), (5, 6), (5, 9), (6, 9), (7, 9), (8, 9),
]

NON_LOGCONCAVE_9_EDGES = [(u - 1, v - 1)
                          for u, v in NON_LOGCONCAVE_9_EDGES_1BASED]

NON_LOGCONCAVE_9_COEFFS = (0, 0, 1, 7, 50, 89, 75, 35, 9, 1)

NON_LOGCONCAVE_9_GRAPH6 = 'HiGX?_N'


def non_logconcave_9():
    """The order 9 graph with a non log-concave domination polynomial."""
    from dompoly.graphlib.graph import from_edge_list
    return from_edge_list(9, NON_LOGCONCAVE_9_EDGES)

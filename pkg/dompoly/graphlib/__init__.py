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

from .graph import Graph, from_edge_list, empty_graph, complete_graph, \
    parse_edge_list_text, format_edge_list_text, mask_to_list
from .graph6 import parse_graph6, encode_graph6
from .operations import join, corona, contract, disjoint_union, \
    min_degree, detect_simple_3path, is_simple_3path
from .families import generate

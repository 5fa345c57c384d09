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

# Largest graph order we can represent with one machine word per vertex.
MAX_ORDER = 64

# graph6 short form only.
MAX_GRAPH6_ORDER = 62


class DomPolyError(Exception):
    """Base class of all errors raised by dompoly."""
    pass

class GraphError(DomPolyError, ValueError):
    """This exception is raised when a graph can not be built or does not
    have the structure an operation requires (vertex out of range, self
    loop, order overflow, bad family parameters...)."""
    pass

class Graph6Error(GraphError):
    """This exception is raised when a graph6 line can not be decoded."""
    pass

class PolynomialError(DomPolyError, ValueError):
    """This exception is raised for invalid coefficient sequences, or when
    an analysis needs a nonzero polynomial and gets the zero one."""
    pass

class PreconditionError(DomPolyError, ValueError):
    """This exception is raised when an operation is called outside of its
    documented parameter range."""
    pass

class EnumerationCapError(DomPolyError):
    """This exception is raised when a graph is too large for exhaustive
    subset enumeration under the configured cap. It signals an intractable
    request, not a bug."""
    pass

class SoundnessError(DomPolyError, AssertionError):
    """This exception is raised when a computed result contradicts a proven
    statement (e.g. the lower-half monotonicity of a domination profile). It
    always means an implementation bug."""
    pass

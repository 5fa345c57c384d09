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

from .profile import DominationProfile, profile_to_poly, ratios
from .enumeration import brute_force_profile, enumerate_dominating_sets, \
    naive_profile, dependent_profile
from .recurrence import RecurrenceSeq, recurrence_extend, path_bases, \
    cycle_bases, l_bases, family_by_recurrence, simple3path_identity_check
from .multipartite import multipartite_profile

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

from .bounds import degree_condition, thm32_applicable, r_lower_bound, \
    g_threshold, r_degree_bound, chain_ratios_nonincreasing, mode_vs_avd, \
    AvdReport
from .certificates import Certificate, lemma31_certificate, \
    thm32_certificate, prop25_check, tail_nonincreasing_check, \
    universal_vertex_ratio_check, avd_bounds_check, thm32_avd_check, \
    require_sound
from .progression import mode_chain, mode_progression_check

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

"""dompoly.

dompoly computes domination polynomials of finite simple graphs exactly and
analyzes their coefficient sequences. It is architectured around a handful of
libraries:

    * graphlib      graphs as per-vertex bitmasks, graph6 / edge list I/O,
                    family generators and the join / corona / contraction
                    operations
    * polylib       exact coefficient sequences and their shape (unimodality,
                    log-concavity, modes, average dominating set size)
    * domlib        the three engines computing D(G,x): subset enumeration,
                    the three-term recurrence, the complete multipartite
                    closed form
    * analysislib   sufficient-condition certificates for unimodality
    * experimentlib golden tables, seeded random census, exhaustive sweeps
                    and graph6 stream classification

How to use dompoly?
-------------------

Build or read a graph, compute its profile and analyze it:

    from dompoly.graphlib import families
    from dompoly.domlib import enumeration
    from dompoly.polylib import shape

    g = families.generate(families.Cycle(6))
    profile = enumeration.brute_force_profile(g)
    report = shape.analyze_shape(profile.d)

Long running operations accept a Configuration object, which carries the
enumeration cap and the number of worker processes. Configuration files in
INI format can be loaded with load_configuration():

    config = dompoly.load_configuration(['~/.dompoly.conf'])
    profile = enumeration.brute_force_profile(g, config)
"""

__author__ = 'The dompoly developers'
__version__ = '1.0'

import configparser
import logging
import os

LOG = logging.getLogger('dompoly')


class Configuration:
    """
    The Configuration class encapsulates the tunables of the enumeration
    engine and of the experiment harness. All values have sensible defaults,
    no configuration file or environment is required.
    """

    DEFAULT_CAP = 26

    DEFAULT_INNER_BITS = 16

    DEFAULT_OFFENDER_CAP = 100

    DEFAULT_PROGRESS_EVERY = 10000

    def __init__(self):
        self.cap            = Configuration.DEFAULT_CAP # max brute-force order
        self.threads        = os.cpu_count() or 1 # worker processes
        self.inner_bits     = Configuration.DEFAULT_INNER_BITS

        self.offender_cap   = Configuration.DEFAULT_OFFENDER_CAP
        self.progress_every = Configuration.DEFAULT_PROGRESS_EVERY

        # order 8 exhaustive sweeps take hours
        self.long_run       = False

    def __repr__(self):
        return ('Configuration(cap=%d, threads=%d, inner_bits=%d, '
                'offender_cap=%d)' % (self.cap, self.threads,
                                      self.inner_bits, self.offender_cap))


# (section, option, attribute, minimum value)
_CONFIG_OPTIONS = [
    ('enumeration', 'cap',            'cap',            1),
    ('enumeration', 'threads',        'threads',        1),
    ('enumeration', 'inner_bits',     'inner_bits',     1),
    ('experiments', 'offender_cap',   'offender_cap',   0),
    ('experiments', 'progress_every', 'progress_every', 1),
]

def load_configuration(config_files=None, required=False):
    """ Build a Configuration from INI files

    Missing files are silently skipped unless `required` is set, invalid
    values are ignored with a warning and keep their default.

    Parameters
    ----------
    config_files : str or list of str, optional
        Path, or list of paths, to configuration files.
    required : bool, optional
        Raise IOError when none of the given files could be read.

    Returns
    -------
    Configuration
        The configuration with file values applied over the defaults.
    """
    config = Configuration()

    if config_files is None:
        config_files = ['/etc/dompoly.conf', '~/.dompoly.conf']
    elif not isinstance(config_files, list):
        config_files = [config_files]

    config_files = [os.path.expanduser(f) for f in config_files]
    LOG.debug('Reading dompoly configuration from %s...' %
              ', '.join(config_files))

    parser = configparser.ConfigParser()
    read = parser.read(config_files, encoding='utf-8')
    if required and not read:
        raise IOError('None of the configuration files could be read!')

    for section, option, attribute, minimum in _CONFIG_OPTIONS:
        if not parser.has_option(section, option):
            continue
        value = parser.get(section, option)
        try:
            value = int(value)
            if value < minimum:
                raise ValueError
        except ValueError:
            LOG.warning("Ignoring invalid value '%s' for %s.%s"
                        % (value, section, option))
            continue
        setattr(config, attribute, value)

    return config

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

"""Seeded census of random graphs.

Sample i of a census is the G(n,p) graph seeded with the first 64-bit word
of the i-th child of numpy.random.SeedSequence(seed). Samples are therefore
independent of one another, and the report does not depend on how they are
spread over worker processes.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import copy
import logging
import multiprocessing

import numpy as np

import dompoly
from dompoly.analysislib import certificates
from dompoly.commons import PreconditionError, GraphError
from dompoly.domlib.enumeration import brute_force_profile
from dompoly.graphlib import families
from dompoly.graphlib.graph6 import encode_graph6
from dompoly.polylib.shape import analyze_shape

LOG = logging.getLogger('dompoly')

SEED_DERIVATION = 'numpy.random.SeedSequence(seed).spawn(samples)'


def sample_seeds(seed, count):
    """64-bit seeds of `count` independent samples derived from `seed`."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, np.uint64)[0]) for child in children]


@dataclass
class CensusReport:
    n: int
    p: Fraction
    samples: int
    seed: int
    generator: str = families.RNG_NAME
    seed_derivation: str = SEED_DERIVATION
    total: int = 0
    degree_qualified: int = 0
    unimodal: int = 0
    mode_at_half: int = 0
    logconcave: int = 0
    offender_count: int = 0
    offenders: list = field(default_factory=list)

    def as_dict(self):
        return {
            'n': self.n,
            'p': self.p,
            'samples': self.samples,
            'seed': self.seed,
            'generator': self.generator,
            'seed_derivation': self.seed_derivation,
            'counts': {
                'total': self.total,
                'degree_qualified': self.degree_qualified,
                'unimodal': self.unimodal,
                'mode_at_half': self.mode_at_half,
                'logconcave': self.logconcave,
            },
            'offender_count': self.offender_count,
            'offenders': list(self.offenders),
        }

    def csv_rows(self):
        rows = [('field', 'value')]
        for key in ('n', 'samples', 'seed', 'total', 'degree_qualified',
                    'unimodal', 'mode_at_half', 'logconcave',
                    'offender_count'):
            rows.append((key, getattr(self, key)))
        rows.insert(2, ('p', '%d/%d' % (self.p.numerator, self.p.denominator)))
        return rows


def _classify_sample(args):
    """ Classify one census sample

    Top-level so that it can run in a worker process. Raises SoundnessError
    when a proven property fails.

    Returns
    -------
    dict
        Flags of the sample, and its graph6 encoding when not unimodal.
    """
    n, p, sample_seed, config = args
    g = families.generate(families.ErdosRenyi(n, p, sample_seed))
    profile = brute_force_profile(g, config, threads=1)
    shape = analyze_shape(profile.d)

    certificates.require_sound(certificates.prop25_check(profile))
    qualified = certificates.thm32_certificate(g, profile)
    certificates.require_sound(qualified)
    if qualified.applicable:
        certificates.require_sound(
            certificates.thm32_avd_check(g, profile))

    return {
        'degree_qualified': qualified.applicable,
        'unimodal': shape.unimodal,
        'mode_at_half': (n + 1) // 2 in shape.mode_set,
        'logconcave': shape.logconcave,
        'graph6': None if shape.unimodal else encode_graph6(g),
    }

def validate_census(n, p, samples, seed, config):
    """ Check census parameters, before any sample is drawn

    Returns
    -------
    fractions.Fraction
        The exact edge probability.

    Throws
    ------
    PreconditionError
    """
    try:
        p = families.parse_probability(p)
    except GraphError as e:
        raise PreconditionError(str(e))
    if not 0 < p < 1:
        raise PreconditionError("Census probability must lie strictly between "
                                "0 and 1, got %s" % p)
    if not isinstance(n, int) or not 1 <= n <= config.cap:
        raise PreconditionError("Census order must be in 1..%d, got %r"
                                % (config.cap, n))
    if not isinstance(samples, int) or samples < 1:
        raise PreconditionError("Census needs at least one sample, got %r"
                                % (samples,))
    if not isinstance(seed, int) or not 0 <= seed < (1 << 64):
        raise PreconditionError("Seed must be a 64-bit unsigned integer, "
                                "got %r" % (seed,))
    return p

def census(n, p, samples, seed, config=None, threads=None):
    """ Classify `samples` seeded G(n,p) graphs by brute force

    Every sample is checked for non-decreasing counts below n/2; samples
    with 2^delta >= n^2 must be unimodal with ceil(n/2) among the modes,
    and have n/2 <= avd <= (n+1)/2. Any failure aborts the census with a
    SoundnessError.

    Parameters
    ----------
    n : int
        Order, at most config.cap.
    p : Fraction or str
        Edge probability, 0 < p < 1.
    samples : int
    seed : int
        Master seed.
    config : Configuration, optional
    threads : int, optional
        Worker processes, overrides config.threads.

    Returns
    -------
    CensusReport
        Deterministic given (n, p, samples, seed).
    """
    if config is None:
        config = dompoly.Configuration()
    if threads is None:
        threads = config.threads
    p = validate_census(n, p, samples, seed, config)

    LOG.info('Census of %d G(%d, %s) samples, seed %d'
             % (samples, n, p, seed))
    report = CensusReport(n=n, p=p, samples=samples, seed=seed)

    worker_config = copy.copy(config)
    worker_config.threads = 1
    work = [(n, p, s, worker_config) for s in sample_seeds(seed, samples)]

    if threads > 1 and samples > 1:
        chunksize = max(1, samples // (4 * threads))
        with multiprocessing.Pool(processes=min(threads, samples)) as pool:
            _collect(report, pool.imap(_classify_sample, work, chunksize),
                     config)
    else:
        _collect(report, map(_classify_sample, work), config)

    LOG.info('Census done: %d qualified, %d unimodal out of %d'
             % (report.degree_qualified, report.unimodal, report.total))
    return report

def _collect(report, results, config):
    """Merge sample classifications, in sample order."""
    for result in results:
        report.total += 1
        for key in ('degree_qualified', 'unimodal', 'mode_at_half',
                    'logconcave'):
            if result[key]:
                setattr(report, key, getattr(report, key) + 1)
        if result['graph6'] is not None:
            report.offender_count += 1
            if len(report.offenders) < config.offender_cap:
                report.offenders.append(result['graph6'])
        if report.total % config.progress_every == 0:
            LOG.info('%d samples classified' % report.total)

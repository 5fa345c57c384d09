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

"""Sweeps over sets of graphs.

exhaustive_labeled() visits every labeled graph of a given order: graph
number b has the edge of the j-th pair (in lexicographic order) iff bit j of
b is set. stream_classify() reads graph6 lines from any iterable, e.g. the
output of an external isomorph-free generator. Lines may be str or bytes.
"""

from dataclasses import dataclass, field
import copy
import logging
import multiprocessing

import dompoly
from dompoly.analysislib import certificates
from dompoly.commons import DomPolyError, Graph6Error, PreconditionError
from dompoly.domlib.enumeration import brute_force_profile
from dompoly.graphlib.graph import Graph
from dompoly.graphlib.graph6 import encode_graph6, parse_graph6
from dompoly.polylib.shape import analyze_shape

LOG = logging.getLogger('dompoly')

# largest order swept without the long-run flag, and with it
MAX_SWEEP_ORDER = 7
MAX_LONG_SWEEP_ORDER = 8

# graphs per unit of work handed to a worker process
SWEEP_CHUNK = 4096


class Predicate:
    name = 'abstract'
    description = 'The abstract interface of a sweep predicate'

    def holds(self, g, profile):
        raise NotImplementedError


class UnimodalPredicate(Predicate):
    name = 'unimodal'
    description = 'The domination polynomial is unimodal'

    def holds(self, g, profile):
        return analyze_shape(profile.d).unimodal


class LogConcavePredicate(Predicate):
    name = 'logconcave'
    description = 'The domination polynomial is log-concave'

    def holds(self, g, profile):
        return analyze_shape(profile.d).logconcave


class Prop25Predicate(Predicate):
    name = 'prop25'
    description = 'Counts are non-decreasing below n/2'

    def holds(self, g, profile):
        return certificates.prop25_check(profile).verified


class TailPredicate(Predicate):
    name = 'tail'
    description = 'Counts are non-increasing from floor(3n/4), no isolated ' \
                  'vertex'

    def holds(self, g, profile):
        return certificates.tail_nonincreasing_check(
            profile, isolated_free=not g.isolated_vertices()).holds


_PREDICATES = [
    UnimodalPredicate,
    LogConcavePredicate,
    Prop25Predicate,
    TailPredicate,
    ]

def get_predicate_class_by_name(name):
    """Retrieves a sweep predicate class, by name."""
    for predicate in _PREDICATES:
        if predicate.name == name:
            return predicate
    raise LookupError('The requested predicate %s was not found!' % name)

def get_predicates():
    """Returns the list of available sweep predicate classes."""
    return _PREDICATES


@dataclass
class SweepReport:
    universe: str
    predicate: str
    n: object = None        # order of an exhaustive sweep, None for streams
    examined: int = 0
    violation_count: int = 0
    violations: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def add_violation(self, witness, cap):
        self.violation_count += 1
        if len(self.violations) < cap:
            self.violations.append(witness)

    def as_dict(self):
        return {
            'universe': self.universe,
            'n': self.n,
            'predicate': self.predicate,
            'examined': self.examined,
            'violation_count': self.violation_count,
            'violations': list(self.violations),
            'errors': list(self.errors),
        }

    def csv_rows(self):
        rows = [('kind', 'position', 'graph6', 'detail')]
        for v in self.violations:
            position = v['line'] if 'line' in v else v['index']
            rows.append(('violation', position, v['graph6'], ''))
        for e in self.errors:
            rows.append(('error', e['line'], '', e['error']))
        return rows


def labeled_graph(n, index):
    """The labeled graph of order n numbered `index` in a sweep."""
    adj = [0] * n
    bit = 0
    for u in range(n):
        for v in range(u + 1, n):
            if index >> bit & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bit += 1
    return Graph(n, adj)

def _sweep_chunk(args):
    """Violating graph numbers in [start, stop). Runs in worker processes."""
    n, predicate_name, start, stop, config = args
    predicate = get_predicate_class_by_name(predicate_name)()
    failing = []
    for index in range(start, stop):
        g = labeled_graph(n, index)
        if not predicate.holds(g, brute_force_profile(g, config, threads=1)):
            failing.append(index)
    return stop - start, failing

def validate_sweep(n, predicate, long_run):
    """ Check exhaustive sweep parameters

    Throws
    ------
    PreconditionError
        When n is out of range.
    LookupError
        For an unknown predicate.
    """
    get_predicate_class_by_name(predicate)
    limit = MAX_LONG_SWEEP_ORDER if long_run else MAX_SWEEP_ORDER
    if not isinstance(n, int) or not 1 <= n <= limit:
        raise PreconditionError(
            "Exhaustive sweeps cover orders 1..%d%s, got %r"
            % (limit, '' if long_run else ' (8 needs the long-run flag)', n))

def exhaustive_labeled(n, predicate='logconcave', config=None, threads=None,
                       long_run=None):
    """ Test a predicate on every labeled graph of order n

    Parameters
    ----------
    n : int
        Order, 1..7, or 8 with the long-run flag.
    predicate : str
        Name of a registered predicate.
    config : Configuration, optional
    threads : int, optional
        Worker processes, overrides config.threads.
    long_run : bool, optional
        Allow order 8, overrides config.long_run.

    Returns
    -------
    SweepReport
        examined is 2^(n(n-1)/2); violations carry the graph number and its
        graph6 encoding, in increasing graph number.
    """
    if config is None:
        config = dompoly.Configuration()
    if threads is None:
        threads = config.threads
    if long_run is None:
        long_run = config.long_run
    validate_sweep(n, predicate, long_run)

    total = 1 << (n * (n - 1) // 2)
    LOG.info('Sweeping %d labeled graphs of order %d for %s'
             % (total, n, predicate))

    worker_config = copy.copy(config)
    worker_config.threads = 1
    work = [(n, predicate, start, min(start + SWEEP_CHUNK, total),
             worker_config)
            for start in range(0, total, SWEEP_CHUNK)]

    report = SweepReport(universe='all labeled graphs', predicate=predicate,
                         n=n)
    if threads > 1 and len(work) > 1:
        with multiprocessing.Pool(processes=min(threads, len(work))) as pool:
            _merge_chunks(report, n, pool.imap(_sweep_chunk, work), config)
    else:
        _merge_chunks(report, n, map(_sweep_chunk, work), config)
    return report

def _merge_chunks(report, n, results, config):
    next_progress = config.progress_every
    for examined, failing in results:
        report.examined += examined
        for index in failing:
            report.add_violation(
                {'index': index,
                 'graph6': encode_graph6(labeled_graph(n, index))},
                config.offender_cap)
        if report.examined >= next_progress:
            LOG.info('%d graphs examined' % report.examined)
            next_progress = (report.examined // config.progress_every + 1) \
                * config.progress_every

def _line_text(line):
    """Stripped text of a stream line; bytes must be ASCII."""
    if isinstance(line, bytes):
        try:
            line = line.decode('ascii')
        except UnicodeDecodeError as e:
            raise Graph6Error("Line is not ASCII: %s" % e) from None
    return line.strip()

def stream_classify(lines, predicate='logconcave', config=None):
    """ Test a predicate on every graph6 line of a stream

    Blank lines are skipped. A line which does not decode or parse, or whose
    graph is over the enumeration cap, is recorded as an error and
    processing goes on. Line numbers start at 1.

    Returns
    -------
    SweepReport
    """
    if config is None:
        config = dompoly.Configuration()
    test = get_predicate_class_by_name(predicate)()
    report = SweepReport(universe='stream', predicate=predicate)

    for number, line in enumerate(lines, 1):
        try:
            text = _line_text(line)
            if not text:
                continue
            g = parse_graph6(text)
            profile = brute_force_profile(g, config)
        except DomPolyError as e:
            LOG.warning('Skipping line %d: %s' % (number, e))
            report.errors.append({'line': number, 'error': str(e)})
            continue

        report.examined += 1
        if not test.holds(g, profile):
            report.add_violation({'line': number, 'graph6': text},
                                 config.offender_cap)
        if report.examined % config.progress_every == 0:
            LOG.info('%d graphs classified' % report.examined)
    return report

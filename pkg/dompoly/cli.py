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

"""Command line front end.

Every option is validated, and every input graph parsed, before any
computation starts: a usage error always exits with status 2 and leaves
standard output empty.
"""

import importlib
import logging
import optparse
import os
import sys

import dompoly
from dompoly import report
from dompoly.analysislib import checks
from dompoly.commons import DomPolyError, MAX_ORDER
from dompoly.domlib import engines
from dompoly.domlib.enumeration import brute_force_profile
from dompoly.experimentlib import sweeps, tables
# dompoly.experimentlib re-exports the census() function under the same
# name as its module, so the module has to be fetched explicitly.
census = importlib.import_module('dompoly.experimentlib.census')
from dompoly.graphlib import families
from dompoly.graphlib.graph import parse_edge_list_text
from dompoly.graphlib.graph6 import parse_graph6

LOG = logging.getLogger('dompoly')

COMMANDS = ['compute', 'family', 'analyze', 'tables', 'census', 'exhaustive',
            'stream']

# commands whose report has a CSV rendering
CSV_COMMANDS = ['compute', 'family', 'tables', 'census', 'exhaustive',
                'stream']

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2

DEFAULT_SAMPLES = 100


def _build_parser():
    usage = ('%prog <' + '|'.join(COMMANDS) + '> [options]\n\n'
             'Exact domination polynomials, their shape and the certificates '
             'of their unimodality.')
    parser = optparse.OptionParser(usage=usage,
                                   version='%%prog %s' % dompoly.__version__)

    group = optparse.OptionGroup(parser, 'Graph input')
    group.add_option('--g6', dest='g6', metavar='STRING',
                     help='graph in graph6 format.')
    group.add_option('--edges', dest='edges', metavar='FILE',
                     help='graph as an edge list file: a "n m" header line '
                          'then m lines "u v".')
    group.add_option('--kind', dest='kind', metavar='NAME',
                     help="graph family. Use '--list=kinds' to show "
                          "available choices.")
    group.add_option('--n', dest='n', metavar='N', type='int',
                     help='family order; number of K_2 copies for matching, '
                          'friendship and universal-matching; sweep or '
                          'census order.')
    group.add_option('--m', dest='m', metavar='M', type='int',
                     help='crown order of a corona P_n o K_m.')
    group.add_option('--parts', dest='parts', metavar='A,B,...',
                     help='part sizes of a complete multipartite graph.')
    parser.add_option_group(group)

    group = optparse.OptionGroup(parser, 'Computation')
    group.add_option('--method', dest='method', metavar='NAME',
                     default='brute',
                     help="computation engine for 'family': brute, "
                          "recurrence or closed. Defaults to brute.")
    group.add_option('--checks', dest='checks', metavar='LIST',
                     help="comma separated checks for 'analyze'. Use "
                          "'--list=checks' to show available choices.")
    group.add_option('--k', dest='k', metavar='K', type='int',
                     help='index of the ratio certificate, defaults to '
                          'ceil(n/2).')
    group.add_option('--table', dest='table', metavar='NAME',
                     help='golden table: t1paths, t1cycles or t2L. All '
                          'tables by default.')
    group.add_option('--p', dest='p', metavar='NUM/DEN',
                     help='exact edge probability of random graphs.')
    group.add_option('--samples', dest='samples', metavar='K', type='int',
                     default=DEFAULT_SAMPLES,
                     help='census sample count, defaults to %d.'
                          % DEFAULT_SAMPLES)
    group.add_option('--seed', dest='seed', metavar='S', type='int',
                     default=0,
                     help='random seed, defaults to 0.')
    group.add_option('--predicate', dest='predicate', metavar='NAME',
                     default='logconcave',
                     help="sweep predicate. Use '--list=predicates' to show "
                          "available choices. Defaults to logconcave.")
    group.add_option('--input', dest='input', metavar='FILE',
                     help="graph6 stream for 'stream', defaults to standard "
                          "input.")
    group.add_option('--long-run', dest='long_run', action='store_true',
                     default=False,
                     help='allow the hours long order 8 exhaustive sweep.')
    group.add_option('--threads', dest='threads', metavar='N', type='int',
                     help='worker processes, defaults to the number of CPUs.')
    group.add_option('--cap', dest='cap', metavar='N', type='int',
                     help='largest order handled by brute force, defaults '
                          'to %d.' % dompoly.Configuration.DEFAULT_CAP)
    parser.add_option_group(group)

    parser.add_option('-C', '--config', dest='config_file', metavar='FILE',
                      help='specify the location of the config file.')
    parser.add_option('-f', '--format', dest='format', metavar='FMT',
                      default='json',
                      help='output format, json or csv. Defaults to json.')
    parser.add_option('--strict', dest='strict', action='store_true',
                      default=False,
                      help='exit with status 1 when violations are found.')
    parser.add_option('-v', '--verbose', dest='verbose', action='store_true',
                      default=False, help='log debugging messages.')
    parser.add_option('--progress', dest='progress', action='store_true',
                      default=False,
                      help='log a progress line counter on standard error.')
    parser.add_option('--list', dest='list', metavar='NAME',
                      help="List available choices for 'kinds', 'methods', "
                           "'checks', 'predicates' or 'tables'.")
    return parser


def _list_choices(name, out):
    registries = {
        'kinds': families.get_families(),
        'methods': engines.get_engines(),
        'checks': checks.get_checks(),
        'predicates': sweeps.get_predicates(),
        'tables': tables.get_tables(),
    }
    if name not in registries:
        return False
    out.write('Available choices for %s:\n\n' % name)
    for cls in registries[name]:
        description = getattr(cls, 'description', None) or cls.title
        out.write('%s (%s)\n' % (cls.name, description))
    return True


def _family_spec(parser, options):
    """FamilySpec described by --kind and its parameters."""
    try:
        cls = families.get_family_class_by_name(options.kind)
    except LookupError as ex:
        parser.error("%s\nAvailable kinds: %s."
                     % (ex, ', '.join(f.name
                                      for f in families.get_families())))

    def need(option, value):
        if value is None:
            parser.error("--kind %s needs --%s" % (options.kind, option))
        return value

    if cls is families.CompleteMultipartite:
        raw = need('parts', options.parts)
        try:
            parts = tuple(int(x) for x in raw.split(','))
        except ValueError:
            parser.error("Invalid --parts '%s', expected e.g. 2,3,4" % raw)
        spec = cls(parts)
    elif cls is families.Corona:
        spec = cls(need('n', options.n), need('m', options.m))
    elif cls is families.ErdosRenyi:
        try:
            spec = cls(need('n', options.n), need('p', options.p),
                       options.seed)
        except DomPolyError as ex:
            parser.error(str(ex))
    else:
        spec = cls(need('n', options.n))

    try:
        spec.validate()
    except DomPolyError as ex:
        parser.error(str(ex))
    return spec


def _input_graph(parser, options):
    """The single input graph of compute and analyze."""
    sources = [s for s in (options.g6, options.edges, options.kind)
               if s is not None]
    if len(sources) != 1:
        parser.error('Exactly one of --g6, --edges or --kind is required')

    try:
        if options.g6 is not None:
            return parse_graph6(options.g6)
        if options.edges is not None:
            try:
                with open(options.edges, encoding='utf-8') as f:
                    return parse_edge_list_text(f.read())
            except OSError as ex:
                parser.error('Cannot read edge list: %s' % ex)
    except DomPolyError as ex:
        parser.error(str(ex))
    return families.generate(_family_spec(parser, options))


def _check_cap(parser, n, config):
    if n > config.cap:
        parser.error('Order %d exceeds the brute-force cap of %d, see --cap'
                     % (n, config.cap))


def _configure(parser, options):
    if options.config_file:
        try:
            config = dompoly.load_configuration([options.config_file],
                                                required=True)
        except IOError as ex:
            parser.error('%s (%s)' % (ex, options.config_file))
    else:
        config = dompoly.load_configuration()

    if options.threads is not None:
        if options.threads < 1:
            parser.error('--threads must be at least 1')
        config.threads = options.threads
    if options.cap is not None:
        if not 1 <= options.cap <= MAX_ORDER:
            parser.error('--cap must be in 1..%d' % MAX_ORDER)
        config.cap = options.cap
    config.long_run = options.long_run
    return config


def _prepare(parser, command, options, config):
    """ Validate the options of a command

    Returns
    -------
    callable
        Runs the command and returns (report, violations found).
    """
    if options.format not in report.FORMATS:
        parser.error("Unknown format '%s', use json or csv" % options.format)
    if options.format == 'csv' and command not in CSV_COMMANDS:
        parser.error("'%s' has no CSV output, use --format json" % command)

    if command == 'compute':
        g = _input_graph(parser, options)
        _check_cap(parser, g.n, config)
        return lambda: (brute_force_profile(g, config), False)

    if command == 'family':
        if options.kind is None:
            parser.error("'family' needs --kind")
        spec = _family_spec(parser, options)
        try:
            engine = engines.get_engine_class_by_name(options.method)()
        except LookupError as ex:
            parser.error("%s\nAvailable methods: %s."
                         % (ex, ', '.join(e.name
                                          for e in engines.get_engines())))
        if not engine.supports(spec):
            parser.error("Method %s does not apply to --kind %s"
                         % (engine.name, spec.name))
        if engine.name == 'brute':
            _check_cap(parser, spec.order(), config)
        return lambda: (engine.profile(spec, config), False)

    if command == 'analyze':
        g = _input_graph(parser, options)
        _check_cap(parser, g.n, config)
        if g.n < 1:
            parser.error("'analyze' needs a graph with at least one vertex")
        names = (options.checks.split(',') if options.checks
                 else checks.DEFAULT_CHECKS)
        for name in names:
            try:
                checks.get_check_class_by_name(name)
            except LookupError as ex:
                parser.error("%s\nAvailable checks: %s."
                             % (ex, ', '.join(c.name
                                              for c in checks.get_checks())))
        if options.k is not None and 'lemma31' in names and \
           not (g.n <= 2 * options.k and options.k <= g.n):
            parser.error('--k must satisfy n/2 <= k <= n, n = %d' % g.n)

        def run():
            profile = brute_force_profile(g, config)
            results = checks.run_checks(g, profile, names, options.k)
            return ({'profile': profile, 'checks': results},
                    not all(r.ok for r in results))
        return run

    if command == 'tables':
        names = [t.name for t in tables.get_tables()]
        if options.table is not None:
            if options.table not in names:
                parser.error("Unknown table '%s', use one of %s"
                             % (options.table, ', '.join(names)))
            names = [options.table]

        def run():
            reports = [tables.reproduce_table(name, config) for name in names]
            return reports, not all(r.match for r in reports)
        return run

    if command == 'census':
        if options.n is None or options.p is None:
            parser.error("'census' needs --n and --p")
        try:
            census.validate_census(options.n, options.p, options.samples,
                                   options.seed, config)
        except DomPolyError as ex:
            parser.error(str(ex))

        def run():
            result = census.census(options.n, options.p, options.samples,
                                   options.seed, config)
            return result, result.offender_count > 0
        return run

    if command == 'exhaustive':
        if options.n is None:
            parser.error("'exhaustive' needs --n")
        try:
            sweeps.validate_sweep(options.n, options.predicate,
                                  options.long_run)
        except (DomPolyError, LookupError) as ex:
            parser.error(str(ex))

        def run():
            result = sweeps.exhaustive_labeled(options.n, options.predicate,
                                               config)
            return result, result.violation_count > 0
        return run

    if command == 'stream':
        try:
            sweeps.get_predicate_class_by_name(options.predicate)
        except LookupError as ex:
            parser.error(str(ex))
        if options.input is not None and not os.path.isfile(options.input):
            parser.error('No such input file: %s' % options.input)
        return None

    parser.error("Unknown command '%s', use one of %s"
                 % (command, ', '.join(COMMANDS)))


def _run(argv, stdout, stdin):
    parser = _build_parser()
    (options, args) = parser.parse_args(argv)

    if options.verbose:
        LOG.setLevel(logging.DEBUG)
    elif options.progress:
        LOG.setLevel(logging.INFO)
    else:
        LOG.setLevel(logging.WARNING)

    if options.list:
        if _list_choices(options.list, stdout):
            return EXIT_OK
        parser.error("Unknown list option '%s'. Available options are "
                     "'kinds', 'methods', 'checks', 'predicates' and 'tables'"
                     % options.list)

    if len(args) != 1:
        parser.error('Exactly one command is required: %s'
                     % ', '.join(COMMANDS))
    command = args[0]

    config = _configure(parser, options)
    LOG.debug('Running %s with %r' % (command, config))
    job = _prepare(parser, command, options, config)

    if command == 'stream':
        # bytes; an undecodable line is reported like a malformed one
        if options.input is not None:
            with open(options.input, 'rb') as f:
                result = sweeps.stream_classify(f, options.predicate, config)
        else:
            result = sweeps.stream_classify(getattr(stdin, 'buffer', stdin),
                                            options.predicate, config)
        violations = result.violation_count > 0 or bool(result.errors)
    else:
        result, violations = job()

    meta = {'tool': 'dompoly', 'version': dompoly.__version__,
            'command': command}
    if command == 'family':
        meta['method'] = options.method
    stdout.write(report.render_report(result, options.format, meta))

    if options.strict and violations:
        return EXIT_VIOLATIONS
    return EXIT_OK


def dispatch(argv, stdout=None, stdin=None):
    """ Run one command line

    Parameters
    ----------
    argv : list of str
        Arguments, without the program name.
    stdout, stdin : file-like, optional
        Default to sys.stdout and sys.stdin.

    Returns
    -------
    int
        Exit status: 0 on success, 1 when --strict is set and violations
        were found, 2 on usage errors.
    """
    if stdout is None:
        stdout = sys.stdout
    if stdin is None:
        stdin = sys.stdin
    try:
        return _run(argv, stdout, stdin)
    except SystemExit as ex:
        # optparse exits on errors, --help and --version
        if ex.code is None:
            return EXIT_OK
        return ex.code if isinstance(ex.code, int) else EXIT_USAGE


def main():
    """ Parse command line options and run the requested command

    Returns
    -------
    int
        Exit status.
    """
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING,
                        format='%(levelname)s %(message)s')
    return dispatch(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())

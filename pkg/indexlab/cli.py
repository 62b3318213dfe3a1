""" Command-line front end.

Example usage::

    indexlab index coadjoint:borel-gl4
    indexlab pair-check gl/glpq --p 4 --q 4 --expect no-GNIB
    indexlab reproduce all --seed 1
    indexlab delta gl --partition 3,3,1

Exit status: 0 pass, 1 mismatch with an expectation, 2 malformed or
unsupported input, 3 inconclusive.

"""
from __future__ import print_function

import argparse
import logging
import sys

from indexlab import (
    ConfigError, MalformedInputError, PreconditionError, SizeGuardError,
    UnknownExampleError, UnsupportedFamilyError, __version__)
from indexlab.catalog import named_rep, rep_from_dict
from indexlab.config import load_config
from indexlab.gnib import (
    GNIB, INCONCLUSIVE, MODES, NO_GNIB, delta_certificate, gnib_check)
from indexlab.liealg import dual
from indexlab.orbits import Partition
from indexlab.pairs import make_pair
from indexlab.reproduce import (
    MISMATCH, PASS, example_ids, reproduce, summary_table)
from indexlab.utils import FORMATS, Timer, dumps, load_file, render_table

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3

INPUT_ERRORS = (ConfigError, MalformedInputError, PreconditionError,
                UnknownExampleError, UnsupportedFamilyError)


def _common(parser):
    parser.add_argument('--config', default=None,
                        help="INI file with [run] and [reproduce] sections.")
    parser.add_argument('--mode', choices=MODES, default=None)
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--trials', type=int, default=None)
    parser.add_argument('--box', type=int, default=None)
    parser.add_argument('--format', choices=FORMATS, default=None)
    parser.add_argument('--max-symbolic-dim', type=int, default=None)
    parser.add_argument('-v', '--verbose', action='count', default=0)


def make_parser():
    parser = argparse.ArgumentParser(
        prog='indexlab',
        description="Exact index computations and nilpotent index checks.")
    parser.add_argument('--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    p = commands.add_parser('index', help="Index of a representation.")
    p.add_argument('spec', nargs='?', default=None,
                   help="Named representation such as coadjoint:borel-gl4.")
    p.add_argument('--file', default=None, help="Representation as JSON.")
    _common(p)

    p = commands.add_parser('pair-check', help="Sweep the nilpotent orbits of a pair.")
    p.add_argument('family')
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--p', type=int, default=None)
    p.add_argument('--q', type=int, default=None)
    p.add_argument('--expect', choices=(GNIB, NO_GNIB), default=None)
    p.add_argument('--witness', action='store_true',
                   help="Also evaluate explicit witness covectors.")
    _common(p)

    p = commands.add_parser('reproduce', help="Run named reproductions.")
    p.add_argument('example', help="An example id, or 'all'.")
    p.add_argument('--max', type=int, default=None, dest='max_n',
                   help="Largest matrix size in sweeps.")
    p.add_argument('--slow', action='store_true',
                   help="Include slow examples in 'all'.")
    _common(p)

    p = commands.add_parser('delta', help="delta for an even nilpotent of height 4.")
    p.add_argument('type', choices=('gl', 'so', 'sp'))
    p.add_argument('--partition', required=True)
    _common(p)
    return parser


def _configure(args):
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    config = load_config(args.config)
    return config.update(mode=args.mode, seed=args.seed, trials=args.trials,
                         box=args.box, format=args.format,
                         max_symbolic_dim=args.max_symbolic_dim,
                         max_n=getattr(args, 'max_n', None))


def _emit(data, rows, columns, fmt, out):
    if fmt == 'json':
        print(dumps(data), file=out)
    else:
        print(render_table(rows, columns, fmt), file=out)


def cmd_index(args, config, out):
    """ Index counted over the orbits in the named module, ind(q, V*). """
    if args.file:
        rep = rep_from_dict(load_file(args.file))
        label = args.file
    elif args.spec:
        rep = named_rep(args.spec)
        label = args.spec
    else:
        raise MalformedInputError("Give a representation spec or --file.")

    with Timer() as timer:
        report = config.options().index(dual(rep))
    data = dict(report.to_dict(), rep=label)
    row = {'rep': label, 'index': report.index, 'lower': report.lower,
           'upper': report.upper, 'exact': report.exact, 'ms': timer.ms}
    _emit(data, [row], list(row), config.format, out)
    return EXIT_PASS


def _pair_params(args):
    return dict((k, getattr(args, k)) for k in ('n', 'p', 'q')
                if getattr(args, k) is not None)


def cmd_pair_check(args, config, out):
    try:
        pair = make_pair(args.family, **_pair_params(args))
    except KeyError as e:
        raise MalformedInputError("Missing parameter %s for %s." % (e, args.family))
    with Timer() as timer:
        report = gnib_check(pair, options=config.options(), with_witness=args.witness)
    logger.info("pair-check took %d ms", timer.ms)
    if config.format == 'json':
        print(dumps(report.to_dict()), file=out)
    else:
        print(report.table(config.format), file=out)

    if report.overall == INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    if args.expect is not None and report.overall != args.expect:
        return EXIT_MISMATCH
    return EXIT_PASS


def cmd_reproduce(args, config, out):
    if args.example == 'all':
        ids = example_ids(include_slow=args.slow)
    else:
        ids = [args.example]

    results = []
    with Timer() as timer:
        for example_id in ids:
            results.append(reproduce(example_id, options=config.options(),
                                     max_n=config.max_n, samples=config.samples))
    print("reproduced %d examples in %d ms" % (len(results), timer.ms),
          file=sys.stderr)

    if config.format == 'json':
        print(dumps([r.to_dict() for r in results]), file=out)
    else:
        print(summary_table(results, config.format), file=out)

    statuses = set(r.status for r in results)
    if MISMATCH in statuses:
        return EXIT_MISMATCH
    if statuses - set([PASS]):
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def cmd_delta(args, config, out):
    partition = Partition.parse(args.partition)
    with Timer() as timer:
        certificate = delta_certificate(args.type, partition, options=config.options())
    data = certificate.to_dict()
    row = dict((k, data[k]) for k in ('type', 'pair', 'dim_g4', 'dim_S', 'dim_S_e',
                                     'delta', 'direct', 'verdict'))
    row['partition'] = str(partition)
    row['ms'] = timer.ms
    _emit(data, [row], list(row), config.format, out)
    return EXIT_PASS


_commands = {
    'index': cmd_index,
    'pair-check': cmd_pair_check,
    'reproduce': cmd_reproduce,
    'delta': cmd_delta,
}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = make_parser().parse_args(argv)
    try:
        config = _configure(args)
        return _commands[args.command](args, config, out)
    except INPUT_ERRORS as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    except SizeGuardError as e:
        print("inconclusive: %s" % e, file=sys.stderr)
        return EXIT_INCONCLUSIVE

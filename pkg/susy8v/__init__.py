# Copyright (C) 2026 The susy8v Authors.

'''Package for verifying the supersymmetric eight-vertex model on a strip.'''


RUN_KEYS = ('suite', 'p', 'u', 't', 'L', 'seed', 'out', 'format', 'threads',
            'large_L', 'conjecture_p', 'samples')


def _real(text):
    '''argparse type of a real number or a multiple of pi.'''
    import argparse
    from susy8v.config import ConfigError, parse_real
    try:
        return parse_real('value', text)
    except ConfigError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _complex(text):
    '''argparse type of y, real or complex.'''
    import argparse
    try:
        value = complex(text.replace(' ', ''))
    except ValueError:
        raise argparse.ArgumentTypeError('expect a complex number, got %r' %
                                         text)
    return value.real if value.imag == 0.0 else value


def _tolerance(text):
    '''argparse type of CHECK=TOL.'''
    import argparse
    check, sep, tol = text.partition('=')
    if not sep or not check:
        raise argparse.ArgumentTypeError('expect CHECK=TOL, got %r' % text)
    return check, _real(tol)


def _parse_args(args=None):
    '''Parse command-line arguments.'''
    import argparse
    from susy8v.printer import PRINTERS
    from susy8v.suites import SUITES
    parser = argparse.ArgumentParser(description='''
            Verify the identities, eigenvalues and spectral claims of the
            supersymmetric eight-vertex model on a strip.
            ''')
    parser.add_argument('-v', action='count', default=0,
                        help='increase verbosity level')
    subparsers = parser.add_subparsers(dest='command')

    run = subparsers.add_parser('run', help='run verification suites')
    run.add_argument('--config', type=argparse.FileType('r'),
                     help='YAML configuration file')
    run.add_argument('--suite',
                     help=('comma-separated suites: %s or all' %
                           ', '.join(SUITES)))
    run.add_argument('--p', help='comma-separated nomes')
    run.add_argument('--u', help='comma-separated spectral parameters')
    run.add_argument('--t', help='comma-separated t values, e.g. pi/6,0.4')
    run.add_argument('--L', help='chain lengths, e.g. 1..6 or 2,4')
    run.add_argument('--large-L', dest='large_L',
                     help='matrix-free chain lengths of the dominance suite')
    run.add_argument('--conjecture-p', dest='conjecture_p',
                     help='nomes of the conjecture suite')
    run.add_argument('--samples', type=int,
                     help='random inhomogeneity vectors per chain length')
    run.add_argument('--seed', type=int, help='seed of randomized checks')
    run.add_argument('--out', help='report file, default to stdout')
    run.add_argument('--format', choices=['json', 'csv'],
                     help='report format, default to json')
    run.add_argument('--threads', type=int, help='worker threads')
    run.add_argument('--tol', metavar='CHECK=TOL', type=_tolerance,
                     action='append', default=[],
                     help='override the tolerance of a check')

    show = subparsers.add_parser('print', help='print one construction')
    show.add_argument('kind', choices=list(PRINTERS))
    show.add_argument('--p', type=_real, default=0.3, help='nome')
    show.add_argument('--u', type=_real, default=0.2,
                      help='spectral parameter')
    show.add_argument('--t', type=_real, default=_real('pi/6'),
                      help='parameter t, default to pi/6')
    show.add_argument('--eta', type=_real,
                      help='crossing parameter, default to pi/3')
    show.add_argument('--y', type=_complex,
                      help='boundary parameter y, default to y(t)')
    show.add_argument('--L', type=int, default=3, help='chain length')
    show.add_argument('--csv', action='store_true',
                      help='print matrices as CSV')

    args = parser.parse_args(args=args)
    return parser, args


def _load_config(parser, args):
    '''Merge the YAML file and the command-line overrides.'''
    from susy8v.config import ConfigError, RunConfig
    data = {}
    if args.config:
        try:
            import yaml
        except ImportError:
            parser.error('could not load Python package yaml')
        with args.config:
            data = yaml.safe_load(args.config) or {}
        if not isinstance(data, dict):
            parser.error('configuration file is not a mapping')
    for key in RUN_KEYS:
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    if args.tol:
        tolerances = dict(data.get('tolerances') or {})
        tolerances.update(args.tol)
        data['tolerances'] = tolerances
    try:
        return RunConfig.make(data)
    except ConfigError as exc:
        parser.error(str(exc))


def _run(parser, args):
    '''Run the configured suites and write the report.'''
    import sys
    from susy8v.harness import run_suite
    config = _load_config(parser, args)
    document = run_suite(config)
    if config.out is None:
        document.write(sys.stdout, config.format)
    else:
        with open(config.out, 'w') as output:
            document.write(output, config.format)
    return document.exit_status


def _print(parser, args):
    '''Print one construction.'''
    import sys
    from susy8v.linalg import DenseCapError
    from susy8v.params import ParameterDomainError
    from susy8v.printer import print_object
    from susy8v.susy import SingletError
    from susy8v.theta import ThetaDomainError
    from susy8v.vertex import KMatrixDomainError
    try:
        print_object(args.kind, args, sys.stdout)
    except DenseCapError as exc:
        parser.error('%s; for large chains run the dominance suite, e.g. '
                     '"%s run --suite dominance --large-L %d"' %
                     (exc, parser.prog, args.L))
    except (ParameterDomainError, ThetaDomainError, KMatrixDomainError,
            SingletError) as exc:
        parser.error(str(exc))
    return 0


def main(args=None):
    '''Main function.'''
    import logging
    from susy8v.report import EXIT_USAGE

    parser, args = _parse_args(args=args)
    if not args.command:
        parser.print_usage()
        return EXIT_USAGE

    logging.basicConfig(format='%(filename)s: %(message)s')
    if args.v > 1:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.v > 0:
        logging.getLogger().setLevel(logging.INFO)

    if args.command == 'run':
        return _run(parser, args)
    return _print(parser, args)

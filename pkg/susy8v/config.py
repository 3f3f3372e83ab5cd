# Copyright (C) 2026 The susy8v Authors.

'''Parse run configuration data.'''

from collections import namedtuple, OrderedDict
import logging
import math
import numbers
import re

from susy8v.linalg import DENSE_CAP
from susy8v.params import ETA_SUSY, T_DEGENERATE
from susy8v.suites import SUITES, expand_suites


FORMATS = ('json', 'csv')

DEFAULTS = OrderedDict([
    ('suite', ['all']),
    ('p', [0.2, 0.5]),
    ('u', [0.1, 0.3]),
    ('t', ['pi/6', 0.4, 'pi/2']),
    ('L', [1, 2, 3, 4, 5, 6]),
    ('seed', 0),
    ('out', None),
    ('format', 'json'),
    ('threads', 1),
    ('tolerances', {}),
    ('large_L', [12]),
    ('conjecture_p', [0.01, 0.3]),
    ('samples', 10),
])

# Matrix-free chain lengths above this take minutes per point.
MAX_LARGE_L = 20

_PI_PATTERN = re.compile(r'''
    ^\s*
    (?:(?P<num>[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*\*?\s*)?
    pi
    (?:\s*/\s*(?P<den>[0-9]*\.?[0-9]+))?
    \s*$
    ''', re.VERBOSE)


class ConfigError(Exception):
    '''Raise when a configuration field is invalid.'''

    def __init__(self, field, message):
        super(ConfigError, self).__init__('%s: %s' % (field, message))
        self.field = field


def parse_real(field, value):
    '''Parse a number or a multiple of pi such as "2*pi/9".'''
    if isinstance(value, bool):
        raise ConfigError(field, 'expect a number, got %r' % (value,))
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, str):
        match = _PI_PATTERN.match(value)
        if match:
            num = float(match.group('num') or 1.0)
            den = float(match.group('den') or 1.0)
            if den == 0.0:
                raise ConfigError(field, 'zero denominator in %r' % value)
            return num * math.pi / den
        try:
            return float(value)
        except ValueError:
            pass
    raise ConfigError(field, 'expect a number or a multiple of pi, got %r' %
                      (value,))


def parse_int(field, value):
    '''Parse an integer, rejecting bools and fractional values.'''
    if isinstance(value, bool):
        raise ConfigError(field, 'expect an integer, got %r' % (value,))
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, str) and re.match(r'^\s*-?[0-9]+\s*$', value):
        return int(value)
    raise ConfigError(field, 'expect an integer, got %r' % (value,))


def _as_list(field, value):
    '''Accept a scalar, a list or a comma-separated string.'''
    if isinstance(value, (list, tuple)):
        items = list(value)
    elif isinstance(value, str):
        items = [item.strip() for item in value.split(',') if item.strip()]
    else:
        items = [value]
    if not items:
        raise ConfigError(field, 'empty list')
    return items


def _int_range(field, value):
    '''Parse integers, with "a..b" standing for an inclusive range.'''
    result = []
    for item in _as_list(field, value):
        if isinstance(item, str) and '..' in item:
            first, _, last = item.partition('..')
            first, last = parse_int(field, first), parse_int(field, last)
            if last < first:
                raise ConfigError(field, 'empty range %r' % item)
            result.extend(range(first, last + 1))
        else:
            result.append(parse_int(field, item))
    return result


class RunConfig(namedtuple('RunConfig', '''
        suite
        p
        u
        t
        L
        seed
        out
        format
        threads
        tolerances
        large_L
        conjecture_p
        samples
        ''')):
    '''Validated settings of one verification run.'''

    # pylint: disable=E1101,W0232

    @classmethod
    def make(cls, data=None):
        '''Create a config from a flat mapping, filling in defaults.'''
        data = dict(data or {})
        unknown = sorted(set(data) - set(DEFAULTS))
        if unknown:
            raise ConfigError(unknown[0], 'unknown key (known keys: %s)' %
                              ', '.join(DEFAULTS))
        spec = OrderedDict(DEFAULTS)
        spec.update((key, value) for key, value in data.items()
                    if value is not None or key == 'out')
        config = cls._make_validated(spec)
        logging.debug('config: %s', config)
        return config

    @classmethod
    def _make_validated(cls, spec):
        '''Validate every field of a complete mapping.'''
        suite = expand_suites(_as_list('suite', spec['suite']))
        unknown = [name for name in suite if name not in SUITES]
        if unknown:
            raise ConfigError('suite', 'unknown suite %r (known suites: %s)' %
                              (unknown[0], ', '.join(SUITES)))

        p = [cls._nome('p', value) for value in _as_list('p', spec['p'])]
        u = [parse_real('u', value) for value in _as_list('u', spec['u'])]
        for value in u:
            if not math.isfinite(value):
                raise ConfigError('u', '%r is not finite' % value)
            if 'dominance' in suite and not 0.0 < value < ETA_SUSY:
                raise ConfigError('u', '%r is outside (0, pi/3), where the '
                                  'dominance suite needs positive weights'
                                  % value)
        t = [parse_real('t', value) for value in _as_list('t', spec['t'])]
        for value in t:
            if not 0.0 <= value <= T_DEGENERATE + 1e-15:
                raise ConfigError('t', '%r is outside [0, pi/2]' % value)

        L = cls._lengths('L', spec['L'], dense=True)
        large_L = cls._lengths('large_L', spec['large_L'], dense=False)
        conjecture_p = [cls._nome('conjecture_p', value)
                        for value in _as_list('conjecture_p',
                                              spec['conjecture_p'])]

        seed = parse_int('seed', spec['seed'])
        if seed < 0:
            raise ConfigError('seed', 'expect a non-negative seed')
        threads = parse_int('threads', spec['threads'])
        if threads < 1:
            raise ConfigError('threads', 'expect at least one thread')
        samples = parse_int('samples', spec['samples'])
        if samples < 1:
            raise ConfigError('samples', 'expect at least one sample')
        fmt = spec['format']
        if fmt not in FORMATS:
            raise ConfigError('format', 'expect one of %s, got %r' %
                              (', '.join(FORMATS), fmt))
        out = spec['out']
        if out is not None and not isinstance(out, str):
            raise ConfigError('out', 'expect a path, got %r' % (out,))

        return cls(suite=suite, p=p, u=u, t=t, L=L, seed=seed, out=out,
                   format=fmt, threads=threads,
                   tolerances=cls._tolerances(spec['tolerances']),
                   large_L=large_L, conjecture_p=conjecture_p,
                   samples=samples)

    @staticmethod
    def _nome(field, value):
        '''Parse a nome in (0, 1).'''
        p = parse_real(field, value)
        if not 0.0 < p < 1.0:
            raise ConfigError(field, 'nome %r is outside (0, 1)' % p)
        return p

    @staticmethod
    def _lengths(field, value, dense):
        '''Parse chain lengths, capped by the dense or matrix-free limit.'''
        lengths = sorted(set(_int_range(field, value)))
        for L in lengths:
            if L < 1:
                raise ConfigError(field, 'chain length %r is below 1' % L)
            if dense and 2 ** (L + 1) > DENSE_CAP:
                raise ConfigError(field, 'L=%d exceeds the dense cap of '
                                  'dimension %d; use large_L for '
                                  'matrix-free runs' % (L, DENSE_CAP))
            if not dense and L > MAX_LARGE_L:
                raise ConfigError(field, 'L=%d exceeds %d' %
                                  (L, MAX_LARGE_L))
        return lengths

    @staticmethod
    def _tolerances(value):
        '''Parse the check name to tolerance overrides.'''
        if not isinstance(value, dict):
            raise ConfigError('tolerances', 'expect a mapping, got %r' %
                              (value,))
        tolerances = OrderedDict()
        for check in sorted(value):
            tol = parse_real('tolerances', value[check])
            if not tol > 0.0:
                raise ConfigError('tolerances', 'tolerance of %s is not '
                                  'positive' % check)
            tolerances[str(check)] = tol
        return tolerances

    def echo(self):
        '''Return the config as an ordered mapping for reports.'''
        return OrderedDict((field, getattr(self, field))
                           for field in self._fields)

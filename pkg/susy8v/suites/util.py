# Copyright (C) 2026 The susy8v Authors.

'''Tasks and grid helpers shared by the suites.'''

from collections import namedtuple
import functools
import itertools

from susy8v.params import SpectralPoint
from susy8v.susy import is_singlet_point
from susy8v.theta import Nome


class Task(namedtuple('Task', 'suite check params run')):
    '''One unit of work: run(rng) returns a Report.

    check names the claim charged with a runtime error of the task.
    '''

    # pylint: disable=E1101,W0232

    @classmethod
    def make(cls, suite, check, func, *args, **params):
        '''Bind func(*args) into a task; params label its records.'''
        return cls(suite=suite, check=check, params=params,
                   run=functools.partial(_call, func, args))

    @classmethod
    def make_seeded(cls, suite, check, func, *args, **params):
        '''Like make, with the task rng passed as the last argument.'''
        return cls(suite=suite, check=check, params=params,
                   run=functools.partial(_call_seeded, func, args))


def _call(func, args, rng):
    '''Call func ignoring the task rng.'''
    del rng
    return func(*args)


def _call_seeded(func, args, rng):
    '''Call func with the task rng appended.'''
    return func(*(args + (rng,)))


def nomes(values):
    '''Nomes of a list of p values.'''
    return [Nome.make(p) for p in values]


def spectral_points(config, singlet_only=False):
    '''Spectral points at eta = pi/3 over the (p, u, t) grid.'''
    ts = [t for t in config.t if is_singlet_point(t) or not singlet_only]
    for p, u, t in itertools.product(config.p, config.u, ts):
        yield SpectralPoint.make(p, u, t)


def singlet_ts(config):
    '''The t values of the grid at the singlet point.'''
    return [t for t in config.t if is_singlet_point(t)]

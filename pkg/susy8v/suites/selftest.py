# Copyright (C) 2026 The susy8v Authors.

'''Self-tests of the theta series and the parameter map.'''

import itertools

from susy8v.params import (SpectralPoint, check_parameter_map,
                           check_roots, check_weights)
from susy8v.suites.util import Task, nomes
from susy8v.theta import check_identities


def scan_theta(config):
    '''Theta identities at every nome of the grid and its square.'''
    for nome in nomes(config.p):
        for q in (nome, nome.squared()):
            yield Task.make_seeded('theta', 'theta', check_identities, q,
                                   p=q.p)


def scan_params(config):
    '''Weight identities, singlet roots and the parameter map.'''
    for p, u in itertools.product(config.p, config.u):
        yield Task.make('params', 'params', check_weights,
                        SpectralPoint.make(p, u), p=p, u=u)
    for nome in nomes(config.p):
        yield Task.make('params', 'params.roots', check_roots, nome,
                        p=nome.p)
    yield Task.make('params', 'params.injective', check_parameter_map,
                    list(config.p), list(config.t))

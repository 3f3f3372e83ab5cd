# Copyright (C) 2026 The susy8v Authors.

'''Ground state, singlet eigenvalue and dominance certificates.'''

import itertools

from susy8v import linalg
from susy8v.hamiltonian import (check_energy_slope, check_ground_states,
                                check_perron)
from susy8v.params import principal_root, zeta_of_nome
from susy8v.suites.util import Task, nomes
from susy8v.transfer import (check_dominance, check_recurrence,
                             check_singlet_eigenvalue)


def scan_ground_state(config):
    '''XYZ ground states at the singlet roots and their Perron structure.'''
    for nome in nomes(config.p):
        zeta = zeta_of_nome(nome)
        for L in config.L:
            yield Task.make('ground-state', 'hamiltonian.ground_state',
                            check_ground_states, L, nome, p=nome.p, L=L)
            yield Task.make('ground-state', 'hamiltonian.perron',
                            check_perron, L, zeta, principal_root(zeta),
                            p=nome.p, L=L)
        yield Task.make('ground-state', 'hamiltonian.energy_slope',
                        check_energy_slope, nome, list(config.L), p=nome.p)


def scan_eigenvalue(config):
    '''The singlet eigenvalue of T and the recurrence in L.'''
    for nome, u in itertools.product(nomes(config.p), config.u):
        params = dict(p=nome.p, u=u)
        for L in config.L:
            if 2 ** (L + 1) > linalg.DENSE_CAP:
                continue
            yield Task.make('eigenvalue', 'transfer.eigenvalue',
                            check_singlet_eigenvalue, L, nome, u, L=L,
                            **params)
        yield Task.make('eigenvalue', 'transfer.recurrence', check_recurrence,
                        nome, u, list(config.L), **params)


def scan_dominance(config):
    '''Perron dominance of the singlet eigenvalue for positive weights.'''
    for nome, u in itertools.product(nomes(config.p), config.u):
        params = dict(p=nome.p, u=u)
        for L in config.L:
            yield Task.make('dominance', 'transfer.dominance',
                            check_dominance, L, nome, u, L=L, **params)
        for L in config.large_L:
            yield Task.make_seeded('dominance', 'transfer.dominance',
                                   check_dominance, L, nome, u, True, L=L,
                                   matrix_free=True, **params)

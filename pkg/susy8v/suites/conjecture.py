# Copyright (C) 2026 The susy8v Authors.

'''The product formula for the inhomogeneous transfer matrix.'''

import itertools

from susy8v.suites.util import Task, nomes
from susy8v.transfer import check_conjecture


# Inhomogeneities are drawn uniformly from [-SPREAD, SPREAD].
SPREAD = 0.3


def check_random_conjecture(L, nome, u, pinned, rng):
    '''Draw inhomogeneities from rng and test the product formula.

    With pinned the first inhomogeneity is set to u, where R_01(u - u_1)
    degenerates to a permutation.
    '''
    inhom = rng.uniform(-SPREAD, SPREAD, size=L)
    if pinned:
        inhom[0] = u
    return check_conjecture(L, nome, u, list(inhom))


def scan_conjecture(config):
    '''Seeded samples per chain length, plus one with u_1 = u.'''
    for nome, u in itertools.product(nomes(config.conjecture_p), config.u):
        for L in config.L:
            params = dict(p=nome.p, u=u, L=L)
            for sample in range(config.samples):
                yield Task.make_seeded('conjecture', 'transfer.conjecture',
                                       check_random_conjecture, L, nome, u,
                                       False, sample=sample, **params)
            yield Task.make_seeded('conjecture', 'transfer.conjecture',
                                   check_random_conjecture, L, nome, u, True,
                                   sample='pinned', **params)

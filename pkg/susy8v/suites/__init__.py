# Copyright (C) 2026 The susy8v Authors.

'''Package of verification suites.

A suite maps a run configuration to a sequence of tasks.
'''

from collections import OrderedDict

from susy8v.suites.conjecture import scan_conjecture
from susy8v.suites.selftest import scan_params, scan_theta
from susy8v.suites.structure import (scan_hamiltonian, scan_susy,
                                     scan_transfer, scan_vertex)
from susy8v.suites.theorems import (scan_dominance, scan_eigenvalue,
                                    scan_ground_state)


SUITES = OrderedDict([
    ('theta', scan_theta),
    ('params', scan_params),
    ('susy', scan_susy),
    ('hamiltonian', scan_hamiltonian),
    ('vertex', scan_vertex),
    ('transfer', scan_transfer),
    ('ground-state', scan_ground_state),
    ('eigenvalue', scan_eigenvalue),
    ('dominance', scan_dominance),
    ('conjecture', scan_conjecture),
])

ALL = 'all'


def expand_suites(names):
    '''Expand "all" and drop duplicates, keeping the first occurrence.'''
    expanded = []
    for name in names:
        for item in (SUITES if name == ALL else (name,)):
            if item not in expanded:
                expanded.append(item)
    return expanded


def scan_tasks(config):
    '''Yield the tasks of every configured suite in order.'''
    for name in config.suite:
        for task in SUITES[name](config):
            yield task

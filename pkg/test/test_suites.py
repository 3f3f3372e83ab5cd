import collections
import unittest

import numpy as np

import helper
from susy8v.config import RunConfig
from susy8v.suites import ALL, SUITES, expand_suites, scan_tasks
from susy8v.suites.conjecture import SPREAD, check_random_conjecture
from susy8v.suites.util import Task, singlet_ts, spectral_points
from susy8v.theta import Nome


def small_config(**data):
    data.setdefault('p', [0.3])
    data.setdefault('u', [0.2])
    data.setdefault('L', [1, 2])
    return RunConfig.make(data)


def count_checks(tasks):
    return collections.Counter(task.check for task in tasks)


class TestExpand(unittest.TestCase):

    def test_expand(self):
        self.assertEqual(expand_suites([ALL]), list(SUITES))
        self.assertEqual(expand_suites(['susy', 'theta', 'susy']),
                         ['susy', 'theta'])
        self.assertEqual(expand_suites(['conjecture', ALL])[0], 'conjecture')


class TestTask(helper.TestNumerics):

    def test_make(self):
        calls = []
        task = Task.make('theta', 'theta', lambda *args: calls.append(args),
                         1, 2, p=0.3)
        task.run(self.make_rng())
        self.assertEqual(calls, [(1, 2)])
        self.assertEqual(task.params, {'p': 0.3})

    def test_make_seeded(self):
        calls = []
        rng = self.make_rng()
        task = Task.make_seeded('theta', 'theta',
                                lambda *args: calls.append(args), 1)
        task.run(rng)
        self.assertEqual(calls, [(1, rng)])


class TestGrids(unittest.TestCase):

    def test_spectral_points(self):
        config = small_config(t='pi/6, 0.4', u='0.1, 0.2')
        self.assertEqual(len(list(spectral_points(config))), 4)
        singlet = list(spectral_points(config, singlet_only=True))
        self.assertEqual(len(singlet), 2)
        self.assertEqual(len(singlet_ts(config)), 1)

    def test_theta_and_params(self):
        config = small_config(suite='theta,params', p='0.2, 0.5',
                              u='0.1, 0.3')
        checks = count_checks(scan_tasks(config))
        self.assertEqual(checks['theta'], 4)
        self.assertEqual(checks['params'], 4)
        self.assertEqual(checks['params.roots'], 2)
        self.assertEqual(checks['params.injective'], 1)

    def test_ground_state(self):
        config = small_config(suite='ground-state')
        checks = count_checks(scan_tasks(config))
        self.assertEqual(checks, {'hamiltonian.ground_state': 2,
                                  'hamiltonian.perron': 2,
                                  'hamiltonian.energy_slope': 1})

    def test_eigenvalue(self):
        config = small_config(suite='eigenvalue', L='1..6')
        checks = count_checks(scan_tasks(config))
        self.assertEqual(checks, {'transfer.eigenvalue': 6,
                                  'transfer.recurrence': 1})

    def test_dominance(self):
        config = small_config(suite='dominance', large_L=12)
        tasks = list(scan_tasks(config))
        self.assertEqual(len(tasks), 3)
        self.assertEqual([task.params.get('matrix_free') for task in tasks],
                         [None, None, True])
        self.assertTrue(all(task.params['u'] == 0.2 for task in tasks))

    def test_conjecture(self):
        config = small_config(suite='conjecture', conjecture_p=0.3,
                              samples=2)
        tasks = list(scan_tasks(config))
        self.assertEqual(len(tasks), 6)
        self.assertEqual([task.params['sample'] for task in tasks[:3]],
                         [0, 1, 'pinned'])

    def test_structure_suites(self):
        config = small_config(suite='susy,hamiltonian,vertex,transfer',
                              t='pi/6, 0.4')
        tasks = list(scan_tasks(config))
        self.assertEqual(set(task.suite for task in tasks),
                         set(['susy', 'hamiltonian', 'vertex', 'transfer']))
        for task in tasks:
            self.assertTrue(task.check.split('.')[0] in
                            ('susy', 'hamiltonian', 'vertex', 'transfer'),
                            task.check)


class TestRunTasks(helper.TestNumerics):

    def test_theta_tasks_pass(self):
        rng = self.make_rng()
        for task in scan_tasks(small_config(suite='theta')):
            self.assertReportPasses(task.run(rng))

    def test_eigenvalue_tasks_pass(self):
        rng = self.make_rng()
        for task in scan_tasks(small_config(suite='eigenvalue', L='1..3')):
            self.assertReportPasses(task.run(rng))

    def test_random_conjecture(self):
        report = check_random_conjecture(2, Nome.make(0.3), 0.2, True,
                                         self.make_rng())
        inhom = report[0].params['inhomogeneities']
        self.assertEqual(inhom[0], 0.2)
        self.assertTrue(abs(inhom[1]) <= SPREAD)
        first = check_random_conjecture(2, Nome.make(0.3), 0.2, False,
                                        np.random.default_rng(5))
        second = check_random_conjecture(2, Nome.make(0.3), 0.2, False,
                                         np.random.default_rng(5))
        self.assertEqual(first[0].params['inhomogeneities'],
                         second[0].params['inhomogeneities'])

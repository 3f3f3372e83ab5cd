'''Unit testing helpers.'''

import unittest

import numpy as np

from susy8v.report import PASS
from susy8v.theta import Nome


def check_mpmath():
    try:
        import mpmath  # pylint: disable=W0612
    except ImportError:
        return False
    else:
        return True


def check_yaml():
    try:
        import yaml  # pylint: disable=W0612
    except ImportError:
        return False
    else:
        return True


def mp_theta(j, z, p, dps=30):
    '''High-precision theta_j(z, p) from mpmath, as a complex.'''
    import mpmath
    with mpmath.workdps(dps):
        return complex(mpmath.jtheta(j, mpmath.mpmathify(z),
                                     mpmath.mpf(p)))


class TestNumerics(unittest.TestCase):
    '''Boilerplate of unit tests.'''

    def make_rng(self, seed=0):
        '''A seeded generator.'''
        return np.random.default_rng(seed)

    def nome(self, p=0.3):
        '''A nome.'''
        return Nome.make(p)

    def assertSmall(self, residual, tol=1e-10, msg=None):
        '''Assert that a residual is below tol.'''
        self.assertLess(abs(residual), tol, msg)

    def assertAllClose(self, actual, desired, rtol=1e-10, atol=1e-12):
        '''Assert that two arrays agree entry by entry.'''
        actual = np.asarray(actual)
        desired = np.asarray(desired)
        self.assertEqual(actual.shape, desired.shape)
        error = np.abs(actual - desired)
        bound = atol + rtol * np.abs(desired)
        self.assertTrue(np.all(error <= bound),
                        'largest deviation %.3e' % float(np.max(error)))

    def assertReportPasses(self, report, checks=None):
        '''Assert that every record passes and the named checks appear.'''
        self.assertTrue(len(report), 'empty report')
        self.assertTrue(report.passed, prepare_error_message(report))
        if checks:
            names = set(record.check for record in report)
            for check in checks:
                self.assertIn(check, names)

    def records(self, report, check):
        '''Records of one check.'''
        return [record for record in report if record.check == check]


def prepare_error_message(report):
    '''List the records that did not pass.'''
    lines = ['Records did not pass:']
    for record in report:
        if record.status == PASS:
            continue
        lines.append('  %s: %s residual=%.3e tol=%.1e %s' %
                     (record.check, record.status, record.residual,
                      record.tol, dict(record.params)))
    return '\n'.join(lines)

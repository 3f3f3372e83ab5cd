import math
import unittest

import numpy as np

import helper
from susy8v.report import PASS
from susy8v.theta import (SAMPLES, Nome, ThetaDomainError, check_identities,
                          theta, theta_deriv)


class TestTheta(helper.TestNumerics):

    def test_nome(self):
        nome = Nome.make(0.3)
        self.assertAlmostEqual(nome.s, -math.log(0.3), places=15)
        squared = nome.squared()
        self.assertAlmostEqual(squared.p, 0.09, places=15)
        self.assertAlmostEqual(squared.s, 2 * nome.s, places=15)
        for p in (0.0, 1.0, -0.2, 1.5):
            with self.assertRaises(ThetaDomainError):
                Nome.make(p)

    def test_theta_3_at_zero(self):
        # 1 + 2 (q + q^4 + q^9 + q^16 + ...)
        self.assertAlmostEqual(theta(3, 0.0, 0.1), 1.200200002, places=15)

    def test_bare_float_nome(self):
        self.assertEqual(theta(2, 0.4, 0.3), theta(2, 0.4, Nome.make(0.3)))

    def test_real_and_complex_results(self):
        self.assertIsInstance(theta(1, 0.3, 0.2), float)
        self.assertIsInstance(theta(1, 0.3 + 0.1j, 0.2), complex)

    def test_vectorized(self):
        z = np.linspace(-1.0, 1.0, 7)
        values = theta(4, z, 0.4)
        self.assertEqual(values.shape, z.shape)
        for x, value in zip(z, values):
            self.assertAlmostEqual(value, theta(4, x, 0.4), places=15)

    def test_half_period_shifts(self):
        for p in (0.05, 0.3, 0.7):
            for z in (0.0, 0.37, 1.2):
                self.assertAlmostEqual(theta(1, z + math.pi / 2, p),
                                       theta(2, z, p), places=13)
                self.assertAlmostEqual(theta(4, z + math.pi / 2, p),
                                       theta(3, z, p), places=13)

    def test_jacobi_identity(self):
        for p in (0.01, 0.2, 0.5, 0.8):
            t2, t3, t4 = (theta(j, 0.0, p) for j in (2, 3, 4))
            self.assertSmall((t3 ** 4 - t2 ** 4 - t4 ** 4) / t3 ** 4, 1e-13)

    def test_zeros(self):
        self.assertEqual(theta(1, 0.0, 0.4), 0.0)
        self.assertSmall(theta(2, math.pi / 2, 0.4), 1e-15)

    def test_derivatives(self):
        p, z, h = 0.35, 0.6, 1e-5
        for j in (1, 2, 3, 4):
            fd = (theta(j, z + h, p) - theta(j, z - h, p)) / (2 * h)
            self.assertSmall(fd - theta_deriv(j, z, p), 1e-7)
            fd2 = (theta_deriv(j, z + h, p) -
                   theta_deriv(j, z - h, p)) / (2 * h)
            self.assertSmall(fd2 - theta_deriv(j, z, p, order=2), 1e-6)

    def test_errors(self):
        with self.assertRaises(ThetaDomainError):
            theta(5, 0.1, 0.3)
        with self.assertRaises(ThetaDomainError):
            theta_deriv(1, 0.1, 0.3, order=3)
        with self.assertRaises(ThetaDomainError):
            theta(1, 50j, 0.5)

    def test_check_identities(self):
        for p in (0.05, 0.2, 0.5, 0.8):
            report = check_identities(Nome.make(p), self.make_rng(), 10)
            self.assertReportPasses(report, ['theta.parity',
                                             'theta.quasi_periodic',
                                             'theta.derivative',
                                             'theta.derivative_at_zero'])

    def test_derivative_at_zero_near_unit_nome(self):
        report = check_identities(Nome.make(0.9), self.make_rng(), 10)
        record, = self.records(report, 'theta.derivative_at_zero')
        self.assertLess(record.residual, 1e-13)
        self.assertEqual(record.status, PASS)

    def test_default_sample_count(self):
        report = check_identities(Nome.make(0.3), self.make_rng())
        self.assertReportPasses(report)
        for check in ('theta.parity', 'theta.quasi_periodic'):
            record, = self.records(report, check)
            self.assertEqual(record.params['samples'], SAMPLES)

    @unittest.skipIf(not helper.check_mpmath(), 'require package mpmath')
    def test_against_mpmath(self):
        for p in (0.01, 0.3, 0.81):
            for z in (0.0, 0.4, 2.0, 0.3 + 0.2j):
                for j in (1, 2, 3, 4):
                    expected = helper.mp_theta(j, z, p)
                    actual = complex(theta(j, z, p))
                    self.assertSmall(abs(actual - expected) /
                                     max(1.0, abs(expected)), 1e-14)

import math

import numpy as np

import helper
from susy8v.params import (T_SINGLET, ParameterDomainError, SpectralPoint,
                           weights)
from susy8v.transfer import (TransferSpec, certify_dominance,
                             certify_singlet_eigenvalue, check_commutation,
                             check_conjecture, check_dominance,
                             check_energy_from_k, check_log_derivative,
                             check_recurrence, check_singlet_eigenvalue,
                             check_tq_commutation, check_transfer_covariance,
                             check_two_site_identities, conjecture_value,
                             free_energy, lambda_formula, transfer_apply,
                             transfer_dense, transfer_derivative_dense)
from susy8v.vertex import CONTROL_ETA


GENERIC_MU = (0.3, -0.2, 0.5)


class TestTransferSpec(helper.TestNumerics):

    def test_make(self):
        sp = SpectralPoint.make(0.3, 0.2)
        spec = TransferSpec.make(3, sp)
        self.assertEqual(spec.form, 'weights')
        self.assertEqual(spec.dim, 8)
        self.assertEqual(spec.shifts(), (0.0, 0.0, 0.0))
        self.assertIsNotNone(spec.y)
        theta_spec = TransferSpec.make(2, sp, mu=GENERIC_MU)
        self.assertEqual(theta_spec.form, 'theta')
        self.assertIsNone(theta_spec.y)

    def test_errors(self):
        sp = SpectralPoint.make(0.3, 0.2)
        with self.assertRaises(ParameterDomainError):
            TransferSpec.make(0, sp)
        with self.assertRaises(ValueError):
            TransferSpec.make(2, sp, inhomogeneities=[0.1])
        with self.assertRaises(ValueError):
            transfer_derivative_dense(TransferSpec.make(2, sp))


class TestTransferMatrix(helper.TestNumerics):

    def test_apply_matches_dense(self):
        rng = self.make_rng()
        sp = SpectralPoint.make(0.3, 0.2, 0.4)
        specs = [TransferSpec.make(3, sp),
                 TransferSpec.make(3, sp._replace(eta=CONTROL_ETA),
                                   mu=GENERIC_MU),
                 TransferSpec.make(3, sp, inhomogeneities=[0.1, -0.2, 0.05])]
        for spec in specs:
            psi = rng.normal(size=8) + 1j * rng.normal(size=8)
            self.assertAllClose(transfer_apply(spec, psi),
                                transfer_dense(spec) @ psi, rtol=1e-12)
            block = rng.normal(size=(8, 3))
            self.assertAllClose(transfer_apply(spec, block),
                                transfer_dense(spec) @ block, rtol=1e-12)

    def test_single_site_trace(self):
        sp = SpectralPoint.make(0.3, 0.2)
        spec = TransferSpec.make(1, sp, mu=GENERIC_MU)
        w0 = weights(sp, 0.0)
        self.assertAllClose(transfer_dense(spec, 0.0),
                            2 * w0.a ** 2 * np.eye(2), rtol=1e-12)

    def test_commutation(self):
        sp = SpectralPoint.make(0.2, 0.3, 0.4)
        for L in (1, 2, 3):
            self.assertReportPasses(
                check_commutation(TransferSpec.make(L, sp), 0.55),
                ['transfer.commute', 'transfer.commute_hamiltonian',
                 'transfer.commute_hamiltonian.control'])
        generic = TransferSpec.make(3, sp._replace(eta=CONTROL_ETA),
                                    mu=GENERIC_MU)
        self.assertReportPasses(check_commutation(generic, 0.55))

    def test_log_derivative(self):
        sp = SpectralPoint.make(0.3, 0.2)
        for L in (1, 2, 3):
            report = check_log_derivative(L, sp._replace(eta=CONTROL_ETA),
                                          GENERIC_MU)
            self.assertReportPasses(report, [
                'transfer.initial', 'transfer.log_derivative',
                'transfer.log_derivative.finite_difference'])

    def test_energy_from_k(self):
        for p in (0.1, 0.5):
            sp = SpectralPoint.make(p, 0.2)
            for L in (1, 3):
                self.assertReportPasses(check_energy_from_k(L, sp),
                                        ['transfer.energy_from_k.boundary',
                                         'transfer.energy_from_k'])


class TestSingletEigenvalue(helper.TestNumerics):

    def test_certificate(self):
        for L in (1, 2, 3, 4):
            cert = certify_singlet_eigenvalue(L, self.nome(0.3), 0.2)
            self.assertEqual(cert.multiplicity, 1)
            self.assertTrue(cert.is_largest)
            self.assertGreater(cert.gap_to_next, 0.0)
            self.assertSmall(1.0 - cert.overlap, 1e-8)

    def test_check(self):
        for p, u in ((0.2, 0.1), (0.5, 0.3), (0.3, 0.9)):
            report = check_singlet_eigenvalue(3, self.nome(p), u)
            self.assertReportPasses(report, [
                'transfer.eigenvalue.residual', 'transfer.eigenvalue.match',
                'transfer.eigenvalue.multiplicity',
                'transfer.eigenvalue.overlap', 'transfer.rayleigh'])

    def test_tq(self):
        for L in (1, 2):
            self.assertReportPasses(check_tq_commutation(L, self.nome(0.3),
                                                         0.2),
                                    ['transfer.tq', 'transfer.tq.control'])

    def test_two_site(self):
        for p, u in ((0.2, 0.1), (0.5, 0.3)):
            self.assertReportPasses(check_two_site_identities(self.nome(p), u),
                                    ['transfer.one_site', 'transfer.two_site',
                                     'transfer.two_site.factor',
                                     'transfer.one_site.control',
                                     'transfer.two_site.control'])

    def test_recurrence(self):
        report = check_recurrence(self.nome(0.3), 0.2, [1, 2, 3, 4])
        self.assertReportPasses(report, ['transfer.recurrence'])
        self.assertEqual(len(report), 2)
        report = check_recurrence(self.nome(0.3), 0.2, [2])
        self.assertEqual(report[0].status, 'inconclusive')

    def test_covariance(self):
        report = check_transfer_covariance(2, self.nome(0.4), 0.25)
        self.assertReportPasses(report, ['transfer.covariance',
                                         'transfer.covariance.eigenvalue'])
        self.assertEqual(len(report), 6)


class TestDominance(helper.TestNumerics):

    def test_dense(self):
        for L in (1, 2, 3, 4):
            report = check_dominance(L, self.nome(0.3), 0.2)
            self.assertReportPasses(report, [
                'transfer.dominance.positive', 'transfer.dominance.top',
                'transfer.dominance.residual', 'transfer.dominance.gap',
                'transfer.free_energy', 'transfer.free_energy.measured'])

    def test_matrix_free(self):
        cert, margin, sampled = certify_dominance(5, self.nome(0.3), 0.2,
                                                  True, self.make_rng())
        self.assertTrue(sampled)
        self.assertGreater(margin, 0.0)
        self.assertTrue(cert.is_largest)
        self.assertSmall(abs(cert.lambda_measured - cert.lambda_formula) /
                         abs(cert.lambda_formula), 1e-8)

    def test_outside_positive_range(self):
        with self.assertRaises(ParameterDomainError):
            certify_dominance(2, self.nome(0.3), math.pi / 3)

    def test_free_energy(self):
        sp = SpectralPoint.make(0.3, 0.2, T_SINGLET)
        spec = TransferSpec.make(3, sp)
        w = weights(sp)
        energy = free_energy(w, spec.kpair())
        self.assertAlmostEqual(
            -math.log(abs(lambda_formula(3, w, spec.kpair()))),
            6 * energy.bulk + energy.boundary, places=12)


class TestConjecture(helper.TestNumerics):

    def test_homogeneous_limit(self):
        sp = SpectralPoint.make(0.3, 0.2, T_SINGLET)
        spec = TransferSpec.make(3, sp, inhomogeneities=[0.0] * 3)
        self.assertAlmostEqual(conjecture_value(spec) /
                               lambda_formula(3, weights(sp), spec.kpair()),
                               1.0, places=12)
        self.assertReportPasses(check_conjecture(3, self.nome(0.3), 0.2,
                                                 [0.0] * 3),
                                ['transfer.conjecture'])

    def test_record(self):
        report = check_conjecture(2, self.nome(0.3), 0.2, [0.2, -0.07])
        self.assertEqual(len(report), 1)
        params = report[0].params
        self.assertEqual(params['inhomogeneities'], [0.2, -0.07])
        self.assertTrue(0.0 <= params['overlap'] <= 1.0 + 1e-12)

    def assertConjectureHolds(self, L, u, inhom):
        report = check_conjecture(L, self.nome(0.3), u, inhom)
        self.assertReportPasses(report, ['transfer.conjecture'])
        self.assertGreaterEqual(report[0].params['multiplicity'], 1)
        sp = SpectralPoint.make(0.3, u, T_SINGLET)
        spec = TransferSpec.make(L, sp, inhomogeneities=inhom)
        target = conjecture_value(spec)
        eigenvalues = np.linalg.eigvals(transfer_dense(spec))
        self.assertLess(np.min(np.abs(eigenvalues - target)) / abs(target),
                        1e-8)

    def test_random_inhomogeneities(self):
        rng = self.make_rng(11)
        for L in (2, 3):
            self.assertConjectureHolds(L, 0.2,
                                       list(rng.uniform(-0.3, 0.3, size=L)))

    def test_pinned_inhomogeneity(self):
        for L in (2, 3):
            inhom = [0.2] + [-0.11, 0.07][:L - 1]
            self.assertConjectureHolds(L, 0.2, inhom)

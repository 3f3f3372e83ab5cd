import numpy as np

import helper
from susy8v.params import (ETA_SUSY, T_DEGENERATE, T_SINGLET,
                           ParameterDomainError, SpectralPoint,
                           anisotropy_from_weights, anisotropy_theta,
                           boundary_coupling_sum, boundary_energy,
                           chain_couplings, check_parameter_map, check_roots,
                           check_weights, combined_weight_residual,
                           ground_energy, principal_root, raw_couplings,
                           rotated_root, singlet_polynomial,
                           susy_normalization, weight_derivatives, weights,
                           y_of_t, y_roots, zeta_of_nome)


class TestSpectralPoint(helper.TestNumerics):

    def test_make(self):
        sp = SpectralPoint.make(0.3, 0.2)
        self.assertEqual(sp.nome.p, 0.3)
        self.assertEqual(sp.t, T_SINGLET)
        self.assertEqual(sp.eta, ETA_SUSY)
        self.assertTrue(sp.is_supersymmetric)
        self.assertFalse(sp._replace(eta=0.9).is_supersymmetric)

    def test_domain(self):
        with self.assertRaises(ParameterDomainError):
            SpectralPoint.make(0.3, 0.2, t=2.0)
        with self.assertRaises(ParameterDomainError):
            SpectralPoint.make(0.3, 0.2, rho=0.0)


class TestWeights(helper.TestNumerics):

    def test_combined_weights(self):
        for p in (0.01, 0.2, 0.5):
            for u in (-0.4, 0.1, 0.3, 1.7):
                sp = SpectralPoint.make(p, u)
                self.assertSmall(combined_weight_residual(weights(sp)),
                                 1e-12)

    def test_combined_weights_fail_off_eta(self):
        sp = SpectralPoint.make(0.3, 0.2)._replace(eta=0.9)
        self.assertGreater(combined_weight_residual(weights(sp)), 1e-3)

    def test_zeta(self):
        for p in (0.05, 0.3, 0.5):
            sp = SpectralPoint.make(p, 0.25)
            w = weights(sp)
            zeta = zeta_of_nome(sp.nome)
            self.assertTrue(0.0 < zeta < 1.0)
            self.assertSmall((w.c * w.d / (w.a * w.b) - zeta) / zeta, 1e-12)

    def test_weights_at_zero(self):
        w = weights(SpectralPoint.make(0.3, 0.2), 0.0)
        self.assertEqual(w.b, 0.0)
        self.assertEqual(w.d, 0.0)
        self.assertGreater(w.a, 0.0)
        self.assertAlmostEqual(w.a, w.c, places=14)

    def test_positive(self):
        sp = SpectralPoint.make(0.4, 0.5)
        self.assertTrue(all(value > 0 for value in weights(sp)))

    def test_rho_scales(self):
        sp = SpectralPoint.make(0.4, 0.5)
        scaled = weights(sp._replace(rho=2.5))
        for x, y in zip(weights(sp), scaled):
            self.assertAlmostEqual(2.5 * x, y, places=13)

    def test_derivatives(self):
        sp = SpectralPoint.make(0.3, 0.2)
        h = 1e-5
        plus, minus = weights(sp, 0.2 + h), weights(sp, 0.2 - h)
        for fd_plus, fd_minus, exact in zip(plus, minus,
                                            weight_derivatives(sp)):
            self.assertSmall((fd_plus - fd_minus) / (2 * h) - exact, 1e-8)

    def test_check_weights(self):
        report = check_weights(SpectralPoint.make(0.2, 0.1))
        self.assertReportPasses(report, ['params.combined_weights',
                                         'params.zeta', 'params.positive'])
        report = check_weights(SpectralPoint.make(0.2, 1.4))
        self.assertEqual(self.records(report, 'params.positive'), [])


class TestRoots(helper.TestNumerics):

    def test_y_of_t(self):
        self.assertEqual(y_of_t(0.3, 0.0), 0.0)
        self.assertLess(y_of_t(0.3, T_DEGENERATE), 1.0)
        with self.assertRaises(ParameterDomainError):
            y_of_t(0.3, -0.1)

    def test_roots(self):
        for p in (0.01, 0.2, 0.5):
            zeta = zeta_of_nome(p)
            roots = y_roots(zeta)
            self.assertEqual(list(roots), sorted(roots))
            for y in roots:
                self.assertSmall(singlet_polynomial(zeta, y) /
                                 (zeta * (1 + y ** 4)), 1e-13)
            y0 = principal_root(zeta)
            self.assertTrue(0.0 < y0 < 1.0)
            self.assertSmall(y0 - y_of_t(p, T_SINGLET), 1e-12)

    def test_rotated_roots(self):
        zeta = zeta_of_nome(0.3)
        y0 = principal_root(zeta)
        self.assertEqual(rotated_root(y0, 3), -y0)
        for alpha in (1, 2, 3):
            self.assertSmall(singlet_polynomial(zeta,
                                                rotated_root(y0, alpha)),
                             1e-12)

    def test_zeta_domain(self):
        for zeta in (0.0, 1.0, 1.5):
            with self.assertRaises(ParameterDomainError):
                y_roots(zeta)

    def test_check_roots(self):
        self.assertReportPasses(check_roots(0.3), ['params.roots',
                                                   'params.principal_root',
                                                   'params.anisotropy'])

    def test_check_parameter_map(self):
        report = check_parameter_map([0.2, 0.5], [T_SINGLET, 0.4, 0.0,
                                                  T_DEGENERATE])
        self.assertReportPasses(report, ['params.injective',
                                         'params.domain'])


class TestCouplings(helper.TestNumerics):

    def test_chain_couplings(self):
        sp = SpectralPoint.make(0.3, 0.2)
        couplings = chain_couplings(sp)
        zeta = couplings.zeta
        self.assertAllClose(couplings.J, (1 + zeta, 1 - zeta,
                                          (zeta * zeta - 1) / 2))
        self.assertAllClose(anisotropy_from_weights(sp), couplings.J,
                            rtol=1e-11)
        self.assertAllClose(anisotropy_theta(sp), couplings.J, rtol=1e-11)
        with self.assertRaises(ParameterDomainError):
            chain_couplings(sp._replace(eta=0.9))

    def test_raw_couplings_real_y(self):
        couplings = raw_couplings(0.4, 0.5)
        self.assertEqual(couplings.lam[1], 0.0)
        self.assertAlmostEqual(couplings.lam[0], -1.4 * 0.5 / 1.25)

    def test_boundary_sum(self):
        for p in (0.1, 0.4):
            zeta = zeta_of_nome(p)
            total = boundary_coupling_sum(raw_couplings(zeta,
                                                        principal_root(zeta)))
            self.assertSmall(total - boundary_energy(zeta) / 2, 1e-12)

    def test_ground_energy(self):
        zeta = 0.3
        self.assertAlmostEqual(ground_energy(1, zeta), -(1.3 ** 2) / 2)
        self.assertAlmostEqual(ground_energy(3, zeta),
                               -2 * 3.09 / 4 - 1.69 / 2)
        # -E_0 = L (3 + zeta^2)/4 + boundary energy
        for L in (1, 4):
            self.assertAlmostEqual(-ground_energy(L, zeta),
                                   L * 3.09 / 4 + boundary_energy(zeta))
        with self.assertRaises(ParameterDomainError):
            ground_energy(0, zeta)

    def test_normalization(self):
        norm = susy_normalization(0.3, 0.0)
        self.assertAlmostEqual(norm.x, 1.0)
        self.assertAlmostEqual(norm.lambda0, (1 + 3 * 0.09) / 4)
        with self.assertRaises(ParameterDomainError):
            susy_normalization(1.0, 1.0)

    def test_normalization_positive_on_grid(self):
        for p in (0.2, 0.5):
            for t in (0.0, 0.4, T_SINGLET, T_DEGENERATE):
                zeta, y = zeta_of_nome(p), y_of_t(p, t)
                self.assertGreater(susy_normalization(zeta, y).x, 0.0)

    def test_y_increasing(self):
        y = np.array([y_of_t(0.3, t) for t in (0.1, 0.2, 0.3)])
        self.assertTrue(np.all(np.diff(y) > 0))

import numpy as np

import helper
from susy8v.hamiltonian import (annihilation, check_affine_relation,
                                check_boundary_energy, check_chain_couplings,
                                check_energy_slope, check_ground_states,
                                check_hq_commutation, check_perron,
                                check_rotations, ground_state, xyz_at,
                                xyz_hamiltonian)
from susy8v.linalg import SIGMA
from susy8v.params import (T_SINGLET, SpectralPoint, ground_energy,
                           principal_root, raw_couplings, y_of_t,
                           zeta_of_nome)
from susy8v.susy import supercharge_at


class TestXYZ(helper.TestNumerics):

    def test_single_site(self):
        couplings = raw_couplings(0.4, 0.5)
        H = xyz_hamiltonian(1, couplings)
        h_b = sum(lam * SIGMA[alpha]
                  for alpha, lam in zip((1, 2, 3), couplings.lam))
        self.assertAllClose(H, 2 * h_b)

    def test_two_sites_without_fields(self):
        couplings = raw_couplings(0.4, 0.0)._replace(lam=(0.0, 0.0, 0.0))
        H = xyz_hamiltonian(2, couplings)
        J = couplings.J
        expected = -0.5 * sum(j * np.kron(SIGMA[a], SIGMA[a])
                              for a, j in zip((1, 2, 3), J))
        self.assertAllClose(H, expected)

    def test_hermitian_for_complex_y(self):
        H = xyz_at(3, 0.5, 0.3 + 0.6j)
        self.assertAllClose(H, H.conj().T)
        with self.assertRaises(ValueError):
            xyz_at(0, 0.5, 0.3)

    def test_ground_state(self):
        energy, psi, gap = ground_state(np.diag([2.0, -1.0, 0.5]))
        self.assertEqual(energy, -1.0)
        self.assertAlmostEqual(abs(psi[1]), 1.0)
        self.assertEqual(gap, 1.5)


class TestSupersymmetric(helper.TestNumerics):

    def test_affine_relation(self):
        for p, t in ((0.2, T_SINGLET), (0.5, 0.4), (0.3, 0.0)):
            zeta = zeta_of_nome(p)
            for L in (1, 2, 4):
                report = check_affine_relation(L, zeta, y_of_t(p, t))
                self.assertReportPasses(report, ['hamiltonian.affine',
                                                 'hamiltonian.affine.fit',
                                                 'hamiltonian.hermitian',
                                                 'hamiltonian.nonnegative'])

    def test_affine_relation_complex_y(self):
        report = check_affine_relation(3, 0.6, 0.2 + 0.5j)
        self.assertReportPasses(report, ['hamiltonian.affine'])

    def test_hq_commutation(self):
        q = supercharge_at(0.3, 0.4)
        for L in (1, 2, 3):
            self.assertReportPasses(check_hq_commutation(q, L))

    def test_rotations(self):
        report = check_rotations(3, 0.4, 0.3 + 0.2j)
        self.assertReportPasses(report, ['hamiltonian.rotation',
                                         'hamiltonian.rotation.unitary'])
        self.assertEqual(len(self.records(report, 'hamiltonian.rotation')),
                         6)
        for record in self.records(report, 'hamiltonian.rotation.unitary'):
            self.assertLess(record.residual, 1e-14)

    def test_chain_couplings(self):
        for t in (0.0, 0.4, T_SINGLET):
            self.assertReportPasses(check_chain_couplings(
                SpectralPoint.make(0.3, 0.1, t)))


class TestGroundState(helper.TestNumerics):

    def test_singlet_energy(self):
        nome = self.nome(0.2)
        zeta = zeta_of_nome(nome)
        y0 = principal_root(zeta)
        for L in (1, 2, 3, 5):
            energy, psi, gap = ground_state(xyz_at(L, zeta, y0))
            self.assertSmall(energy - ground_energy(L, zeta), 1e-9)
            self.assertGreater(gap, 1e-6)
            self.assertSmall(annihilation(zeta, y0, psi, L), 1e-9)

    def test_off_root_not_annihilated(self):
        zeta = zeta_of_nome(0.2)
        y = 0.5 * principal_root(zeta)
        _, psi, _ = ground_state(xyz_at(3, zeta, y))
        self.assertGreater(annihilation(zeta, y, psi, 3), 1e-4)

    def test_check_ground_states(self):
        report = check_ground_states(3, self.nome(0.5))
        self.assertReportPasses(report, [
            'hamiltonian.root_of_theta', 'hamiltonian.ground_state.energy',
            'hamiltonian.ground_state.gap',
            'hamiltonian.ground_state.annihilated',
            'hamiltonian.ground_state.off_root'])
        self.assertEqual(
            len(self.records(report, 'hamiltonian.ground_state.energy')), 4)

    def test_perron(self):
        zeta = zeta_of_nome(0.3)
        for L in (2, 4):
            self.assertReportPasses(check_perron(L, zeta,
                                                 principal_root(zeta)),
                                    ['hamiltonian.perron.nonnegative',
                                     'hamiltonian.perron.positive'])

    def test_energy_slope(self):
        report = check_energy_slope(self.nome(0.3), [2, 3, 4, 5])
        self.assertReportPasses(report, ['hamiltonian.energy_slope',
                                         'hamiltonian.energy_slope.fit'])
        report = check_energy_slope(self.nome(0.3), [3])
        self.assertEqual(report[0].status, 'inconclusive')

    def test_boundary_energy(self):
        self.assertReportPasses(check_boundary_energy(zeta_of_nome(0.4)),
                                ['hamiltonian.boundary_energy',
                                 'hamiltonian.boundary_energy.sum'])

import math

import numpy as np

import helper
from susy8v import linalg
from susy8v.linalg import (DENSE_CAP, DOWN, IDENTITY, SIGMA, SWAP, UP,
                           DenseCapError, InconclusiveRankError, apply_one,
                           apply_pair, check_dense, count_near, eig_dense,
                           eig_extreme, fit_affine, fit_scalar,
                           kron_all, kron_insert, kron_place,
                           numeric_rank, partial_trace_aux,
                           partial_transpose_aux, place_pair, product_state,
                           relative_residual, rotation,
                           unitarity_defect)


class TestKron(helper.TestNumerics):

    def test_site_order(self):
        # Site 1 is the most significant bit, up is 0.
        state = kron_all(DOWN, UP, UP)
        self.assertEqual(int(np.argmax(np.abs(state))), 4)
        flipped = kron_place(SIGMA[1], 3, 3) @ state
        self.assertEqual(int(np.argmax(np.abs(flipped))), 5)

    def test_kron_place(self):
        op = kron_place(np.kron(SIGMA[3], SIGMA[3]), 2, 4)
        expected = kron_all(IDENTITY, SIGMA[3], SIGMA[3], IDENTITY)
        self.assertAllClose(op, expected)
        with self.assertRaises(ValueError):
            kron_place(SWAP, 4, 4)
        with self.assertRaises(ValueError):
            kron_place(np.ones((3, 3)), 1, 4)

    def test_kron_insert(self):
        split = np.array([[1, 0], [0, 0], [0, 0], [0, 1]], dtype=complex)
        op = kron_insert(split, 2, 3)
        self.assertEqual(op.shape, (16, 8))
        self.assertAllClose(op @ kron_all(UP, DOWN, UP),
                            kron_all(UP, DOWN, DOWN, UP))

    def test_dense_cap(self):
        check_dense(DENSE_CAP)
        with self.assertRaises(DenseCapError):
            check_dense(2 * DENSE_CAP)
        with self.assertRaises(DenseCapError):
            rotation(1, math.pi, 13)


class TestApply(helper.TestNumerics):

    def test_apply_one(self):
        rng = self.make_rng()
        psi = rng.normal(size=8) + 1j * rng.normal(size=8)
        for site in (1, 2, 3):
            self.assertAllClose(apply_one(SIGMA[2], psi, site, 3),
                                kron_place(SIGMA[2], site, 3) @ psi)

    def test_apply_pair_nonadjacent(self):
        rng = self.make_rng(1)
        op = rng.normal(size=(4, 4))
        psi = rng.normal(size=(8, 2))
        # Pair (3, 1) is (1, 3) conjugated by the swap of the two sites.
        direct = apply_pair(op, psi, 3, 1, 3)
        via_swap = apply_pair(SWAP @ op @ SWAP, psi, 1, 3, 3)
        self.assertAllClose(direct, via_swap)
        adjacent = apply_pair(op, psi, 1, 2, 3)
        self.assertAllClose(adjacent, kron_place(op, 1, 3) @ psi)
        with self.assertRaises(ValueError):
            apply_pair(op, psi, 2, 2, 3)

    def test_place_pair(self):
        rng = self.make_rng(2)
        op = rng.normal(size=(4, 4))
        self.assertAllClose(place_pair(op, 2, 3, 3), kron_place(op, 2, 3))
        self.assertAllClose(place_pair(SWAP, 1, 3, 3) @
                            kron_all(UP, UP, DOWN), kron_all(DOWN, UP, UP))


class TestAuxiliary(helper.TestNumerics):

    def test_partial_trace(self):
        A = np.array([[1.0, 2.0], [3.0, 4.0]])
        B = np.array([[0.5, 1.0], [-1.0, 2.0]])
        self.assertAllClose(partial_trace_aux(np.kron(A, B)), 5.0 * B)
        with self.assertRaises(ValueError):
            partial_trace_aux(np.ones((3, 3)))

    def test_partial_transpose(self):
        A = np.array([[1.0, 2.0], [3.0, 4.0]])
        B = np.array([[0.5, 1.0], [-1.0, 2.0]])
        self.assertAllClose(partial_transpose_aux(np.kron(A, B)),
                            np.kron(A.T, B))

    def test_rotation(self):
        R = rotation(3, math.pi, 2)
        self.assertSmall(unitarity_defect(R), 1e-14)
        self.assertGreater(unitarity_defect(2 * R), 1.0)
        # exp(i pi/2 sigma^z) = i sigma^z on each site.
        self.assertAllClose(R, -np.kron(SIGMA[3], SIGMA[3]))

    def test_product_state(self):
        state = product_state(np.array([1.0, 2.0]), 2)
        self.assertAllClose(state, np.array([1.0, 2.0, 2.0, 4.0]))


class TestRank(helper.TestNumerics):

    def test_kernel(self):
        matrix = np.array([[1.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
        rank, kernel = numeric_rank(matrix)
        self.assertEqual(rank, 2)
        self.assertEqual(kernel.shape, (3, 1))
        self.assertSmall(np.linalg.norm(matrix @ kernel), 1e-14)

    def test_zero(self):
        rank, kernel = numeric_rank(np.zeros((2, 3)))
        self.assertEqual(rank, 0)
        self.assertEqual(kernel.shape, (3, 3))

    def test_inconclusive(self):
        with self.assertRaises(InconclusiveRankError):
            numeric_rank(np.diag([1.0, 1e-9]))


class TestSpectrum(helper.TestNumerics):

    def test_eig_dense_order(self):
        matrix = np.diag([1.0, 3.0, -5.0, 2.0 + 1j])
        result = eig_dense(matrix)
        self.assertAllClose(result.eigenvalues,
                            np.array([3.0, 2.0 + 1j, 1.0, -5.0]))
        self.assertSmall(result.residual, 1e-14)
        self.assertEqual(len(result.degeneracy_gaps), 3)

    def test_eig_extreme_matches_dense(self):
        rng = self.make_rng(3)
        dim = 200
        matrix = rng.uniform(0.0, 1.0, size=(dim, dim))
        result = eig_extreme(lambda v: matrix @ v, dim, k=2)
        top = np.max(np.linalg.eigvals(matrix).real)
        self.assertSmall((result.eigenvalues[0] - top) / top, 1e-10)
        self.assertSmall(result.residual, 1e-9)

    def test_eig_extreme_small(self):
        matrix = np.diag([1.0, 4.0, 2.0])
        result = eig_extreme(lambda v: matrix @ v, 3, k=1)
        self.assertAlmostEqual(result.eigenvalues[0], 4.0)
        with self.assertRaises(ValueError):
            eig_extreme(lambda v: v, 3, which='SM')

    def test_count_near(self):
        self.assertEqual(count_near([1.0, 1.0 + 1e-12, 2.0], 1.0), 2)


class TestFits(helper.TestNumerics):

    def test_relative_residual(self):
        self.assertEqual(relative_residual(np.zeros(2), np.zeros(2)), 0.0)
        self.assertAlmostEqual(relative_residual([1.0, 0.0], [0.0, 0.0]),
                               1.0)

    def test_fit_scalar(self):
        basis = np.array([1.0, 2.0j, -1.0])
        coeff, residual = fit_scalar((0.5 - 2j) * basis, basis)
        self.assertAlmostEqual(coeff, 0.5 - 2j)
        self.assertSmall(residual, 1e-15)
        _, residual = fit_scalar(np.array([1.0, 0.0]), np.array([0.0, 1.0]))
        self.assertAlmostEqual(residual, 1.0)

    def test_fit_affine(self):
        basis = np.array([[1.0, 2.0], [2.0, -1.0]])
        target = 3.0 * (basis + 0.25 * np.eye(2))
        x, shift, residual = fit_affine(target, basis)
        self.assertAlmostEqual(x, 3.0)
        self.assertAlmostEqual(shift, 0.25)
        self.assertSmall(residual, 1e-14)

    def test_gap_floor(self):
        self.assertLess(linalg.rank_tolerance((64, 64)), linalg.GAP_FLOOR)

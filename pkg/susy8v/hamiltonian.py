# Copyright (C) 2026 The susy8v Authors.

'''The open XYZ chain with boundary fields and its supersymmetric form.'''

from collections import namedtuple
import logging
import math

import numpy as np

from susy8v import linalg
from susy8v.linalg import SIGMA, kron_place, rotation
from susy8v.params import (anisotropy_from_weights, anisotropy_theta,
                           boundary_coupling_sum, boundary_energy,
                           chain_couplings, ground_energy, principal_root,
                           raw_couplings, rotated_root, singlet_polynomial,
                           susy_normalization, zeta_of_nome, y_of_t,
                           T_SINGLET)
from susy8v.report import Report
from susy8v.susy import global_supercharge, local_supercharge


TOL_IDENTITY = 1e-10
TOL_HERMITIAN = 1e-12
TOL_ENERGY = 1e-9
TOL_GAP = 1e-6

# Off-root controls: y = factor * y0 for each factor.
OFF_ROOT_FACTORS = (0.0, 0.5, 0.9, 1.2, 0.7 + 0.4j)
OFF_ROOT_ANNIHILATION = 1e-4
OFF_ROOT_ENERGY = 1e-6


HamiltonianPair = namedtuple('HamiltonianPair', 'H_xyz H_susy x lambda0 L')


def _bond(alpha, j, L):
    '''sigma^alpha_j sigma^alpha_(j+1) on L sites.'''
    return kron_place(np.kron(SIGMA[alpha], SIGMA[alpha]), j, L)


def boundary_term(couplings):
    '''Return h_B = sum_alpha lambda_alpha sigma^alpha.'''
    return sum(lam * SIGMA[alpha]
               for alpha, lam in zip((1, 2, 3), couplings.lam))


def xyz_hamiltonian(L, couplings):
    '''Return H_XYZ on L sites: bulk XYZ bonds plus h_B on sites 1 and L.'''
    if L < 1:
        raise ValueError('chain length %r is below 1' % L)
    linalg.check_dense(2 ** L)
    h_b = boundary_term(couplings)
    H = kron_place(h_b, 1, L) + kron_place(h_b, L, L)
    for j in range(1, L):
        for alpha, J in zip((1, 2, 3), couplings.J):
            H = H - 0.5 * J * _bond(alpha, j, L)
    return H


def xyz_at(L, zeta, y):
    '''H_XYZ(zeta, y) from raw constants, without domain validation.'''
    return xyz_hamiltonian(L, raw_couplings(zeta, y))


def susy_hamiltonian(q, L):
    '''Return Q^dagger Q + Q Q^dagger on V^L (Q^dagger Q alone for L=1).'''
    Q = global_supercharge(q, L)
    H = Q.conj().T @ Q
    if L > 1:
        lower = global_supercharge(q, L - 1)
        H = H + lower @ lower.conj().T
    return H


def affine_shift(L, zeta, lambda0):
    '''Return (L-1)(zeta^2+3)/4 + 2 lambda_0.'''
    return (L - 1) * (zeta * zeta + 3) / 4 + 2 * lambda0


def hamiltonian_pair(L, zeta, y):
    '''Both Hamiltonians and the constants relating them.'''
    norm = susy_normalization(zeta, y)
    return HamiltonianPair(H_xyz=xyz_at(L, zeta, y),
                           H_susy=susy_hamiltonian(local_supercharge(zeta, y),
                                                   L),
                           x=norm.x, lambda0=norm.lambda0, L=L)


def affine_residual(pair, zeta):
    '''Return |H_susy - x (H_XYZ + shift)| / |H_susy|.'''
    shift = affine_shift(pair.L, zeta, pair.lambda0)
    target = pair.x * (pair.H_xyz + shift * np.eye(pair.H_xyz.shape[0]))
    return linalg.relative_residual(pair.H_susy, target)


def check_affine_relation(L, zeta, y):
    '''Certify H_susy = x (H_XYZ + (L-1)(zeta^2+3)/4 + 2 lambda_0).

    A least-squares fit of H_susy against H_XYZ and the identity
    recovers x and the shift independently of the closed forms.
    '''
    report = Report()
    params = dict(L=L, zeta=zeta, y=complex(y))
    pair = hamiltonian_pair(L, zeta, y)
    report.add('hamiltonian.affine', affine_residual(pair, zeta),
               TOL_IDENTITY, **params)
    x_fit, shift_fit, _ = linalg.fit_affine(pair.H_susy, pair.H_xyz)
    shift = affine_shift(L, zeta, pair.lambda0)
    report.add('hamiltonian.affine.fit',
               max(abs(x_fit - pair.x) / pair.x,
                   abs(shift_fit - shift) / max(abs(shift), 1.0)),
               TOL_IDENTITY, **params)
    for name, H in (('xyz', pair.H_xyz), ('susy', pair.H_susy)):
        report.add('hamiltonian.hermitian',
                   np.linalg.norm(H - H.conj().T) /
                   max(np.linalg.norm(H), 1.0), TOL_HERMITIAN,
                   operator=name, **params)
    values = np.linalg.eigvalsh(pair.H_susy)
    scale = max(np.linalg.norm(pair.H_susy, 2), 1.0)
    report.add('hamiltonian.nonnegative', max(-values[0], 0.0) / scale,
               TOL_IDENTITY, **params)
    return report


def check_chain_couplings(sp):
    '''Certify J_alpha against the weight and theta forms at a point.'''
    report = Report()
    params = dict(p=sp.nome.p, t=sp.t)
    couplings = chain_couplings(sp)
    report.add('hamiltonian.anisotropy.weights',
               linalg.relative_residual(anisotropy_from_weights(sp),
                                        couplings.J), 1e-11, **params)
    report.add('hamiltonian.anisotropy.theta',
               linalg.relative_residual(anisotropy_theta(sp), couplings.J),
               1e-11, **params)
    report.add('hamiltonian.anisotropy.zeta',
               abs((couplings.J[0] - couplings.J[1]) / 2 - couplings.zeta),
               1e-12, **params)
    return report


def check_hq_commutation(q, L):
    '''Certify H_(L+1) Q = Q H_L.'''
    report = Report()
    Q = global_supercharge(q, L)
    lower = susy_hamiltonian(q, L)
    upper = susy_hamiltonian(q, L + 1)
    scale = np.linalg.norm(upper) * np.linalg.norm(Q)
    report.add('hamiltonian.commutes_with_q',
               np.linalg.norm(upper @ Q - Q @ lower) / scale, TOL_IDENTITY,
               L=L, zeta=q.zeta, y=q.y)
    return report


def rotation_images(zeta, y):
    '''Return (alpha, angle, prefactor, zeta', y') for the six identities.'''
    y = complex(y)
    return (
        (1, math.pi / 2, ((1 + zeta) / 2) ** 2, (3 - zeta) / (1 + zeta),
         (y - 1j) / (1 - 1j * y)),
        (2, math.pi / 2, ((1 - zeta) / 2) ** 2, (zeta + 3) / (zeta - 1),
         (1 + y) / (1 - y)),
        (3, math.pi / 2, 1.0, -zeta, -1j * y),
        (1, math.pi, 1.0, zeta, 1 / y),
        (2, math.pi, 1.0, zeta, -1 / y),
        (3, math.pi, 1.0, zeta, -y),
    )


def check_rotations(L, zeta, y):
    '''Certify R^alpha(theta) H(zeta, y) R^alpha(-theta) = c H(zeta', y').'''
    report = Report()
    H = xyz_at(L, zeta, y)
    for alpha, angle, prefactor, zeta2, y2 in rotation_images(zeta, y):
        params = dict(L=L, alpha=alpha, angle=angle)
        U = rotation(alpha, angle, L)
        report.add('hamiltonian.rotation.unitary', linalg.unitarity_defect(U),
                   TOL_HERMITIAN, **params)
        rotated = U @ H @ U.conj().T
        report.add('hamiltonian.rotation',
                   linalg.relative_residual(rotated,
                                            prefactor * xyz_at(L, zeta2, y2)),
                   TOL_IDENTITY, zeta=zeta, y=complex(y), **params)
    return report


def ground_state(H):
    '''Return (energy, vector, gap to the next level) of a Hermitian H.'''
    values, vectors = np.linalg.eigh(H)
    gap = float(values[1] - values[0]) if values.size > 1 else float('inf')
    return float(values[0]), vectors[:, 0], gap


def annihilation(zeta, y, psi, L):
    '''Return max(|Q psi|, |Q^dagger psi|) / (|psi| |q|).'''
    q = local_supercharge(zeta, y)
    residual = np.linalg.norm(global_supercharge(q, L) @ psi)
    if L > 1:
        residual = max(residual, np.linalg.norm(
            global_supercharge(q, L - 1).conj().T @ psi))
    return float(residual / (np.linalg.norm(psi) * np.linalg.norm(q.matrix)))


def check_ground_states(L, nome):
    '''Certify the ground states of H_XYZ at the four roots, and off them.

    The off-root direction is sampled on OFF_ROOT_FACTORS only.
    '''
    report = Report()
    zeta = zeta_of_nome(nome)
    y0 = principal_root(zeta)
    p = getattr(nome, 'p', nome)
    E0 = ground_energy(L, zeta)
    report.add('hamiltonian.root_of_theta', abs(y0 - y_of_t(nome, T_SINGLET)),
               1e-11, p=p)
    roots = [(0, y0)] + [(alpha, rotated_root(y0, alpha))
                         for alpha in (1, 2, 3)]
    for alpha, y in roots:
        params = dict(L=L, p=p, zeta=zeta, y=y, alpha=alpha)
        energy, psi, gap = ground_state(xyz_at(L, zeta, y))
        report.add('hamiltonian.ground_state.energy', abs(energy - E0),
                   TOL_ENERGY, **params)
        report.add_control('hamiltonian.ground_state.gap', gap, TOL_GAP,
                           **params)
        report.add('hamiltonian.ground_state.annihilated',
                   annihilation(zeta, y, psi, L), TOL_ENERGY, **params)

    for factor in OFF_ROOT_FACTORS:
        y = factor * y0
        energy, psi, _ = ground_state(xyz_at(L, zeta, y))
        residual = annihilation(zeta, y, psi, L)
        offset = energy - E0
        # Either criterion certifies the ground state is not a singlet.
        margin = max(residual / OFF_ROOT_ANNIHILATION,
                     abs(offset) / OFF_ROOT_ENERGY)
        logging.debug('off-root y=%s: annihilation %.3e, energy offset %.3e',
                      y, residual, offset)
        report.add_control('hamiltonian.ground_state.off_root', margin, 1.0,
                           L=L, p=p, zeta=zeta, y=complex(y),
                           annihilation=residual, energy_offset=offset,
                           polynomial=singlet_polynomial(zeta, y))
    return report


def perron_vector(H):
    '''Ground state of H as the Perron vector of lambda Id - H.

    lambda is one more than the largest absolute row sum of H.
    '''
    shift = 1.0 + np.max(np.sum(np.abs(H), axis=1))
    M = shift * np.eye(H.shape[0]) - H
    _, psi, _ = ground_state(H)
    pivot = psi[np.argmax(np.abs(psi))]
    return M, psi * (abs(pivot) / pivot)


def check_perron(L, zeta, y0):
    '''Certify lambda Id - H_XYZ >= 0 and a positive ground state.'''
    report = Report()
    params = dict(L=L, zeta=zeta, y=y0)
    M, psi = perron_vector(xyz_at(L, zeta, y0))
    report.add('hamiltonian.perron.nonnegative',
               max(-np.min(M.real), 0.0) + np.max(np.abs(M.imag)),
               TOL_HERMITIAN, **params)
    report.add_control('hamiltonian.perron.positive',
                       np.min(psi.real) / np.max(np.abs(psi)), 0.0, **params)
    return report


def check_energy_slope(nome, Ls):
    '''Certify the singlet energy is affine in L, slope -(3+zeta^2)/4.'''
    report = Report()
    zeta = zeta_of_nome(nome)
    y0 = principal_root(zeta)
    Ls = sorted(Ls)
    energies = [ground_state(xyz_at(L, zeta, y0))[0] for L in Ls]
    params = dict(p=getattr(nome, 'p', nome), zeta=zeta, Ls=list(Ls))
    if len(Ls) < 2:
        report.add_inconclusive('hamiltonian.energy_slope',
                                'need two chain lengths, got %r' % Ls,
                                **params)
        return report
    slope, intercept = np.polyfit(Ls, energies, 1)
    fitted = slope * np.array(Ls) + intercept
    report.add('hamiltonian.energy_slope.fit',
               float(np.max(np.abs(fitted - energies))), TOL_ENERGY, **params)
    report.add('hamiltonian.energy_slope',
               abs(slope + (3 + zeta * zeta) / 4), TOL_ENERGY, **params)
    return report


def check_boundary_energy(zeta):
    '''Certify the boundary-field route to E_0.

    sum_alpha lambda_alpha^2 / J_alpha at y0 is (zeta^2 + 4 zeta - 1)/8, and
    E_0 = -L(3+zeta^2)/4 - (zeta^2 + 4 zeta - 1)/4.
    '''
    report = Report()
    y0 = principal_root(zeta)
    total = boundary_coupling_sum(raw_couplings(zeta, y0))
    report.add('hamiltonian.boundary_energy.sum',
               abs(total - boundary_energy(zeta) / 2), 1e-12, zeta=zeta)
    for L in (1, 2, 5):
        route = -L * (3 + zeta * zeta) / 4 - boundary_energy(zeta)
        report.add('hamiltonian.boundary_energy',
                   abs(route - ground_energy(L, zeta)), 1e-12, zeta=zeta,
                   L=L)
    return report

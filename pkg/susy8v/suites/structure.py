# Copyright (C) 2026 The susy8v Authors.

'''Structural identities: supercharges, Hamiltonians, R, K and T.'''

import itertools

from susy8v import linalg
from susy8v.hamiltonian import (check_affine_relation, check_boundary_energy,
                                check_chain_couplings, check_hq_commutation,
                                check_rotations, susy_hamiltonian)
from susy8v.params import (SpectralPoint, principal_root, y_of_t,
                           zeta_of_nome)
from susy8v.suites.util import Task, nomes, singlet_ts, spectral_points
from susy8v.susy import (check_basis_determinants, check_cohomology,
                         check_dual_closedness, check_nilpotency,
                         check_polynomial_forms, check_q_covariance,
                         check_q_on_basis, check_singlet, is_singlet_point,
                         supercharge_at, theta_basis)
from susy8v.transfer import (TransferSpec, check_commutation,
                             check_energy_from_k, check_log_derivative,
                             check_tq_commutation, check_transfer_covariance,
                             check_two_site_identities)
from susy8v.vertex import (CONTROL_ETA, check_boundary_fields,
                           check_boundary_relations, check_k_agreement,
                           check_local_relations, check_r_matrix, mu_at)


# Second spectral parameter of the commutation checks, as an offset to u.
COMMUTE_OFFSET = 0.17

# Boundary parameters of the theta-form K away from the supersymmetric mu.
GENERIC_MU = (0.3, -0.2, 0.5)


def _fits(L, extra=1):
    '''True if V_0 (x) V^(L + extra - 1) stays within the dense cap.'''
    return 2 ** (L + extra) <= linalg.DENSE_CAP


def _check_singlet(q, L, basis):
    '''Singlet checks against the supersymmetric Hamiltonian on V^L.'''
    return check_singlet(q, L, susy_hamiltonian(q, L), basis)


def scan_susy(config):
    '''Supercharge identities over the (p, t, L) grid.'''
    for nome, t in itertools.product(nomes(config.p), config.t):
        params = dict(p=nome.p, t=t)
        q = supercharge_at(nome, t)
        basis = theta_basis(nome, t)
        yield Task.make('susy', 'susy.q_eigenvector', check_q_on_basis, q,
                        basis, **params)
        yield Task.make('susy', 'susy.determinant', check_basis_determinants,
                        basis, **params)
        if is_singlet_point(t):
            yield Task.make('susy', 'susy.polynomial_form',
                            check_polynomial_forms, basis, **params)
            yield Task.make('susy', 'susy.dual_closed',
                            check_dual_closedness, q, basis, **params)
        for L in config.L:
            if not _fits(L, 2):
                continue
            yield Task.make('susy', 'susy.nilpotent', check_nilpotency, q, L,
                            L=L, **params)
            yield Task.make('susy', 'susy.cohomology', check_cohomology,
                            nome, t, L, L=L, **params)
            if is_singlet_point(t):
                yield Task.make('susy', 'susy.singlet', _check_singlet, q, L,
                                basis, L=L, **params)
    for nome in nomes(config.p):
        zeta = zeta_of_nome(nome)
        for L in config.L:
            if not _fits(L, 2):
                continue
            yield Task.make('susy', 'susy.covariance', check_q_covariance,
                            zeta, principal_root(zeta), L, p=nome.p, L=L)


def scan_hamiltonian(config):
    '''Hamiltonian identities over the (p, t, L) grid.'''
    for nome, t in itertools.product(nomes(config.p), config.t):
        params = dict(p=nome.p, t=t)
        zeta, y = zeta_of_nome(nome), y_of_t(nome, t)
        yield Task.make('hamiltonian', 'hamiltonian.anisotropy',
                        check_chain_couplings,
                        SpectralPoint.make(nome, 0.1, t), **params)
        q = supercharge_at(nome, t)
        for L in config.L:
            if not _fits(L, 2):
                continue
            yield Task.make('hamiltonian', 'hamiltonian.affine',
                            check_affine_relation, L, zeta, y, L=L, **params)
            yield Task.make('hamiltonian', 'hamiltonian.commutes_with_q',
                            check_hq_commutation, q, L, L=L, **params)
            yield Task.make('hamiltonian', 'hamiltonian.rotation',
                            check_rotations, L, zeta, y, L=L, **params)
    for nome in nomes(config.p):
        yield Task.make('hamiltonian', 'hamiltonian.boundary_energy',
                        check_boundary_energy, zeta_of_nome(nome), p=nome.p)


def scan_vertex(config):
    '''R- and K-matrix identities and the local relations.'''
    for sp in spectral_points(config):
        params = dict(p=sp.nome.p, u=sp.u, t=sp.t)
        yield Task.make('vertex', 'vertex.k_agreement', check_k_agreement,
                        sp, **params)
        yield Task.make('vertex', 'vertex.boundary_relation',
                        check_boundary_relations, sp, **params)
        for L in config.L:
            if L < 2 or not _fits(L, 2):
                continue
            for j in range(1, L):
                yield Task.make('vertex', 'vertex.local_relation',
                                check_local_relations, sp, L, j, L=L, j=j,
                                **params)
    for nome in nomes(config.p):
        for eta in (None, CONTROL_ETA):
            sp = SpectralPoint.make(nome, config.u[0])
            if eta is not None:
                sp = sp._replace(eta=eta)
            params = dict(p=nome.p, eta=sp.eta)
            yield Task.make_seeded('vertex', 'vertex.ybe', check_r_matrix,
                                   sp, **params)
            yield Task.make_seeded('vertex', 'vertex.boundary_field',
                                   check_boundary_fields, sp, **params)


def scan_transfer(config):
    '''Commutation, log-derivative, TQ and the two-site identities.'''
    for sp in spectral_points(config):
        params = dict(p=sp.nome.p, u=sp.u, t=sp.t)
        generic = sp._replace(eta=CONTROL_ETA)
        for L in config.L:
            if not _fits(L):
                continue
            yield Task.make('transfer', 'transfer.commute', check_commutation,
                            TransferSpec.make(L, sp), sp.u + COMMUTE_OFFSET,
                            L=L, form='weights', **params)
            yield Task.make('transfer', 'transfer.commute', check_commutation,
                            TransferSpec.make(L, generic, mu=GENERIC_MU),
                            sp.u + COMMUTE_OFFSET, L=L, form='theta',
                            eta=CONTROL_ETA, **params)
    for nome in nomes(config.p):
        for L in config.L:
            if not _fits(L):
                continue
            sp = SpectralPoint.make(nome, 0.0)
            yield Task.make('transfer', 'transfer.log_derivative',
                            check_log_derivative, L, sp, mu_at(sp),
                            p=nome.p, L=L)
            yield Task.make('transfer', 'transfer.log_derivative',
                            check_log_derivative, L,
                            sp._replace(eta=CONTROL_ETA), GENERIC_MU,
                            p=nome.p, L=L, eta=CONTROL_ETA)
            for t in singlet_ts(config):
                yield Task.make('transfer', 'transfer.energy_from_k',
                                check_energy_from_k, L,
                                SpectralPoint.make(nome, 0.0, t),
                                p=nome.p, L=L)
    for nome, u in itertools.product(nomes(config.p), config.u):
        params = dict(p=nome.p, u=u)
        yield Task.make('transfer', 'transfer.one_site',
                        check_two_site_identities, nome, u, **params)
        for L in config.L:
            if _fits(L, 2):
                yield Task.make('transfer', 'transfer.tq',
                                check_tq_commutation, L, nome, u, L=L,
                                **params)
            if _fits(L):
                yield Task.make('transfer', 'transfer.covariance',
                                check_transfer_covariance, L, nome, u, L=L,
                                **params)

# Copyright (C) 2026 The susy8v Authors.

'''Double-row transfer matrix of the eight-vertex model on a strip.

The transfer matrix is

    T(u) = tr_0(K_0^+ U K_0^- Ubar),
    U    = R_0L(u + u_L) ... R_01(u + u_1),
    Ubar = R_01(u - u_1) ... R_0L(u - u_L),

with all u_j = 0 for the homogeneous chain.  K^+- come either from the
theta form K(u), K(u + 2 eta) with free mu_alpha, or from the weight form
at the parameter y.  Dense matrices are built from explicit products of
placed R-matrices; transfer_apply contracts the same product against a
state with the auxiliary space as a leading index and never builds a
matrix, so the two paths check each other.
'''

from collections import namedtuple
import logging
import math

import numpy as np

from susy8v import linalg
from susy8v.hamiltonian import susy_hamiltonian, xyz_at, xyz_hamiltonian
from susy8v.linalg import apply_one, apply_pair, place_pair, product_state
from susy8v.params import (ETA_SUSY, T_SINGLET, ParameterDomainError,
                           SpectralPoint, boundary_coupling_sum,
                           chain_couplings, general_couplings, ground_energy,
                           rotated_root, weight_derivatives, weights,
                           y_of_t, zeta_of_nome)
from susy8v.report import Report
from susy8v.susy import (chi_alpha, global_supercharge, local_supercharge,
                         polynomial_chi_alpha, singlet, supercharge_at,
                         theta_basis)
from susy8v.vertex import (CONTROL_ETA, k_general, k_general_derivative,
                           k_pair_general, k_pair_weights, r_derivative,
                           r_matrix)


TOL_IDENTITY = 1e-10
TOL_EIGEN = 1e-9
TOL_MATCH = 1e-8
TOL_OVERLAP = 1e-8
TOL_FREE_ENERGY = 1e-12
TOL_FINITE_DIFFERENCE = 1e-6
TOL_CONTROL = 1e-4

FD_STEP = 1e-5
SAMPLED_COLUMNS = 32

# Off-root parameter used by the controls of the two-site identities.
CONTROL_T = 0.4


class TransferSpec(namedtuple('TransferSpec', 'L sp y mu inhomogeneities')):
    '''A transfer matrix on L sites.

    With mu the K-matrices take the theta form, otherwise the weight form
    at y.
    '''

    # pylint: disable=E1101,W0232

    @classmethod
    def make(cls, L, sp, mu=None, y=None, inhomogeneities=None):
        '''Create a validated spec; y defaults to y(t) of the point.'''
        if L < 1:
            raise ParameterDomainError('chain length %r is below 1' % L)
        inhom = tuple(float(x) for x in inhomogeneities or ())
        if inhom and len(inhom) != L:
            raise ValueError('%d inhomogeneities given for L=%d' %
                             (len(inhom), L))
        if mu is None and y is None:
            y = y_of_t(sp.nome, sp.t)
        return cls(L=L, sp=sp, y=y, mu=None if mu is None else tuple(mu),
                   inhomogeneities=inhom)

    @property
    def form(self):
        '''Source of the K-matrices: 'theta' or 'weights'.'''
        return 'weights' if self.mu is None else 'theta'

    @property
    def dim(self):
        return 2 ** self.L

    def shifts(self):
        '''The inhomogeneities, zeros for the homogeneous chain.'''
        return self.inhomogeneities or (0.0,) * self.L

    def kpair(self, u=None):
        '''K^- and K^+ at spectral parameter u.'''
        if u is None:
            u = self.sp.u
        if self.mu is None:
            return k_pair_weights(weights(self.sp, u), self.y)
        return k_pair_general(self.sp, self.mu, u)

    def r_factors(self, u=None):
        '''R-matrices (forward, backward) for U and Ubar, site j at j-1.'''
        if u is None:
            u = self.sp.u
        forward = [r_matrix(weights(self.sp, u + x)).matrix
                   for x in self.shifts()]
        backward = [r_matrix(weights(self.sp, u - x)).matrix
                    for x in self.shifts()]
        return forward, backward


EigenCertificate = namedtuple('EigenCertificate', '''
    lambda_formula lambda_measured residual multiplicity is_largest
    gap_to_next overlap
    ''')

FreeEnergy = namedtuple('FreeEnergy', 'bulk boundary')


def _aux(K, L):
    '''K on the auxiliary slot of V_0 (x) V^L.'''
    return np.kron(K, np.eye(2 ** L))


def transfer_dense(spec, u=None):
    '''Dense 2^L x 2^L transfer matrix from the explicit operator product.'''
    L = spec.L
    linalg.check_dense(2 ** (L + 1))
    kpair = spec.kpair(u)
    forward, backward = spec.r_factors(u)
    op = _aux(kpair.K_plus, L)
    for j in range(L, 0, -1):
        op = op @ place_pair(forward[j - 1], 1, j + 1, L + 1)
    op = op @ _aux(kpair.K_minus, L)
    for j in range(1, L + 1):
        op = op @ place_pair(backward[j - 1], 1, j + 1, L + 1)
    return linalg.partial_trace_aux(op)


def transfer_apply(spec, psi, u=None):
    '''Return T(u) psi without building T.

    psi may carry extra trailing axes (a block of columns).
    '''
    L = spec.L
    psi = np.asarray(psi, dtype=complex)
    batch = psi.shape[1:]
    kpair = spec.kpair(u)
    forward, backward = spec.r_factors(u)

    # work[a_out, sites, a_in]: the operator applied to |a_in> (x) psi.
    work = np.zeros((2, spec.dim, 2) + batch, dtype=complex)
    work[0, :, 0] = psi
    work[1, :, 1] = psi
    work = work.reshape((2 * spec.dim, 2) + batch)
    for j in range(L, 0, -1):
        work = apply_pair(backward[j - 1], work, 1, j + 1, L + 1)
    work = apply_one(kpair.K_minus, work, 1, L + 1)
    for j in range(1, L + 1):
        work = apply_pair(forward[j - 1], work, 1, j + 1, L + 1)
    work = apply_one(kpair.K_plus, work, 1, L + 1)
    work = work.reshape((2, spec.dim, 2) + batch)
    return work[0, :, 0] + work[1, :, 1]


def transfer_derivative_dense(spec, u=None):
    '''Analytic T'(u) by the product rule over every factor.

    Needs the theta-form K-matrices.
    '''
    if spec.mu is None:
        raise ValueError('analytic derivative needs the theta-form K')
    if u is None:
        u = spec.sp.u
    L = spec.L
    linalg.check_dense(2 ** (L + 1))
    sp, mu = spec.sp, spec.mu
    shifts = spec.shifts()
    factors = [(_aux(k_general(sp, mu, u + 2 * sp.eta), L),
                _aux(k_general_derivative(sp, mu, u + 2 * sp.eta), L))]
    for j in range(L, 0, -1):
        arg = u + shifts[j - 1]
        factors.append((place_pair(r_matrix(weights(sp, arg)).matrix,
                                   1, j + 1, L + 1),
                        place_pair(r_derivative(sp, arg), 1, j + 1, L + 1)))
    factors.append((_aux(k_general(sp, mu, u), L),
                    _aux(k_general_derivative(sp, mu, u), L)))
    for j in range(1, L + 1):
        arg = u - shifts[j - 1]
        factors.append((place_pair(r_matrix(weights(sp, arg)).matrix,
                                   1, j + 1, L + 1),
                        place_pair(r_derivative(sp, arg), 1, j + 1, L + 1)))

    dim = 2 ** (L + 1)
    prefix = [np.eye(dim, dtype=complex)]
    for matrix, _ in factors:
        prefix.append(prefix[-1] @ matrix)
    total = np.zeros((dim, dim), dtype=complex)
    suffix = np.eye(dim, dtype=complex)
    for i in range(len(factors) - 1, -1, -1):
        matrix, derivative = factors[i]
        total = total + prefix[i] @ derivative @ suffix
        suffix = matrix @ suffix
    return linalg.partial_trace_aux(total)


def lambda_formula(L, w, kpair):
    '''Return (a+b)^(2L) tr(K^+ K^-).'''
    return (w.a + w.b) ** (2 * L) * np.trace(kpair.K_plus @ kpair.K_minus)


def free_energy(w, kpair):
    '''Bulk and boundary free energies -ln(a+b) and -ln tr(K^+ K^-).'''
    trace = np.trace(kpair.K_plus @ kpair.K_minus).real
    return FreeEnergy(bulk=-math.log(w.a + w.b), boundary=-math.log(trace))


def conjecture_value(spec):
    '''tr(K^+ K^-) prod_j (a+b)(u+u_j) (a+b)(u-u_j).'''
    sp = spec.sp
    kpair = spec.kpair()
    value = np.trace(kpair.K_plus @ kpair.K_minus)
    for x in spec.shifts():
        plus, minus = weights(sp, sp.u + x), weights(sp, sp.u - x)
        value = value * (plus.a + plus.b) * (minus.a + minus.b)
    return value


def rayleigh_lambda(spec, basis):
    '''<w_+^(x)L| T |v_+^(x)L> / <w_+|v_+>^L, matrix-free.'''
    v = product_state(basis.v_plus, spec.L)
    w = product_state(basis.w_plus, spec.L)
    return (np.dot(w, transfer_apply(spec, v)) /
            np.dot(basis.w_plus, basis.v_plus) ** spec.L)


def _normalized(lhs, rhs):
    '''|lhs - rhs| / max(|lhs|, |rhs|).'''
    return linalg.relative_residual(lhs, rhs)


def _commutator(left, right):
    '''|[left, right]| / (|left| |right|).'''
    scale = np.linalg.norm(left) * np.linalg.norm(right)
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(left @ right - right @ left) / scale)


def _hamiltonian_for(spec, mu=None):
    '''The XYZ Hamiltonian that commutes with the transfer matrix of spec.'''
    if spec.mu is not None or mu is not None:
        return xyz_hamiltonian(spec.L, general_couplings(
            spec.sp, spec.mu if mu is None else mu))
    return xyz_at(spec.L, zeta_of_nome(spec.sp.nome), spec.y)


def check_commutation(spec, v):
    '''Certify [T(u), T(v)] = 0 and [H_XYZ, T(u)] = 0.'''
    report = Report()
    sp = spec.sp
    params = dict(L=spec.L, p=sp.nome.p, eta=sp.eta, u=sp.u, v=v,
                  form=spec.form)
    t_u, t_v = transfer_dense(spec), transfer_dense(spec, v)
    report.add('transfer.commute', _commutator(t_u, t_v), TOL_IDENTITY,
               **params)
    report.add('transfer.commute_hamiltonian',
               _commutator(_hamiltonian_for(spec), t_u), TOL_IDENTITY,
               **params)
    mu = spec.mu if spec.mu is not None else chain_couplings(sp).mu
    wrong = (mu[0] + 0.5, mu[1] - 0.3, mu[2] + 0.2)
    report.add_control('transfer.commute_hamiltonian.control',
                       _commutator(_hamiltonian_for(spec, wrong), t_u),
                       TOL_CONTROL, **params)
    return report


def _richardson(spec, step):
    '''Fourth-order central difference of T at u.'''
    u = spec.sp.u
    near = transfer_dense(spec, u + step) - transfer_dense(spec, u - step)
    far = (transfer_dense(spec, u + 2 * step) -
           transfer_dense(spec, u - 2 * step))
    return (8 * near - far) / (12 * step)


def check_log_derivative(L, sp, mu):
    '''Certify T(0)^-1 T'(0) = L (a'+c')/a - (2 b'/a) H_XYZ at u = 0.

    The Hamiltonian has the anisotropy from the weight derivatives and the
    boundary fields of the theta-form K-matrix; eta is arbitrary.
    '''
    report = Report()
    sp = sp._replace(u=0.0)
    spec = TransferSpec.make(L, sp, mu=mu)
    params = dict(L=L, p=sp.nome.p, eta=sp.eta, mu=list(mu))
    w0, dw0 = weights(sp, 0.0), weight_derivatives(sp, 0.0)

    t0 = transfer_dense(spec, 0.0)
    expected = 2 * w0.a ** (2 * L) * np.eye(spec.dim)
    report.add('transfer.initial', _normalized(t0, expected), 1e-11,
               **params)

    derivative = transfer_derivative_dense(spec, 0.0)
    lhs = np.linalg.solve(t0, derivative)
    H = xyz_hamiltonian(L, general_couplings(sp, mu))
    rhs = (L * (dw0.a + dw0.c) / w0.a * np.eye(spec.dim) -
           2 * dw0.b / w0.a * H)
    report.add('transfer.log_derivative', _normalized(lhs, rhs), TOL_EIGEN,
               **params)
    report.add('transfer.log_derivative.finite_difference',
               _normalized(_richardson(spec, FD_STEP), derivative),
               TOL_FINITE_DIFFERENCE, step=FD_STEP, **params)
    return report


def check_energy_from_k(L, sp):
    '''Certify the singlet energy read off the log-derivative.

    E = -L ((a'-c')/(2b') + 1) - a(0)/(4 b'(0)) tr(K'(0) K(2 eta)) equals E_0
    and the trace term is 2 sum_alpha lambda_alpha^2 / J_alpha.
    '''
    report = Report()
    couplings = chain_couplings(sp)
    w0, dw0 = weights(sp, 0.0), weight_derivatives(sp, 0.0)
    trace = np.trace(k_general_derivative(sp, couplings.mu, 0.0) @
                     k_general(sp, couplings.mu, 2 * sp.eta))
    boundary = (w0.a / (4 * dw0.b) * trace).real
    params = dict(L=L, p=sp.nome.p, t=sp.t)
    report.add('transfer.energy_from_k.boundary',
               abs(boundary - 2 * boundary_coupling_sum(couplings)),
               TOL_IDENTITY, **params)
    energy = -L * ((dw0.a - dw0.c) / (2 * dw0.b) + 1) - boundary
    report.add('transfer.energy_from_k',
               abs(energy - ground_energy(L, couplings.zeta)), TOL_EIGEN,
               **params)
    return report


def _match(values, target):
    '''Nearest eigenvalue to target and the count within TOL_MATCH.'''
    distance = np.abs(np.asarray(values) - target)
    index = int(np.argmin(distance))
    count = int(np.count_nonzero(distance <= TOL_MATCH * abs(target)))
    return index, count, float(distance[index] / abs(target))


def _overlap(vector, psi):
    '''|<vector|psi>| / (|vector| |psi|).'''
    return float(abs(np.vdot(vector, psi)) /
                 (np.linalg.norm(vector) * np.linalg.norm(psi)))


def _gap_after(values, index):
    '''Re lambda_index - Re lambda_(index+1) in the sorted spectrum.'''
    if index + 1 >= len(values):
        return float('inf')
    return float(values[index].real - values[index + 1].real)


def singlet_point(nome, u):
    '''Spectral point at eta = pi/3, t = pi/6.'''
    return SpectralPoint.make(nome, u, T_SINGLET)


def certify_singlet_eigenvalue(L, nome, u):
    '''Certify Lambda_L as a simple eigenvalue with the singlet eigenvector.'''
    sp = singlet_point(nome, u)
    spec = TransferSpec.make(L, sp)
    T = transfer_dense(spec)
    target = lambda_formula(L, weights(sp), spec.kpair())

    q = supercharge_at(sp.nome, T_SINGLET)
    basis = theta_basis(sp.nome, T_SINGLET)
    psi = singlet(q, L, susy_hamiltonian(q, L), basis).psi
    residual = float(np.linalg.norm(T @ psi - target * psi) /
                     (abs(target) * np.linalg.norm(psi)))

    spectrum = linalg.eig_dense(T)
    index, count, _ = _match(spectrum.eigenvalues, target)
    overlap = _overlap(spectrum.eigenvectors[:, index], psi)
    logging.debug('singlet eigenvalue at L=%d p=%g u=%g: %s, multiplicity %d',
                  L, sp.nome.p, u, target, count)
    return EigenCertificate(lambda_formula=target,
                            lambda_measured=spectrum.eigenvalues[index],
                            residual=residual, multiplicity=count,
                            is_largest=index == 0,
                            gap_to_next=_gap_after(spectrum.eigenvalues,
                                                   index),
                            overlap=overlap)


def check_singlet_eigenvalue(L, nome, u):
    '''Report form of certify_singlet_eigenvalue, plus the Rayleigh route.'''
    report = Report()
    sp = singlet_point(nome, u)
    params = dict(L=L, p=sp.nome.p, u=u)
    cert = certify_singlet_eigenvalue(L, sp.nome, u)
    report.add('transfer.eigenvalue.residual', cert.residual, TOL_EIGEN,
               **params)
    report.add('transfer.eigenvalue.match',
               abs(cert.lambda_measured - cert.lambda_formula) /
               abs(cert.lambda_formula), TOL_MATCH, **params)
    report.add('transfer.eigenvalue.multiplicity', abs(cert.multiplicity - 1),
               0.5, multiplicity=cert.multiplicity, **params)
    report.add('transfer.eigenvalue.overlap', 1.0 - cert.overlap, TOL_OVERLAP,
               **params)
    rayleigh = rayleigh_lambda(TransferSpec.make(L, sp),
                               theta_basis(sp.nome, T_SINGLET))
    report.add('transfer.rayleigh', abs(rayleigh - cert.lambda_formula) /
               abs(cert.lambda_formula), TOL_EIGEN, **params)
    return report


def tq_residual(L, sp):
    '''|T_(L+1) Q - (a+b)^2 Q T_L| normalized, with the weight-form K.'''
    w = weights(sp)
    y = y_of_t(sp.nome, sp.t)
    q = local_supercharge(w.c * w.d / (w.a * w.b), y)
    Q = global_supercharge(q, L)
    lhs = transfer_dense(TransferSpec.make(L + 1, sp, y=y)) @ Q
    rhs = (w.a + w.b) ** 2 * Q @ transfer_dense(TransferSpec.make(L, sp, y=y))
    return _normalized(lhs, rhs)


def check_tq_commutation(L, nome, u):
    '''Certify T Q = (a+b)^2 Q T between chain lengths L and L+1.'''
    report = Report()
    sp = singlet_point(nome, u)
    params = dict(L=L, p=sp.nome.p, u=u)
    report.add('transfer.tq', tq_residual(L, sp), TOL_IDENTITY, **params)
    control = sp._replace(eta=CONTROL_ETA)
    report.add_control('transfer.tq.control', tq_residual(L, control),
                       TOL_CONTROL, eta=CONTROL_ETA, **params)
    return report


def _one_site_quotient(sp, y, w_plus, v_plus):
    '''<w_+| tr_0(K^+ R_01 K^- R_01) |v_+> / <w_+|v_+> - (a+b)^2 tr(K^+K^-).'''
    spec = TransferSpec.make(1, sp, y=y)
    value = np.dot(w_plus, transfer_dense(spec) @ v_plus) / np.dot(w_plus,
                                                                  v_plus)
    expected = lambda_formula(1, weights(sp), spec.kpair())
    return float(abs(value - expected) / abs(expected))


def _two_site_block(sp, y, alpha, chi):
    '''(1 (x) <alpha|) R_02 R_01 K^- R_01 R_02 (1 (x) |chi>) / <alpha|chi>.'''
    w = weights(sp)
    R = r_matrix(w).matrix
    K = k_pair_weights(w, y).K_minus
    r01, r02 = place_pair(R, 1, 2, 3), place_pair(R, 1, 3, 3)
    middle = r02 @ r01 @ np.kron(K, np.eye(4)) @ r01 @ r02
    bra = np.kron(np.eye(2), np.asarray(alpha).reshape(1, 4))
    ket = np.kron(np.eye(2), np.asarray(chi).reshape(4, 1))
    return bra @ middle @ ket / np.dot(alpha, chi), K, (w.a + w.b) ** 4


def check_two_site_identities(nome, u):
    '''Certify the one- and two-site identities behind the recurrence.'''
    report = Report()
    sp = singlet_point(nome, u)
    params = dict(p=sp.nome.p, u=u)
    basis = theta_basis(sp.nome, T_SINGLET)
    report.add('transfer.one_site',
               _one_site_quotient(sp, basis.y, basis.w_plus, basis.v_plus),
               TOL_IDENTITY, **params)
    chi, alpha = chi_alpha(basis)
    block, K, factor = _two_site_block(sp, basis.y, alpha, chi)
    report.add('transfer.two_site', _normalized(block, factor * K),
               TOL_IDENTITY, **params)
    coeff, residual = linalg.fit_scalar(block, K)
    report.add('transfer.two_site.factor', abs(coeff - factor) / abs(factor),
               TOL_IDENTITY, fit_residual=residual, **params)

    off = theta_basis(sp.nome, CONTROL_T)
    report.add_control('transfer.one_site.control',
                       _one_site_quotient(sp, off.y, off.w_plus,
                                          off.v_plus),
                       1e-5, t=CONTROL_T, **params)
    chi_bar, alpha_bar = polynomial_chi_alpha(basis.zeta, off.y)
    block, K, factor = _two_site_block(sp, off.y, alpha_bar, chi_bar)
    report.add_control('transfer.two_site.control',
                       _normalized(block, factor * K), 1e-5, t=CONTROL_T,
                       **params)
    return report


def _positivity(values):
    '''(min Re - max |Im|) / max |.| of an array of entries.'''
    values = np.asarray(values)
    scale = np.max(np.abs(values))
    return float((np.min(values.real) - np.max(np.abs(values.imag))) / scale)


def certify_dominance(L, nome, u, matrix_free=False, rng=None):
    '''Certify Lambda_L as the largest eigenvalue of a positive T.

    Returns the certificate and the positivity margin; beyond the dense cap
    (or with matrix_free) positivity is sampled on SAMPLED_COLUMNS columns.
    '''
    if not 0.0 < u < ETA_SUSY:
        raise ParameterDomainError('weights are positive for 0 < u < pi/3, '
                                   'got u=%r' % u)
    sp = singlet_point(nome, u)
    spec = TransferSpec.make(L, sp)
    target = lambda_formula(L, weights(sp), spec.kpair())
    dense = not matrix_free and 2 ** (L + 1) <= linalg.DENSE_CAP
    if dense:
        T = transfer_dense(spec)
        margin = _positivity(T)
        spectrum = linalg.eig_dense(T)
        values, vectors = spectrum.eigenvalues, spectrum.eigenvectors
    else:
        if rng is None:
            rng = np.random.default_rng(0)
        picked = rng.choice(spec.dim, size=min(SAMPLED_COLUMNS, spec.dim),
                            replace=False)
        columns = np.eye(spec.dim, dtype=complex)[:, np.sort(picked)]
        margin = _positivity(transfer_apply(spec, columns))
        spectrum = linalg.eig_extreme(lambda v: transfer_apply(spec, v),
                                      spec.dim, k=2, which='LR')
        values, vectors = spectrum.eigenvalues, spectrum.eigenvectors
    top = vectors[:, 0]
    residual = float(np.linalg.norm(transfer_apply(spec, top) - target * top) /
                     (abs(target) * np.linalg.norm(top)))
    index, count, _ = _match(values, target)
    logging.debug('dominance at L=%d p=%g u=%g (%s): top %s, Lambda %s',
                  L, sp.nome.p, u, 'dense' if dense else 'matrix-free',
                  values[0], target)
    cert = EigenCertificate(lambda_formula=target, lambda_measured=values[0],
                            residual=residual, multiplicity=count,
                            is_largest=index == 0,
                            gap_to_next=_gap_after(values, 0),
                            overlap=float('nan'))
    return cert, margin, not dense


def check_dominance(L, nome, u, matrix_free=False, rng=None):
    '''Report form of certify_dominance, with the free-energy split.'''
    report = Report()
    sp = singlet_point(nome, u)
    cert, margin, sampled = certify_dominance(L, sp.nome, u, matrix_free, rng)
    params = dict(L=L, p=sp.nome.p, u=u, sampled=sampled)
    tol = TOL_MATCH if sampled else TOL_EIGEN
    report.add_control('transfer.dominance.positive', margin, 0.0, **params)
    report.add('transfer.dominance.top',
               abs(cert.lambda_measured - cert.lambda_formula) /
               abs(cert.lambda_formula), tol, **params)
    report.add('transfer.dominance.residual', cert.residual, tol, **params)
    report.add_control('transfer.dominance.gap', cert.gap_to_next, 0.0,
                       **params)

    w = weights(sp)
    energy = free_energy(w, TransferSpec.make(L, sp).kpair())
    formula = -math.log(abs(cert.lambda_formula))
    report.add('transfer.free_energy',
               abs(formula - (2 * L * energy.bulk + energy.boundary)),
               TOL_FREE_ENERGY, **params)
    measured = -math.log(abs(cert.lambda_measured))
    report.add('transfer.free_energy.measured',
               abs(measured - (2 * L * energy.bulk + energy.boundary)) /
               max(1.0, abs(measured)), TOL_MATCH, **params)
    return report


def measured_lambda(L, sp, y=None):
    '''Eigenvalue of the dense T nearest the formula, with its distance.'''
    spec = TransferSpec.make(L, sp, y=y)
    target = lambda_formula(L, weights(sp), spec.kpair())
    values = linalg.eig_dense(transfer_dense(spec), vectors=False).eigenvalues
    index, count, distance = _match(values, target)
    return values[index], count, distance


def check_recurrence(nome, u, Ls):
    '''Certify Lambda_L = (a+b)^4 Lambda_(L-2) on measured eigenvalues.'''
    report = Report()
    sp = singlet_point(nome, u)
    w = weights(sp)
    factor = (w.a + w.b) ** 4
    measured = dict((L, measured_lambda(L, sp)[0]) for L in sorted(Ls))
    for L in sorted(measured):
        if L - 2 not in measured:
            continue
        ratio = measured[L] / measured[L - 2]
        report.add('transfer.recurrence', abs(ratio - factor) / abs(factor),
                   TOL_EIGEN, L=L, p=sp.nome.p, u=u)
    if not len(report):
        report.add_inconclusive('transfer.recurrence',
                                'no chain lengths two apart in %r' %
                                sorted(Ls), p=sp.nome.p, u=u)
    return report


def check_transfer_covariance(L, nome, u):
    '''Certify R^alpha(pi) T(y0) R^alpha(-pi) = T(y_alpha), Lambda_L in it.'''
    report = Report()
    sp = singlet_point(nome, u)
    y0 = y_of_t(sp.nome, T_SINGLET)
    base = transfer_dense(TransferSpec.make(L, sp, y=y0))
    target = lambda_formula(L, weights(sp), TransferSpec.make(L, sp).kpair())
    for alpha in (1, 2, 3):
        y = rotated_root(y0, alpha)
        params = dict(L=L, p=sp.nome.p, u=u, alpha=alpha, y=y)
        rotated = (linalg.rotation(alpha, math.pi, L) @ base @
                   linalg.rotation(alpha, -math.pi, L))
        image = transfer_dense(TransferSpec.make(L, sp, y=y))
        report.add('transfer.covariance', _normalized(rotated, image),
                   TOL_IDENTITY, **params)
        spec = TransferSpec.make(L, sp, y=y)
        values = linalg.eig_dense(transfer_dense(spec),
                                  vectors=False).eigenvalues
        _, count, distance = _match(values, target)
        report.add('transfer.covariance.eigenvalue', distance, TOL_MATCH,
                   multiplicity=count, **params)
    return report


def check_conjecture(L, nome, u, inhom):
    '''Look for the conjectured product eigenvalue of the inhomogeneous T.

    The overlap of the matched eigenvector with the homogeneous singlet is
    recorded as data only.
    '''
    report = Report()
    sp = singlet_point(nome, u)
    spec = TransferSpec.make(L, sp, inhomogeneities=inhom)
    target = conjecture_value(spec)
    spectrum = linalg.eig_dense(transfer_dense(spec))
    index, count, distance = _match(spectrum.eigenvalues, target)
    q = supercharge_at(sp.nome, T_SINGLET)
    basis = theta_basis(sp.nome, T_SINGLET)
    psi = singlet(q, L, susy_hamiltonian(q, L), basis).psi
    overlap = _overlap(spectrum.eigenvectors[:, index], psi)
    report.add('transfer.conjecture', distance, TOL_MATCH, L=L,
               p=sp.nome.p, u=u, inhomogeneities=list(spec.shifts()),
               multiplicity=count, overlap=overlap)
    return report

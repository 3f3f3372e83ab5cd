# Copyright (C) 2026 The susy8v Authors.

'''R-matrix, K-matrices and the local relations with the supercharge.

Operators on V_0 (x) V^L keep the auxiliary space in the most significant
slot; R_0j acts on slots 1 and j+1 of that product.
'''

from collections import namedtuple
import logging

import numpy as np

from susy8v import linalg
from susy8v.linalg import SIGMA, SWAP, kron_all, kron_place, place_pair
from susy8v.params import (ParameterDomainError, anisotropy_from_weights,
                           boundary_fields, chain_couplings, mu_couplings,
                           theta_scale, weight_derivatives, weights, y_of_t)
from susy8v.report import Report
from susy8v.susy import local_supercharge
from susy8v.theta import theta, theta_deriv


TOL_YBE = 1e-11
TOL_IDENTITY = 1e-10
TOL_CONTROL = 1e-5
CONTROL_ETA = 0.9

# Denominators below this are treated as poles.
_POLE = 1e-14


class KMatrixDomainError(Exception):
    '''Raise when a K-matrix is evaluated at a pole.'''
    pass


RMatrix = namedtuple('RMatrix', 'matrix weights')

KPair = namedtuple('KPair', 'K_minus K_plus form')

AOperator = namedtuple('AOperator', 'matrix up down phi')


def r_matrix(w):
    '''Return the eight-vertex R-matrix of the weights w.'''
    a, b, c, d = w
    matrix = np.array([[a, 0, 0, d],
                       [0, b, c, 0],
                       [0, c, b, 0],
                       [d, 0, 0, a]], dtype=complex)
    return RMatrix(matrix=matrix, weights=w)


def r_derivative(sp, u):
    '''Return R'(u).'''
    return r_matrix(weight_derivatives(sp, u)).matrix


def _r_at(sp, u, perturb=0.0):
    '''R(u), optionally with a scaled by (1 + perturb).'''
    w = weights(sp, u)
    if perturb:
        w = w._replace(a=w.a * (1 + perturb))
    return r_matrix(w).matrix


def ybe_residual(sp, u, v, perturb=0.0):
    '''Return |R12(u-v) R13(u) R23(v) - R23(v) R13(u) R12(u-v)| / |LHS|.'''
    r12 = place_pair(_r_at(sp, u - v, perturb), 1, 2, 3)
    r13 = place_pair(_r_at(sp, u, perturb), 1, 3, 3)
    r23 = place_pair(_r_at(sp, v, perturb), 2, 3, 3)
    lhs = r12 @ r13 @ r23
    rhs = r23 @ r13 @ r12
    return float(np.linalg.norm(lhs - rhs) / np.linalg.norm(lhs))


def _k_ratios(nome, u):
    '''theta_1(u, p) / theta_(5-alpha)(u, p) for alpha = 1, 2, 3.'''
    t1 = theta(1, u, nome)
    ratios = []
    for alpha in (1, 2, 3):
        denom = theta(5 - alpha, u, nome)
        if abs(denom) < _POLE:
            raise KMatrixDomainError('theta_%d(%r, p=%g) vanishes' %
                                     (5 - alpha, u, nome.p))
        ratios.append(t1 / denom)
    return ratios


def k_general(sp, mu, u=None):
    '''Return K(u) = 1 + sum theta_1/theta_(5-alpha) mu_alpha sigma^alpha.'''
    if u is None:
        u = sp.u
    K = np.eye(2, dtype=complex)
    for alpha, ratio, m in zip((1, 2, 3), _k_ratios(sp.nome, u), mu):
        K = K + ratio * m * SIGMA[alpha]
    return K


def k_general_derivative(sp, mu, u=None):
    '''Return K'(u).'''
    if u is None:
        u = sp.u
    nome = sp.nome
    t1, dt1 = theta(1, u, nome), theta_deriv(1, u, nome)
    dK = np.zeros((2, 2), dtype=complex)
    for alpha, m in zip((1, 2, 3), mu):
        k = 5 - alpha
        tk, dtk = theta(k, u, nome), theta_deriv(k, u, nome)
        if abs(tk) < _POLE:
            raise KMatrixDomainError('theta_%d(%r, p=%g) vanishes' %
                                     (k, u, nome.p))
        dK = dK + (dt1 * tk - t1 * dtk) / (tk * tk) * m * SIGMA[alpha]
    return dK


def k_pair_general(sp, mu, u=None):
    '''Return K^- = K(u), K^+ = K(u + 2 eta).'''
    if u is None:
        u = sp.u
    return KPair(K_minus=k_general(sp, mu, u),
                 K_plus=k_general(sp, mu, u + 2 * sp.eta), form='theta')


def _ratio(num, den, name):
    '''num / den, raising on a vanishing denominator.'''
    if abs(den) < _POLE:
        raise KMatrixDomainError('denominator %s vanishes' % name)
    return num / den


def k_pair_weights(w, y):
    '''Return K^- and K^+ expressed through the weights and y.'''
    a, b, c, d = w
    y = complex(y)
    norm = 1 + abs(y) ** 2
    x1 = 2 * y.real / norm
    x2 = 2 * y.imag / norm
    x3 = (1 - abs(y) ** 2) / norm
    ab, cd = a * b, c * d
    identity = np.eye(2, dtype=complex)
    k_minus = (identity +
               x1 * _ratio(ab + cd, a * c + b * d, 'ac+bd') * SIGMA[1] +
               x2 * _ratio(ab - cd, a * c - b * d, 'ac-bd') * SIGMA[2] +
               x3 * _ratio(b * b - d * d, 2 * ab + b * b + d * d,
                           '2ab+b^2+d^2') * SIGMA[3])
    k_plus = (identity +
              x1 * _ratio(ab + cd, a * d + b * c, 'ad+bc') * SIGMA[1] +
              x2 * _ratio(ab - cd, b * c - a * d, 'bc-ad') * SIGMA[2] +
              x3 * _ratio(b * b - c * c, 2 * ab + b * b + c * c,
                          '2ab+b^2+c^2') * SIGMA[3])
    return KPair(K_minus=k_minus, K_plus=k_plus, form='weights')


def k_pair_at(sp, u=None):
    '''Weight-form K-matrices at the spectral point.'''
    return k_pair_weights(weights(sp, u), y_of_t(sp.nome, sp.t))


def check_k_agreement(sp):
    '''Certify the weight-form K-matrices against the theta form.

    One scalar per matrix is fitted and recorded.
    '''
    report = Report()
    couplings = chain_couplings(sp)
    theta_pair = k_pair_general(sp, couplings.mu)
    weight_pair = k_pair_at(sp)
    params = dict(p=sp.nome.p, u=sp.u, t=sp.t)
    for name in ('K_minus', 'K_plus'):
        coeff, residual = linalg.fit_scalar(getattr(theta_pair, name),
                                            getattr(weight_pair, name))
        report.add('vertex.k_agreement', residual, TOL_IDENTITY,
                   matrix=name, scale=coeff, **params)
    report.add('vertex.k_trace',
               abs(np.trace(theta_pair.K_minus) - 2) +
               abs(np.trace(theta_pair.K_plus) - 2), 1e-12, **params)
    report.add('vertex.k_identity_at_zero',
               np.linalg.norm(k_general(sp, couplings.mu, 0.0) -
                              np.eye(2)), 1e-12, **params)
    return report


def reflection_residual(sp, mu, u, v):
    '''Normalized residual of the reflection equation at (u, v).'''
    r_minus = _r_at(sp, u - v)
    r_plus = _r_at(sp, u + v)
    k1 = np.kron(k_general(sp, mu, u), linalg.IDENTITY)
    k2 = np.kron(linalg.IDENTITY, k_general(sp, mu, v))
    lhs = r_minus @ k1 @ r_plus @ k2
    rhs = k2 @ r_plus @ k1 @ r_minus
    return float(np.linalg.norm(lhs - rhs) / np.linalg.norm(lhs))


def check_r_matrix(sp, rng, samples=5):
    '''Certify YBE, R(0) = a(0) P and the reflection equation.'''
    report = Report()
    params = dict(p=sp.nome.p, eta=sp.eta)
    w0 = weights(sp, 0.0)
    report.add('vertex.r_initial',
               np.linalg.norm(r_matrix(w0).matrix - w0.a * SWAP) /
               abs(w0.a), 1e-12, **params)
    ybe = []
    for _ in range(samples):
        u, v = rng.uniform(0.05, 0.95, size=2)
        ybe.append(report.add('vertex.ybe', ybe_residual(sp, u, v), TOL_YBE,
                              u=u, v=v, **params))
        mu = rng.normal(size=3)
        report.add('vertex.reflection', reflection_residual(sp, mu, u, v),
                   TOL_YBE, u=u, v=v, **params)
    u, v = 0.2, 0.11
    report.add_control('vertex.ybe.control', ybe_residual(sp, u, v, 0.01),
                       1e-3, given=ybe, u=u, v=v, **params)
    return report


def _phi(zeta, y):
    '''Components of |phi>.'''
    return y * (y * y * zeta - 1), zeta - y * y


def a_operators(w, zeta, y):
    '''Return A = (1 - y^2 zeta) A_up + y (y^2 - zeta) A_down + A_phi.'''
    a, b, c, d = w
    if abs(a) < _POLE or abs(b) < _POLE:
        raise ParameterDomainError('A needs a, b != 0 (a=%r, b=%r)' % (a, b))
    y = complex(y)
    up = np.array([[0, c],
                   [-d * c / a, 0],
                   [d, 0],
                   [0, -c * d / b]], dtype=complex)
    down = np.array([[-c * d / b, 0],
                     [0, d],
                     [0, -d * c / a],
                     [c, 0]], dtype=complex)
    phi_up, phi_down = _phi(zeta, y)
    phi = np.array([[(2 * a + b) * phi_up, d * phi_down],
                    [(a + 2 * b) * phi_down, c * phi_up],
                    [c * phi_down, (a + 2 * b) * phi_up],
                    [d * phi_up, (2 * a + b) * phi_down]], dtype=complex)
    matrix = (1 - y * y * zeta) * up + y * (y * y - zeta) * down + phi
    return AOperator(matrix=matrix, up=up, down=down, phi=phi)


def insertion(op, j, L):
    '''Return B_0^j : V_0 (x) V^L -> V_0 (x) V^(L+1) for B : V -> V (x) V.

    B_0^1 = B (x) 1 and B_0^(k+1) = P_(k,k+1) B_0^k.
    '''
    if not 1 <= j <= L + 1:
        raise ValueError('insertion site %d outside 1..%d' % (j, L + 1))
    linalg.check_dense(2 ** (L + 2))
    out = np.kron(op, np.eye(2 ** L))
    for k in range(1, j):
        out = kron_place(SWAP, k + 1, L + 2) @ out
    return out


def _r0(R, j, n_sites):
    '''R acting on the auxiliary slot and site j of V_0 (x) V^n_sites.'''
    return place_pair(R, 1, j + 1, n_sites + 1)


def relation_residuals(w, q, A, L, j):
    '''Residuals of both local relations for one pair (q, A) at site j.'''
    R = r_matrix(w).matrix
    q_j = np.kron(linalg.IDENTITY, linalg.kron_insert(q, j, L))
    a_j = insertion(A, j, L)
    a_next = insertion(A, j + 1, L)
    r_in = _r0(R, j, L)
    r_out, r_out_next = _r0(R, j, L + 1), _r0(R, j + 1, L + 1)
    shared = (w.a + w.b) * q_j @ r_in
    first = r_out @ r_out_next @ q_j + shared - (r_out @ a_next + a_j @ r_in)
    second = (r_out_next @ r_out @ q_j + shared -
              (r_out_next @ a_j + a_next @ r_in))
    scale = np.linalg.norm(shared)
    return (float(np.linalg.norm(first) / scale),
            float(np.linalg.norm(second) / scale))


def local_relation_residuals(sp, L, j):
    '''Residuals of both local relations between R, q and A at site j.'''
    w = weights(sp)
    zeta = w.c * w.d / (w.a * w.b)
    y = y_of_t(sp.nome, sp.t)
    q = local_supercharge(zeta, y)
    A = a_operators(w, zeta, y)
    return relation_residuals(w, q.matrix, A.matrix, L, j)


def check_local_relations(sp, L, j):
    '''Certify the local relations R R q + (a+b) q R = R A + A R.'''
    report = Report()
    params = dict(p=sp.nome.p, u=sp.u, t=sp.t, L=L, j=j)
    given = [report.add('vertex.local_relation', residual, TOL_IDENTITY,
                        form=form, **params)
             for form, residual in zip(('first', 'second'),
                                       local_relation_residuals(sp, L, j))]
    control = sp._replace(eta=CONTROL_ETA)
    report.add_control('vertex.local_relation.control',
                       max(local_relation_residuals(control, L, j)), 1e-4,
                       given=given, eta=CONTROL_ETA, **params)
    return report


def boundary_relation_residuals(sp):
    '''Residuals of (a+b) A K^- = R K^- A and of its auxiliary transpose.'''
    w = weights(sp)
    zeta = w.c * w.d / (w.a * w.b)
    y = y_of_t(sp.nome, sp.t)
    A = a_operators(w, zeta, y).matrix
    R = r_matrix(w).matrix
    pair = k_pair_weights(w, y)
    lhs = (w.a + w.b) * A @ pair.K_minus
    rhs = R @ np.kron(pair.K_minus, linalg.IDENTITY) @ A
    minus = np.linalg.norm(lhs - rhs) / np.linalg.norm(lhs)
    a_t = linalg.partial_transpose_aux(A)
    k_t = pair.K_plus.T
    lhs = (w.a + w.b) * a_t @ k_t
    rhs = (linalg.partial_transpose_aux(R) @
           np.kron(k_t, linalg.IDENTITY) @ a_t)
    plus = np.linalg.norm(lhs - rhs) / np.linalg.norm(lhs)
    return float(minus), float(plus)


def check_boundary_relations(sp):
    '''Certify the boundary relations between A, R and K^+-.'''
    report = Report()
    params = dict(p=sp.nome.p, u=sp.u, t=sp.t)
    given = [report.add('vertex.boundary_relation', residual, TOL_IDENTITY,
                        form=form, **params)
             for form, residual in zip(('minus', 'plus'),
                                       boundary_relation_residuals(sp))]
    control = sp._replace(eta=CONTROL_ETA)
    report.add_control('vertex.boundary_relation.control',
                       max(boundary_relation_residuals(control)), TOL_CONTROL,
                       given=given, eta=CONTROL_ETA, **params)
    return report


def boundary_from_k(sp, mu):
    '''h_B^- from K'(0) and h_B^+ from the trace against K(2 eta).'''
    w0 = weights(sp, 0.0)
    dw0 = weight_derivatives(sp, 0.0)
    h_minus = -w0.a / (2 * dw0.b) * k_general_derivative(sp, mu, 0.0)
    J = anisotropy_from_weights(sp)
    coupling = sum(j_alpha * np.kron(SIGMA[alpha], SIGMA[alpha])
                   for alpha, j_alpha in zip((1, 2, 3), J))
    K = np.kron(k_general(sp, mu, 2 * sp.eta), linalg.IDENTITY)
    h_plus = -0.25 * linalg.partial_trace_aux(K @ coupling)
    return h_minus, h_plus


def pauli_matrix(coeffs):
    '''Return sum_alpha coeffs[alpha-1] sigma^alpha.'''
    return sum(c * SIGMA[alpha] for alpha, c in zip((1, 2, 3), coeffs))


def check_boundary_fields(sp, rng=None):
    '''Certify that both K-derived boundary terms equal h_B.

    At eta = pi/3 with the supersymmetric mu they reduce to lambda_alpha.
    '''
    report = Report()
    params = dict(p=sp.nome.p, eta=sp.eta)
    w0 = weights(sp, 0.0)
    dw0 = weight_derivatives(sp, 0.0)
    lhs = w0.a * theta_deriv(1, 0.0, sp.nome) / (theta_scale(sp) * dw0.b)
    expected = theta(1, 2 * sp.eta, sp.nome)
    report.add('vertex.boundary_identity', abs(lhs - expected) /
               abs(expected), TOL_IDENTITY, **params)
    if rng is None:
        mu = (0.3, -0.2, 0.5)
    else:
        mu = tuple(rng.normal(size=3))
    h_b = pauli_matrix(boundary_fields(sp, mu))
    h_minus, h_plus = boundary_from_k(sp, mu)
    for name, h in (('minus', h_minus), ('plus', h_plus)):
        report.add('vertex.boundary_field', linalg.relative_residual(h, h_b),
                   TOL_IDENTITY, side=name, **params)
    if sp.is_supersymmetric:
        couplings = chain_couplings(sp)
        fields = boundary_fields(sp, couplings.mu)
        report.add('vertex.boundary_field.susy',
                   linalg.relative_residual(np.array(fields),
                                            np.array(couplings.lam)),
                   TOL_IDENTITY, t=sp.t, **params)
    logging.debug('boundary fields at p=%g eta=%g checked', sp.nome.p,
                  sp.eta)
    return report


def mu_at(sp):
    '''Supersymmetric mu_alpha at the spectral point.'''
    return mu_couplings(sp.nome, sp.eta, y_of_t(sp.nome, sp.t))


def kron_k(K, n_sites):
    '''K acting on the auxiliary slot of V_0 (x) V^n_sites.'''
    return kron_all(K, np.eye(2 ** n_sites))

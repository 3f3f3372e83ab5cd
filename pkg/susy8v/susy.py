# Copyright (C) 2026 The susy8v Authors.

'''Lattice supersymmetry of the XYZ chain.

The local supercharge q : V -> V (x) V is a 4x2 matrix whose columns are
the images of |up> and |down>.  The global supercharge on V^L is the
alternating sum of q inserted at every site.  Duals <w| are kept as plain
row vectors and contracted with numpy.dot, never conjugated.
'''

from collections import namedtuple
import logging
import math

import numpy as np

from susy8v import linalg
from susy8v.linalg import kron_all, kron_insert, product_state, rotation
from susy8v.params import (T_DEGENERATE, T_SINGLET, rotated_root, y_of_t,
                            zeta_of_nome)
from susy8v.report import Report
from susy8v.theta import Nome, theta, theta_deriv


TOL_IDENTITY = 1e-10
TOL_NILPOTENT = 1e-12
TOL_DERIVATIVE = 1e-8
TOL_NONZERO = 1e-10
FD_STEP = 1e-5

_T_TOL = 1e-12


class SingletError(Exception):
    '''Raise when a ground state is not a supersymmetry singlet.'''
    pass


LocalSupercharge = namedtuple('LocalSupercharge', 'matrix zeta y up down phi')

ThetaBasis = namedtuple('ThetaBasis', '''
    nome t zeta y
    v_plus v_minus w_plus w_minus vdot_plus
    Lambda_plus Lambda_minus Lambda_dot_plus
    kappa C_plus C_minus D_plus D_minus
    ''')

SingletData = namedtuple('SingletData', '''
    L psi mu_L energy residual_q residual_qdag overlap multiplicity
    ''')


def _column(vector):
    '''A 2-vector as a 2x1 column.'''
    return np.asarray(vector, dtype=complex).reshape(2, 1)


def local_supercharge(zeta, y):
    '''Return q = (1 - y^2 zeta) q_up + y (y^2 - zeta) q_down + q_phi.'''
    y = complex(y)
    q_up = np.zeros((4, 2), dtype=complex)
    q_up[:, 1] = [1, 0, 0, -zeta]
    q_down = np.zeros((4, 2), dtype=complex)
    q_down[:, 0] = [-zeta, 0, 0, 1]
    phi = _column([y * (y * y * zeta - 1), zeta - y * y])
    q_phi = np.kron(phi, linalg.IDENTITY) + np.kron(linalg.IDENTITY, phi)
    matrix = ((1 - y * y * zeta) * q_up + y * (y * y - zeta) * q_down +
              q_phi)
    return LocalSupercharge(matrix=matrix, zeta=zeta, y=y, up=q_up,
                            down=q_down, phi=q_phi)


def supercharge_at(nome, t):
    '''Local supercharge at the point (p, t) of the parameter rectangle.'''
    return local_supercharge(zeta_of_nome(nome), y_of_t(nome, t))


def coassociativity(q):
    '''Return |(q (x) 1 - 1 (x) q) q| / |q|^2.'''
    mat = q.matrix
    defect = (np.kron(mat, linalg.IDENTITY) -
              np.kron(linalg.IDENTITY, mat)) @ mat
    return float(np.linalg.norm(defect) / np.linalg.norm(mat) ** 2)


def global_supercharge(q, L):
    '''Return Q = sum_j (-1)^j q_j as a 2^(L+1) x 2^L matrix.'''
    if L < 1:
        raise ValueError('chain length %r is below 1' % L)
    linalg.check_dense(2 ** (L + 1))
    Q = np.zeros((2 ** (L + 1), 2 ** L), dtype=complex)
    for j in range(1, L + 1):
        Q += (-1) ** j * kron_insert(q.matrix, j, L)
    return Q


def check_nilpotency(q, L):
    '''Certify Q^2 = 0 and (Q^dagger)^2 = 0 from V^L.'''
    report = Report()
    lower = global_supercharge(q, L)
    upper = global_supercharge(q, L + 1)
    scale = np.linalg.norm(lower) * np.linalg.norm(upper)
    params = dict(L=L, zeta=q.zeta, y=q.y)
    report.add('susy.nilpotent', np.linalg.norm(upper @ lower) / scale,
               TOL_NILPOTENT, **params)
    report.add('susy.nilpotent_adjoint',
               np.linalg.norm(lower.conj().T @ upper.conj().T) / scale,
               TOL_NILPOTENT, **params)
    report.add('susy.coassociative', coassociativity(q), TOL_NILPOTENT,
               **params)
    return report


def _vectors(nome, t):
    '''Return v_plus, v_minus, w_plus, w_minus at t.'''
    q2 = nome.squared()
    vecs = {}
    for eps in (1, -1):
        shift = eps * math.pi / 3
        vecs['v', eps] = np.array([theta(4, t + shift, q2),
                                   theta(1, t + shift, q2)])
        vecs['w', eps] = eps * np.array([-theta(1, t - shift, q2),
                                         theta(4, t - shift, q2)])
    return vecs['v', 1], vecs['v', -1], vecs['w', 1], vecs['w', -1]


def _lambda_prefactor(nome):
    '''Constant factor of Lambda_eps.'''
    q2 = nome.squared()
    return (2 * theta(1, math.pi / 3, q2) * theta(4, 0.0, q2) ** 2 /
            (theta(4, math.pi / 3, q2) * theta(2, 0.0, nome)))


def eigenvalue_lambda(nome, t, eps):
    '''Return Lambda_eps(t) with q |v_eps> = Lambda_eps |v_eps> (x) |v_eps>.'''
    return (eps * _lambda_prefactor(nome) *
            theta(2, t + eps * math.pi / 3, nome) /
            theta(4, t, nome.squared()) ** 3)


def eigenvalue_lambda_dot(nome, t):
    '''Return the t-derivative of Lambda_plus.'''
    q2 = nome.squared()
    shift = t + math.pi / 3
    t4 = theta(4, t, q2)
    return _lambda_prefactor(nome) * (
        theta_deriv(2, shift, nome) / t4 ** 3 -
        3 * theta(2, shift, nome) * theta_deriv(4, t, q2) / t4 ** 4)


def _vdot_plus(nome, t):
    '''t-derivative of |v_plus>.'''
    q2 = nome.squared()
    shift = t + math.pi / 3
    return np.array([theta_deriv(4, shift, q2), theta_deriv(1, shift, q2)])


def polynomial_vectors(zeta, y):
    '''Polynomial forms of v_plus, v_minus at the singlet point.'''
    return (np.array([y * (1 - zeta * y * y), zeta - y * y]),
            np.array([1.0, -y]))


def polynomial_chi_alpha(zeta, y):
    '''Polynomial forms of |chi> and <alpha| at the singlet point.'''
    chi = np.array([y * y * (zeta - 2 + zeta * y * y),
                    y * (y * y - 1),
                    y * (y * y - 1),
                    -(zeta + (zeta - 2) * y * y)])
    alpha = np.array([y, 1.0, -y * y, -y])
    return chi, alpha


def _chi_alpha(v_plus, v_minus, w_plus, w_minus, kappa):
    '''Return |chi> and <alpha| from the theta vectors.'''
    chi = np.kron(v_plus, v_plus) - kappa ** 2 * np.kron(v_minus, v_minus)
    alpha = np.kron(w_plus, w_plus) + np.kron(w_minus, w_plus) / kappa
    return chi, alpha


def is_singlet_point(t):
    '''True at t = pi/6.'''
    return abs(t - T_SINGLET) < _T_TOL


def is_degenerate_point(t):
    '''True at t = pi/2, where |v_minus> = |v_plus>.'''
    return abs(t - T_DEGENERATE) < _T_TOL


def theta_basis(nome, t):
    '''Build the theta basis and its decomposition data at (p, t).

    The derivative data is filled at t = pi/2 and the polynomial
    normalizations C and D at t = pi/6; elsewhere they are None.
    '''
    if not isinstance(nome, Nome):
        nome = Nome.make(nome)
    zeta, y = zeta_of_nome(nome), y_of_t(nome, t)
    v_plus, v_minus, w_plus, w_minus = _vectors(nome, t)
    kappa = theta(3, math.pi / 3, nome) / theta(3, 0.0, nome)
    vdot = lambda_dot = None
    if is_degenerate_point(t):
        vdot = _vdot_plus(nome, t)
        lambda_dot = eigenvalue_lambda_dot(nome, t)
    c_plus = c_minus = d_plus = d_minus = None
    if is_singlet_point(t):
        vbar_plus, vbar_minus = polynomial_vectors(zeta, y)
        c_plus, _ = linalg.fit_scalar(v_plus, vbar_plus)
        c_minus, _ = linalg.fit_scalar(v_minus, vbar_minus)
        chi, alpha = _chi_alpha(v_plus, v_minus, w_plus, w_minus, kappa)
        chi_bar, alpha_bar = polynomial_chi_alpha(zeta, y)
        d_plus, _ = linalg.fit_scalar(chi, chi_bar)
        d_minus, _ = linalg.fit_scalar(alpha, alpha_bar)
    return ThetaBasis(nome=nome, t=t, zeta=zeta, y=y,
                      v_plus=v_plus, v_minus=v_minus,
                      w_plus=w_plus, w_minus=w_minus, vdot_plus=vdot,
                      Lambda_plus=eigenvalue_lambda(nome, t, 1),
                      Lambda_minus=eigenvalue_lambda(nome, t, -1),
                      Lambda_dot_plus=lambda_dot, kappa=kappa,
                      C_plus=c_plus, C_minus=c_minus,
                      D_plus=d_plus, D_minus=d_minus)


def chi_alpha(basis):
    '''Return the two-site state |chi> and covector <alpha|.'''
    if not is_singlet_point(basis.t):
        raise ValueError('chi and alpha are defined at t = pi/6, got %r' %
                         basis.t)
    return _chi_alpha(basis.v_plus, basis.v_minus, basis.w_plus,
                      basis.w_minus, basis.kappa)


def _residual(diff, scale):
    '''Norm of diff relative to scale.'''
    return float(np.linalg.norm(diff) / max(scale, np.finfo(float).tiny))


def check_q_on_basis(q, basis):
    '''Certify the action of q on |v_eps> and of <w_eps| (x) <w_eps'| on q.'''
    report = Report()
    mat = q.matrix
    params = dict(p=basis.nome.p, t=basis.t)
    q_norm = np.linalg.norm(mat)
    vectors = {1: (basis.v_plus, basis.w_plus, basis.Lambda_plus),
               -1: (basis.v_minus, basis.w_minus, basis.Lambda_minus)}
    for eps, (v, _, lam) in vectors.items():
        diff = mat @ v - lam * np.kron(v, v)
        report.add('susy.q_eigenvector', _residual(
            diff, q_norm * np.linalg.norm(v) ** 2), TOL_IDENTITY,
                   eps=eps, **params)

    pairing = (theta(1, math.pi / 3, basis.nome) *
               theta(2, basis.t, basis.nome))
    for eps, (_, w, lam) in vectors.items():
        for eps2, (_, w2, _) in vectors.items():
            row = np.dot(np.kron(w, w2), mat)
            expected = pairing * lam * w if eps == eps2 else 0.0 * w
            report.add('susy.dual_eigenvector', _residual(
                row - expected, q_norm * np.linalg.norm(w) *
                np.linalg.norm(w2)), TOL_IDENTITY, eps=eps, eps2=eps2,
                       **params)
        for eps2, (v2, _, _) in vectors.items():
            expected = pairing if eps == eps2 else 0.0
            report.add('susy.pairing', abs(np.dot(w, v2) - expected) /
                       (np.linalg.norm(w) * np.linalg.norm(v2)),
                       TOL_IDENTITY, eps=eps, eps2=eps2, **params)

    if basis.vdot_plus is not None:
        v, vdot = basis.v_plus, basis.vdot_plus
        diff = (mat @ vdot - basis.Lambda_dot_plus * np.kron(v, v) -
                basis.Lambda_plus * (np.kron(vdot, v) + np.kron(v, vdot)))
        report.add('susy.q_derivative', _residual(
            diff, q_norm * np.linalg.norm(vdot) * np.linalg.norm(v)),
                   TOL_IDENTITY, **params)
        t = basis.t
        numeric = (eigenvalue_lambda(basis.nome, t + FD_STEP, 1) -
                   eigenvalue_lambda(basis.nome, t - FD_STEP, 1)) / (
                       2 * FD_STEP)
        report.add('susy.q_derivative.finite_difference',
                   abs(numeric - basis.Lambda_dot_plus) /
                   max(abs(basis.Lambda_dot_plus), 1.0),
                   TOL_DERIVATIVE, **params)
    return report


def check_basis_determinants(basis):
    '''Certify det[v_plus v_minus] and, at t = pi/2, det[v_plus vdot_plus].'''
    report = Report()
    nome, t = basis.nome, basis.t
    params = dict(p=nome.p, t=t)
    t1_third = theta(1, math.pi / 3, nome)
    det = np.linalg.det(np.column_stack([basis.v_plus, basis.v_minus]))
    expected = -t1_third * theta(2, t, nome)
    report.add('susy.determinant', abs(det - expected) / abs(t1_third),
               TOL_IDENTITY, **params)
    if basis.vdot_plus is not None:
        det = np.linalg.det(np.column_stack([basis.v_plus, basis.vdot_plus]))
        expected = -0.5 * theta_deriv(1, 0.0, nome) * t1_third
        report.add('susy.determinant.derivative',
                   abs(det - expected) / abs(expected), TOL_IDENTITY,
                   **params)
        report.add('susy.degenerate_vectors',
                   linalg.relative_residual(basis.v_plus, basis.v_minus),
                   TOL_NILPOTENT, **params)
    return report


def check_polynomial_forms(basis):
    '''Certify the theta vectors are multiples of their polynomial forms.'''
    report = Report()
    params = dict(p=basis.nome.p, t=basis.t)
    zeta, y = basis.zeta, basis.y
    vbar_plus, vbar_minus = polynomial_vectors(zeta, y)
    chi, alpha = chi_alpha(basis)
    chi_bar, alpha_bar = polynomial_chi_alpha(zeta, y)
    pairs = (('susy.polynomial_form.v_plus', basis.v_plus, vbar_plus),
             ('susy.polynomial_form.v_minus', basis.v_minus, vbar_minus),
             ('susy.polynomial_form.chi', chi, chi_bar),
             ('susy.polynomial_form.alpha', alpha, alpha_bar))
    for check, target, form in pairs:
        _, residual = linalg.fit_scalar(target, form)
        report.add(check, residual, TOL_IDENTITY, **params)
    report.add('susy.lambda_plus_zero',
               abs(basis.Lambda_plus) / abs(basis.Lambda_minus),
               1e-11, **params)
    # C_minus has the closed form theta_3(pi/3, p^2).
    expected = theta(3, math.pi / 3, basis.nome.squared())
    report.add('susy.polynomial_form.c_minus',
               abs(basis.C_minus - expected) / abs(expected), TOL_IDENTITY,
               **params)
    return report


def check_dual_closedness(q, basis):
    '''Certify Q^dagger on |w_eps> (x) |w_eps'> and <alpha|chi> != 0.'''
    report = Report()
    params = dict(p=basis.nome.p, t=basis.t)
    adjoint = global_supercharge(q, 1).conj().T
    t1_third = theta(1, math.pi / 3, basis.nome)
    duals = {1: (basis.w_plus, basis.Lambda_plus),
             -1: (basis.w_minus, basis.Lambda_minus)}
    for eps, (w, lam) in duals.items():
        for eps2, (w2, _) in duals.items():
            image = adjoint @ np.kron(w, w2)
            expected = (-t1_third ** 2 * lam * w if eps == eps2
                        else np.zeros(2))
            report.add('susy.dual_closed', _residual(
                image - expected, np.linalg.norm(adjoint) *
                np.linalg.norm(w) * np.linalg.norm(w2)), TOL_IDENTITY,
                       eps=eps, eps2=eps2, **params)
    chi, alpha = chi_alpha(basis)
    report.add_control('susy.alpha_chi_nonzero',
                       abs(np.dot(alpha, chi)) /
                       (np.linalg.norm(alpha) * np.linalg.norm(chi)),
                       TOL_NONZERO, **params)
    return report


def cohomology_dims(q, L, tol_rel=None):
    '''Return (dim of the Q-cohomology, dim of the Q^dagger-homology) on V^L.

    Raises InconclusiveRankError when a singular value sits in the band
    between kernel and image.
    '''
    upper = global_supercharge(q, L)
    rank_upper, _ = linalg.numeric_rank(upper, tol_rel)
    rank_upper_adj, _ = linalg.numeric_rank(upper.conj().T, tol_rel)
    if L == 1:
        rank_lower = rank_lower_adj = 0
    else:
        lower = global_supercharge(q, L - 1)
        rank_lower, _ = linalg.numeric_rank(lower, tol_rel)
        rank_lower_adj, _ = linalg.numeric_rank(lower.conj().T, tol_rel)
    dim = 2 ** L
    cohomology = (dim - rank_upper) - rank_lower
    homology = (dim - rank_lower_adj) - rank_upper_adj
    logging.debug('L=%d ranks %d/%d: cohomology %d, homology %d',
                  L, rank_lower, rank_upper, cohomology, homology)
    return cohomology, homology


def expected_cohomology(t):
    '''Dimension of the cohomology predicted at t.'''
    return 1 if is_singlet_point(t) else 0


def check_cohomology(nome, t, L):
    '''Certify the cohomology and homology dimensions on V^L.'''
    report = Report()
    q = supercharge_at(nome, t)
    params = dict(p=nome.p if isinstance(nome, Nome) else nome, t=t, L=L)
    try:
        dims = cohomology_dims(q, L)
    except linalg.InconclusiveRankError as exc:
        report.add_inconclusive('susy.cohomology', str(exc), **params)
        return report
    expected = expected_cohomology(t)
    for check, dim in zip(('susy.cohomology', 'susy.homology'), dims):
        report.add(check, abs(dim - expected), 0.5, dim=dim,
                   expected=expected, **params)
    return report


def _phase_fixed(psi, covector):
    '''Rotate psi so that covector . psi is real and positive.'''
    overlap = np.dot(covector, psi)
    if abs(overlap) == 0.0:
        raise SingletError('singlet has zero overlap with the dual product '
                           'state')
    return psi * (abs(overlap) / overlap)


def singlet(q, L, H, basis):
    '''Extract the zero-energy ground state of the supersymmetric H.

    The phase is fixed by <w_plus^(x)L|psi> > 0.  mu_L is computed from the
    representative normalized so that <w_plus^(x)L|Psi> = <w_plus|v_plus>^L.
    '''
    values, vectors = np.linalg.eigh(H)
    scale = max(np.linalg.norm(H, 2), 1.0)
    energy = float(values[0])
    if abs(energy) > 1e-9 * scale:
        raise SingletError('ground energy %.3e of the supersymmetric '
                           'Hamiltonian is not zero at L=%d' % (energy, L))
    multiplicity = linalg.count_near(values, 0.0, 1e-9 * scale)
    if multiplicity != 1:
        logging.warning('zero-energy space at L=%d has dimension %d',
                        L, multiplicity)
    w_product = product_state(basis.w_plus, L)
    psi = _phase_fixed(vectors[:, 0], w_product)

    residual_q = np.linalg.norm(global_supercharge(q, L) @ psi)
    residual_qdag = 0.0
    if L > 1:
        residual_qdag = np.linalg.norm(
            global_supercharge(q, L - 1).conj().T @ psi)

    pairing = np.dot(basis.w_plus, basis.v_plus)
    overlap = np.dot(w_product, psi)
    representative = psi * pairing ** L / overlap
    mu_L = (np.dot(product_state(basis.v_plus, L), representative) /
            theta(1, math.pi / 3, basis.nome) ** (2 * L))
    return SingletData(L=L, psi=psi, mu_L=complex(mu_L), energy=energy,
                       residual_q=float(residual_q),
                       residual_qdag=float(residual_qdag),
                       overlap=complex(overlap), multiplicity=multiplicity)


def check_singlet(q, L, H, basis):
    '''Certify the singlet: zero energy, annihilation, mu_L and overlap.'''
    report = Report()
    params = dict(p=basis.nome.p, t=basis.t, L=L)
    try:
        data = singlet(q, L, H, basis)
    except SingletError as exc:
        report.add_error('susy.singlet', str(exc), **params)
        return report
    scale = max(np.linalg.norm(H, 2), 1.0)
    report.add('susy.singlet.energy', abs(data.energy) / scale, 1e-9,
               **params)
    report.add('susy.singlet.annihilated', data.residual_q, 1e-9, **params)
    report.add('susy.singlet.annihilated_adjoint', data.residual_qdag, 1e-9,
               **params)
    report.add('susy.singlet.unique', abs(data.multiplicity - 1), 0.5,
               **params)
    report.add_control('susy.singlet.mu_nonzero', abs(data.mu_L),
                       TOL_NONZERO, **params)
    report.add_control('susy.singlet.overlap', abs(data.overlap),
                       TOL_NONZERO, **params)
    if L == 1:
        _, residual = linalg.fit_scalar(data.psi, basis.v_plus)
        report.add('susy.singlet.product_state', residual, TOL_IDENTITY,
                   **params)
    return report


def rotated_supercharge(q, L, alpha):
    '''Return R^alpha(-pi) Q R^alpha(pi) on V^L.'''
    return (rotation(alpha, -math.pi, L + 1) @ global_supercharge(q, L) @
            rotation(alpha, math.pi, L))


def check_q_covariance(zeta, y0, L):
    '''Certify Q(zeta, y_alpha) ~ R^alpha(-pi) Q(zeta, y0) R^alpha(pi).

    The images agree up to a nonzero constant, fitted by least squares.
    '''
    report = Report()
    base = local_supercharge(zeta, y0)
    for alpha in (1, 2, 3):
        target = global_supercharge(
            local_supercharge(zeta, rotated_root(y0, alpha)), L)
        coeff, residual = linalg.fit_scalar(
            target, rotated_supercharge(base, L, alpha))
        report.add('susy.covariance', residual, TOL_IDENTITY, alpha=alpha,
                   L=L, zeta=zeta, y=y0, scale=abs(coeff))
    return report


def basis_state(spins):
    '''Product state of a string like "udu" (u = up, d = down).'''
    return kron_all(*[{'u': linalg.UP, 'd': linalg.DOWN}[s] for s in spins])

# Copyright (C) 2026 The susy8v Authors.

'''Parameters of the supersymmetric eight-vertex model.

A SpectralPoint (nome, eta, u, t, rho) is the single source of truth for
one model instance; everything else here is derived from it: the
anisotropy zeta and boundary parameter y, the vertex weights, the chain
couplings and the normalization relating the supersymmetric Hamiltonian to
the XYZ chain.
'''

from collections import namedtuple
import math

import numpy as np

from susy8v.report import Report
from susy8v.theta import Nome, theta, theta_deriv


ETA_SUSY = math.pi / 3
T_SINGLET = math.pi / 6
T_DEGENERATE = math.pi / 2

_ETA_TOL = 1e-12


class ParameterDomainError(Exception):
    '''Raise when a parameter lies outside the domain of an operation.'''
    pass


class SpectralPoint(namedtuple('SpectralPoint', 'nome eta u t rho')):
    '''One point (p, eta, u, t, rho) of the model.'''

    # pylint: disable=E1101,W0232

    @classmethod
    def make(cls, p, u, t=T_SINGLET, eta=ETA_SUSY, rho=1.0):
        '''Create a validated spectral point.'''
        nome = p if isinstance(p, Nome) else Nome.make(p)
        t = float(t)
        if not 0.0 <= t <= T_DEGENERATE + 1e-15:
            raise ParameterDomainError('t=%r is outside [0, pi/2]' % t)
        if not rho > 0.0:
            raise ParameterDomainError('rho=%r is not positive' % rho)
        return cls(nome=nome, eta=float(eta), u=float(u), t=t,
                   rho=float(rho))

    @property
    def is_supersymmetric(self):
        '''True on the slice eta = pi/3.'''
        return abs(self.eta - ETA_SUSY) < _ETA_TOL


VertexWeights = namedtuple('VertexWeights', 'a b c d')

ChainCouplings = namedtuple('ChainCouplings', 'zeta y J lam mu')

SusyNormalization = namedtuple('SusyNormalization', 'x lambda0')


def zeta_of_nome(q):
    '''Return zeta = (theta_1(2pi/3, p^2) / theta_4(2pi/3, p^2))^2.'''
    q2 = _nome(q).squared()
    ratio = theta(1, 2 * math.pi / 3, q2) / theta(4, 2 * math.pi / 3, q2)
    return float(ratio * ratio)


def y_of_t(q, t):
    '''Return y = theta_1(t, p^2) / theta_4(t, p^2) for real t.'''
    if not 0.0 <= t <= T_DEGENERATE + 1e-15:
        raise ParameterDomainError('t=%r is outside [0, pi/2]' % t)
    q2 = _nome(q).squared()
    return float(theta(1, t, q2) / theta(4, t, q2))


def _nome(q):
    '''Accept a Nome or a bare float.'''
    return q if isinstance(q, Nome) else Nome.make(q)


def weights(sp, u=None):
    '''Return the vertex weights a, b, c, d at spectral parameter u.'''
    if u is None:
        u = sp.u
    q2 = sp.nome.squared()
    two_eta = 2 * sp.eta
    t1_eta, t4_eta = theta(1, two_eta, q2), theta(4, two_eta, q2)
    t1_u, t4_u = theta(1, u, q2), theta(4, u, q2)
    t1_s, t4_s = theta(1, u + two_eta, q2), theta(4, u + two_eta, q2)
    rho = sp.rho
    return VertexWeights(a=rho * t4_eta * t4_u * t1_s,
                         b=rho * t4_eta * t1_u * t4_s,
                         c=rho * t1_eta * t4_u * t4_s,
                         d=rho * t1_eta * t1_u * t1_s)


def weight_derivatives(sp, u=None):
    '''Return the u-derivatives of the vertex weights.'''
    if u is None:
        u = sp.u
    q2 = sp.nome.squared()
    two_eta = 2 * sp.eta
    t1_eta, t4_eta = theta(1, two_eta, q2), theta(4, two_eta, q2)
    t1_u, t4_u = theta(1, u, q2), theta(4, u, q2)
    t1_s, t4_s = theta(1, u + two_eta, q2), theta(4, u + two_eta, q2)
    dt1_u, dt4_u = theta_deriv(1, u, q2), theta_deriv(4, u, q2)
    dt1_s = theta_deriv(1, u + two_eta, q2)
    dt4_s = theta_deriv(4, u + two_eta, q2)
    rho = sp.rho
    return VertexWeights(a=rho * t4_eta * (dt4_u * t1_s + t4_u * dt1_s),
                         b=rho * t4_eta * (dt1_u * t4_s + t1_u * dt4_s),
                         c=rho * t1_eta * (dt4_u * t4_s + t4_u * dt4_s),
                         d=rho * t1_eta * (dt1_u * t1_s + t1_u * dt1_s))


def combined_weight_residual(w):
    '''Relative residual of (a^2+ab)(b^2+ab) = (c^2+ab)(d^2+ab).'''
    a, b, c, d = w
    ab = a * b
    lhs = (a * a + ab) * (b * b + ab)
    rhs = (c * c + ab) * (d * d + ab)
    scale = max(abs(lhs), abs(rhs))
    if scale == 0.0:
        return 0.0
    return abs(lhs - rhs) / scale


def singlet_polynomial(zeta, y):
    '''Evaluate zeta (1 + y^4) - (3 - zeta^2) y^2.'''
    return zeta * (1 + y ** 4) - (3 - zeta * zeta) * y * y


def y_roots(zeta):
    '''Return the four real roots in y of the singlet polynomial, ascending.'''
    if not 0.0 < zeta < 1.0:
        raise ParameterDomainError('zeta=%r is outside (0, 1)' % zeta)
    b = 3.0 - zeta * zeta
    disc = math.sqrt(b * b - 4.0 * zeta * zeta)
    # Smaller root of zeta Y^2 - b Y + zeta in Y = y^2, free of cancellation.
    y0 = math.sqrt(2.0 * zeta / (b + disc))
    return (-1.0 / y0, -y0, y0, 1.0 / y0)


def principal_root(zeta):
    '''Return y0, the unique root in (0, 1).'''
    return y_roots(zeta)[2]


def rotated_root(y0, alpha):
    '''Image of y0 under the rotation by pi about axis alpha.'''
    return {1: 1.0 / y0, 2: -1.0 / y0, 3: -y0}[alpha]


def raw_couplings(zeta, y, mu=None):
    '''J and lambda from raw (zeta, y), without domain validation.'''
    y = complex(y)
    norm = 1.0 + abs(y) ** 2
    J = (1.0 + zeta, 1.0 - zeta, (zeta * zeta - 1.0) / 2)
    lam = (-(1.0 + zeta) * y.real / norm,
           -(1.0 - zeta) * y.imag / norm,
           (zeta * zeta - 1.0) / 4 * (1.0 - abs(y) ** 2) / norm)
    return ChainCouplings(zeta=zeta, y=y, J=J, lam=lam, mu=mu)


def mu_couplings(q, eta, y):
    '''Boundary parameters mu_alpha for the theta-form K-matrix.'''
    nome = _nome(q)
    y = complex(y)
    norm = 1.0 + abs(y) ** 2
    t1 = theta(1, eta, nome)
    return (theta(4, eta, nome) / t1 * 2 * y.real / norm,
            theta(3, eta, nome) / t1 * 2 * y.imag / norm,
            theta(2, eta, nome) / t1 * (1 - abs(y) ** 2) / norm)


def chain_couplings(sp):
    '''Return zeta, y and the nine coupling constants at sp.'''
    if not sp.is_supersymmetric:
        raise ParameterDomainError('chain couplings need eta = pi/3, got %r'
                                   % sp.eta)
    zeta = zeta_of_nome(sp.nome)
    y = y_of_t(sp.nome, sp.t)
    return raw_couplings(zeta, y, mu=mu_couplings(sp.nome, sp.eta, y))


def anisotropy_from_weights(sp):
    '''J_alpha from the weight derivatives at u = 0.'''
    dw = weight_derivatives(sp, 0.0)
    return (1.0 + dw.d / dw.b, 1.0 - dw.d / dw.b, (dw.a - dw.c) / dw.b)


def theta_scale(sp):
    '''J = (theta_4(0, p^2) / theta_4(2 eta, p^2))^2.'''
    q2 = sp.nome.squared()
    return float((theta(4, 0.0, q2) / theta(4, 2 * sp.eta, q2)) ** 2)


def anisotropy_theta(sp):
    '''J_alpha = J theta_{5-alpha}(2 eta, p) / theta_{5-alpha}(0, p).'''
    scale = theta_scale(sp)
    two_eta = 2 * sp.eta
    return tuple(scale * theta(5 - alpha, two_eta, sp.nome) /
                 theta(5 - alpha, 0.0, sp.nome) for alpha in (1, 2, 3))


def boundary_fields(sp, mu, J=None):
    '''Coefficients of the boundary field h_B for general eta.'''
    if J is None:
        J = anisotropy_from_weights(sp)
    two_eta = 2 * sp.eta
    prefactor = -theta(1, two_eta, sp.nome) / 2
    return tuple(prefactor * J[alpha - 1] * mu[alpha - 1] /
                 theta(5 - alpha, two_eta, sp.nome) for alpha in (1, 2, 3))


def general_couplings(sp, mu):
    '''Couplings of the Hamiltonian generated by the theta-form K-matrix.'''
    J = anisotropy_from_weights(sp)
    dw = weight_derivatives(sp, 0.0)
    return ChainCouplings(zeta=dw.d / dw.b, y=None, J=J,
                          lam=boundary_fields(sp, mu, J), mu=tuple(mu))


def boundary_coupling_sum(couplings):
    '''Return sum_alpha lambda_alpha^2 / J_alpha.'''
    return sum(lam * lam / J for lam, J in zip(couplings.lam, couplings.J))


def susy_normalization(zeta, y):
    '''Return x and lambda_0 relating the two Hamiltonians.'''
    y = complex(y)
    mod2 = abs(y) ** 2
    re_y2 = (y * y).real
    core = 1.0 + mod2 * mod2 + (zeta * zeta - 1.0) * mod2 - 2 * zeta * re_y2
    x = (1.0 + mod2) * core
    if not x > 0.0:
        raise ParameterDomainError('x=%r is not positive at zeta=%r, y=%r' %
                                   (x, zeta, y))
    lambda0 = ((1.0 + 3 * zeta * zeta) / 4 -
               (zeta * zeta - 1.0) *
               ((3.0 + zeta * zeta) * mod2 - 4 * zeta * re_y2) / (2 * core))
    return SusyNormalization(x=x, lambda0=lambda0)


def ground_energy(L, zeta):
    '''Return E_0 = -(L-1)(3+zeta^2)/4 - (1+zeta)^2/2.'''
    if L < 1:
        raise ParameterDomainError('chain length %r is below 1' % L)
    return -(L - 1) * (3.0 + zeta * zeta) / 4 - (1.0 + zeta) ** 2 / 2


def boundary_energy(zeta):
    '''Return the L-independent part (zeta^2 + 4 zeta - 1)/4 of -E_0.'''
    return (zeta * zeta + 4 * zeta - 1.0) / 4


def grid_points(p_values, t_values):
    '''Map a (p, t) grid to (zeta, y) pairs.'''
    return np.array([(zeta_of_nome(p), y_of_t(p, t))
                     for p in p_values for t in t_values])


def check_weights(sp):
    '''Certify the weight identities at one spectral point.'''
    report = Report()
    w = weights(sp)
    params = dict(p=sp.nome.p, eta=sp.eta, u=sp.u, rho=sp.rho)
    if sp.is_supersymmetric:
        report.add('params.combined_weights', combined_weight_residual(w),
                   1e-11, **params)
        zeta = zeta_of_nome(sp.nome)
        report.add('params.zeta', abs(w.c * w.d / (w.a * w.b) - zeta) / zeta,
                   1e-11, **params)
        if 0.0 < sp.u < ETA_SUSY:
            report.add_control('params.positive', min(w) / max(w), 0.0,
                               **params)
    return report


def check_roots(q):
    '''Certify the roots of the singlet polynomial and the coupling forms.'''
    report = Report()
    nome = _nome(q)
    zeta = zeta_of_nome(nome)
    params = dict(p=nome.p, zeta=zeta)
    roots = y_roots(zeta)
    report.add('params.roots',
               max(abs(singlet_polynomial(zeta, y)) for y in roots), 1e-12,
               **params)
    report.add('params.principal_root',
               abs(principal_root(zeta) - y_of_t(nome, T_SINGLET)), 1e-11,
               **params)
    sp = SpectralPoint.make(nome, 0.1)
    couplings = chain_couplings(sp)
    report.add('params.anisotropy',
               max(abs(a - b) for a, b in zip(couplings.J,
                                              anisotropy_theta(sp))),
               1e-11, **params)
    return report


def check_parameter_map(p_values, t_values):
    '''Certify that (p, t) -> (zeta, y) is injective on a grid into D.'''
    report = Report()
    interior = [t for t in t_values if 0.0 < t < T_DEGENERATE]
    points = grid_points(p_values, interior)
    params = dict(p=list(p_values), t=list(interior))
    if len(points) > 1:
        diffs = points[:, None, :] - points[None, :, :]
        distance = np.sqrt(np.sum(diffs * diffs, axis=-1))
        distance[np.diag_indices(len(points))] = np.inf
        report.add_control('params.injective', float(np.min(distance)),
                           1e-9, **params)
    margin = 1.0
    if len(points):
        margin = min(susy_normalization(zeta, y).x for zeta, y in points)
    report.add_control('params.domain', margin, 0.0, **params)
    return report

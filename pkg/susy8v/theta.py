# Copyright (C) 2026 The susy8v Authors.

'''Jacobi theta functions in the nome convention.

The second argument is the nome q itself:

    theta_1(z, q) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1)z)
    theta_2(z, q) = 2 sum_{n>=0} q^{(n+1/2)^2} cos((2n+1)z)
    theta_3(z, q) = 1 + 2 sum_{n>=1} q^{n^2} cos(2nz)
    theta_4(z, q) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2nz)

so the weights' theta_j(u, p^2) is theta(j, u, nome.squared()).  Real
arguments are summed in real arithmetic and come back as floats; complex
arguments come back complex.
'''

from collections import namedtuple
import math

import numpy as np

from susy8v.report import Report


TOL_THETA = 1e-16
N_MAX = 64

# Random points per parity and quasi-periodicity check.
SAMPLES = 1000

# Largest exponent the series envelope may reach before doubles overflow.
_MAX_EXPONENT = 700.0


class ThetaDomainError(Exception):
    '''Raise when a theta series cannot converge at working precision.'''
    pass


class Nome(namedtuple('Nome', 'p s')):
    '''Elliptic nome p = exp(-s) with 0 < p < 1.'''

    # pylint: disable=E1101,W0232

    @classmethod
    def make(cls, p):
        '''Create a nome from p.'''
        p = float(p)
        if not 0.0 < p < 1.0:
            raise ThetaDomainError('nome p=%r is outside (0, 1)' % p)
        return cls(p=p, s=-math.log(p))

    def squared(self):
        '''Return the nome p^2.'''
        return Nome(p=self.p * self.p, s=2.0 * self.s)


def _as_nome(q):
    '''Accept a Nome or a bare float.'''
    if isinstance(q, Nome):
        return q
    return Nome.make(q)


def _series(j, z, nome, order):
    '''Sum the order-th z-derivative of the theta_j series.'''
    if j not in (1, 2, 3, 4):
        raise ThetaDomainError('theta index %r is not in {1, 2, 3, 4}' % (j,))
    z = np.asarray(z)
    if np.iscomplexobj(z):
        z = z.astype(complex)
        imag = float(np.max(np.abs(z.imag))) if z.size else 0.0
    else:
        z = z.astype(float)
        imag = 0.0
    if imag >= nome.s * N_MAX or imag * imag / nome.s > _MAX_EXPONENT:
        raise ThetaDomainError('|Im z|=%g is too large for nome p=%g' %
                               (imag, nome.p))

    half = j in (1, 2)
    alternating = j in (1, 4)
    shift = order * math.pi / 2
    total = np.zeros(z.shape, dtype=z.dtype)
    scale = 0.0
    if not half and order == 0:
        total += 1.0
        scale = 1.0

    first = 0 if half else 1
    for n in range(first, first + N_MAX):
        k = n + 0.5 if half else float(n)
        freq = 2.0 * k
        exponent = -nome.s * k * k
        envelope = math.exp(exponent + freq * imag) * freq ** order
        if envelope < TOL_THETA * scale:
            break
        coeff = 2.0 * math.exp(exponent) * freq ** order
        if alternating and n % 2:
            coeff = -coeff
        if j == 1:
            total += coeff * np.sin(freq * z + shift)
        else:
            total += coeff * np.cos(freq * z + shift)
        scale += envelope
    else:
        raise ThetaDomainError('theta_%d series did not converge in %d terms '
                               '(p=%g, |Im z|=%g)' % (j, N_MAX, nome.p, imag))

    if total.ndim == 0:
        return total[()]
    return total


def theta(j, z, q):
    '''Evaluate theta_j(z, q).'''
    return _series(j, z, _as_nome(q), 0)


def theta_deriv(j, z, q, order=1):
    '''Evaluate the order-th z-derivative of theta_j(z, q).'''
    if order not in (1, 2):
        raise ThetaDomainError('derivative order %r is not 1 or 2' % (order,))
    return _series(j, z, _as_nome(q), order)


def _richardson(j, z, nome, step=1e-3):
    '''Fourth-order central difference of theta_j at z.'''
    near = theta(j, z + step, nome) - theta(j, z - step, nome)
    far = theta(j, z + 2 * step, nome) - theta(j, z - 2 * step, nome)
    return (8 * near - far) / (12 * step)


def check_identities(q, rng, samples=SAMPLES):
    '''Certify parity, quasi-periodicity and the derivative identities.

    The identity theta_1'(0) = theta_2 theta_3 theta_4 (0) is measured
    against theta_2 theta_3^2 (0), the size of the product before the
    alternating theta_4 series cancels; for small p the two agree.
    '''
    report = Report()
    nome = _as_nome(q)
    z = rng.uniform(-3.0, 3.0, size=samples)
    parity = quasi = derivative = 0.0
    for j in (1, 2, 3, 4):
        plus, minus = theta(j, z, nome), theta(j, -z, nome)
        scale = max(1.0, float(np.max(np.abs(plus))))
        sign = 1.0 if j == 1 else -1.0
        parity = max(parity, float(np.max(np.abs(plus + sign * minus))) /
                     scale)
        fd = np.array([_richardson(j, x, nome) for x in z[:5]])
        exact = theta_deriv(j, z[:5], nome)
        derivative = max(derivative, float(np.max(
            np.abs(fd - exact) / np.maximum(1.0, np.abs(exact)))))
    for j, sign in ((1, 1.0), (4, -1.0)):
        shifted = theta(j, z + math.pi, nome)
        scale = max(1.0, float(np.max(np.abs(shifted))))
        quasi = max(quasi, float(np.max(
            np.abs(shifted + sign * theta(j, z, nome)))) / scale)

    report.add('theta.parity', parity, 1e-13, p=nome.p, samples=samples)
    report.add('theta.quasi_periodic', quasi, 1e-12, p=nome.p,
               samples=samples)
    report.add('theta.derivative', derivative, 1e-8, p=nome.p)
    theta2, theta3 = theta(2, 0.0, nome), theta(3, 0.0, nome)
    product = theta2 * theta3 * theta(4, 0.0, nome)
    report.add('theta.derivative_at_zero',
               abs(theta_deriv(1, 0.0, nome) - product) /
               abs(theta2 * theta3 * theta3), 1e-12, p=nome.p)
    return report

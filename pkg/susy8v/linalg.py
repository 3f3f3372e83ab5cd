# Copyright (C) 2026 The susy8v Authors.

'''Operator algebra on tensor products of spin-1/2 spaces.

Basis order: |s_1 ... s_L> has index sum bit(s_j) 2^(L-j) with bit(up) = 0
and bit(down) = 1, so site 1 is the most significant bit.  Where an
auxiliary space V_0 is present it is the most significant slot.
'''

from collections import namedtuple
from functools import reduce
import logging

import numpy as np
from scipy.linalg import expm
from scipy.sparse.linalg import (LinearOperator, eigs,
                                 ArpackNoConvergence, ArpackError)


DENSE_CAP = 2 ** 12
GAP_FLOOR = 1e-6
DEGENERACY_TOL = 1e-8
# Below this dimension eig_extreme builds the matrix instead of iterating.
_ARNOLDI_MIN_DIM = 64

IDENTITY = np.eye(2, dtype=complex)

SIGMA = {
    0: IDENTITY,
    1: np.array([[0, 1], [1, 0]], dtype=complex),
    2: np.array([[0, -1j], [1j, 0]], dtype=complex),
    3: np.array([[1, 0], [0, -1]], dtype=complex),
}

SWAP = np.array([[1, 0, 0, 0],
                 [0, 0, 1, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1]], dtype=complex)

UP = np.array([1, 0], dtype=complex)
DOWN = np.array([0, 1], dtype=complex)


class DenseCapError(Exception):
    '''Raise when a dense operation would exceed DENSE_CAP rows.'''
    pass


class ConvergenceError(Exception):
    '''Raise when an iterative eigensolver fails to converge.'''

    def __init__(self, message, best_residual=float('nan')):
        '''Initialize the object.'''
        super(ConvergenceError, self).__init__(message)
        self.best_residual = best_residual


class InconclusiveRankError(Exception):
    '''Raise when singular values do not separate into kernel and image.'''
    pass


SpectralResult = namedtuple('SpectralResult',
                            'eigenvalues eigenvectors degeneracy_gaps '
                            'residual')


def check_dense(dim):
    '''Raise DenseCapError when dim exceeds the dense cap.'''
    if dim > DENSE_CAP:
        raise DenseCapError('dimension %d exceeds the dense cap %d; use the '
                            'matrix-free path (eig_extreme)' %
                            (dim, DENSE_CAP))


def kron_all(*ops):
    '''Kronecker product of the arguments, left to right.'''
    return reduce(np.kron, ops)


def kron_place(op, first_site, n_sites):
    '''Place op, acting on adjacent sites from first_site on, in n_sites.'''
    op = np.asarray(op)
    width = int(round(np.log2(op.shape[0])))
    if op.shape != (2 ** width, 2 ** width):
        raise ValueError('operator shape %r is not a square power of 2' %
                         (op.shape,))
    if first_site < 1 or first_site + width - 1 > n_sites:
        raise ValueError('cannot place %d-site operator at site %d of %d' %
                         (width, first_site, n_sites))
    check_dense(2 ** n_sites)
    left = np.eye(2 ** (first_site - 1))
    right = np.eye(2 ** (n_sites - first_site - width + 1))
    return kron_all(left, op, right)


def kron_insert(op, site, n_sites):
    '''Embed a map V -> V (x) V at site of an n_sites chain.

    The result maps V^n_sites to V^(n_sites+1); the new site is site+1.
    '''
    left = np.eye(2 ** (site - 1))
    right = np.eye(2 ** (n_sites - site))
    return kron_all(left, op, right)


def _as_tensor(state, n_sites):
    '''Reshape a vector or a block of column vectors into site axes.'''
    state = np.asarray(state)
    batch = state.shape[1:]
    return state.reshape((2,) * n_sites + batch), batch


def apply_one(op, state, site, n_sites):
    '''Apply a 2x2 op at site (1-based) to state without building a matrix.'''
    psi, batch = _as_tensor(state, n_sites)
    out = np.tensordot(op, psi, axes=([1], [site - 1]))
    out = np.moveaxis(out, 0, site - 1)
    return out.reshape((2 ** n_sites,) + batch)


def apply_pair(op, state, i, j, n_sites):
    '''Apply a 4x4 op acting on the ordered site pair (i, j) to state.'''
    if i == j:
        raise ValueError('pair sites coincide: %d' % i)
    psi, batch = _as_tensor(state, n_sites)
    op = np.asarray(op).reshape(2, 2, 2, 2)
    out = np.tensordot(op, psi, axes=([2, 3], [i - 1, j - 1]))
    out = np.moveaxis(out, [0, 1], [i - 1, j - 1])
    return out.reshape((2 ** n_sites,) + batch)


def place_pair(op, i, j, n_sites):
    '''Dense matrix of a 4x4 op on sites i, j, adjacent or not.'''
    dim = 2 ** n_sites
    check_dense(dim)
    return apply_pair(op, np.eye(dim, dtype=complex), i, j, n_sites)


def rotation(alpha, angle, n_sites):
    '''Return exp(i angle/2 sum_j sigma^alpha_j).'''
    one = expm(0.5j * angle * SIGMA[alpha])
    check_dense(2 ** n_sites)
    return kron_all(*([one] * n_sites))


def product_state(vector, n_sites):
    '''Return vector^(x) n_sites.'''
    return kron_all(*([np.asarray(vector, dtype=complex)] * n_sites))


def partial_trace_aux(matrix):
    '''Trace out the auxiliary (most significant) slot.'''
    matrix = np.asarray(matrix)
    rows, cols = matrix.shape
    if rows != cols or rows % 2:
        raise ValueError('cannot trace a %dx%d operator over V_0' %
                         (rows, cols))
    dim = rows // 2
    return np.einsum('aiaj->ij', matrix.reshape(2, dim, 2, dim))


def partial_transpose_aux(matrix):
    '''Transpose in the auxiliary (most significant) slot only.'''
    matrix = np.asarray(matrix)
    rows, cols = matrix.shape
    blocks = matrix.reshape(2, rows // 2, 2, cols // 2)
    return blocks.transpose(2, 1, 0, 3).reshape(rows, cols)


def rank_tolerance(shape):
    '''Default relative rank tolerance: dim * eps * 64.'''
    return max(shape) * np.finfo(float).eps * 64


def numeric_rank(matrix, tol_rel=None):
    '''Return the numerical rank of matrix and an orthonormal kernel basis.

    Singular values between tol_rel * s_max and GAP_FLOOR * s_max are
    neither clearly zero nor clearly nonzero and raise
    InconclusiveRankError.
    '''
    matrix = np.asarray(matrix)
    if tol_rel is None:
        tol_rel = rank_tolerance(matrix.shape)
    _, sing, vh = np.linalg.svd(matrix)
    cols = matrix.shape[1]
    smax = sing[0] if sing.size else 0.0
    if smax == 0.0:
        return 0, np.eye(cols, dtype=complex)
    grey = (sing > tol_rel * smax) & (sing < GAP_FLOOR * smax)
    if np.any(grey):
        raise InconclusiveRankError(
            'singular values %s lie between %.1e and %.1e of s_max' %
            (sing[grey], tol_rel, GAP_FLOOR))
    rank = int(np.count_nonzero(sing > tol_rel * smax))
    kernel = vh[rank:].conj().T
    logging.debug('rank %d of %dx%d, smallest kept %.3e, largest dropped '
                  '%.3e', rank, matrix.shape[0], cols,
                  sing[rank - 1] if rank else 0.0,
                  sing[rank] if rank < sing.size else 0.0)
    return rank, kernel


def sort_spectrum(values):
    '''Indices ordering values by descending real part, then imaginary.'''
    values = np.asarray(values)
    return np.lexsort((-values.imag, -values.real))


def degeneracy_gaps(values):
    '''Gaps between consecutive sorted eigenvalues.'''
    return [float(abs(left - right))
            for left, right in zip(values[:-1], values[1:])]


def eig_dense(matrix, vectors=True):
    '''Full spectrum of a square dense operator.'''
    matrix = np.asarray(matrix)
    dim = matrix.shape[0]
    if matrix.shape != (dim, dim):
        raise ValueError('matrix %r is not square' % (matrix.shape,))
    check_dense(dim)
    if vectors:
        values, vecs = np.linalg.eig(matrix)
    else:
        values, vecs = np.linalg.eigvals(matrix), None
    order = sort_spectrum(values)
    values = values[order]
    residual = 0.0
    if vecs is not None:
        vecs = vecs[:, order]
        norm = max(np.linalg.norm(matrix, 2), np.finfo(float).tiny)
        residual = float(np.max(np.linalg.norm(
            matrix @ vecs - vecs * values, axis=0)) / norm)
    return SpectralResult(eigenvalues=values, eigenvectors=vecs,
                          degeneracy_gaps=degeneracy_gaps(values),
                          residual=residual)


def eig_extreme(apply, dim, k=1, which='LR', tol=1e-12, maxiter=None,
                dtype=complex):
    '''Top-k eigenvalues of a matrix-free operator by restarted Arnoldi.

    which is 'LR' (largest real part) or 'LM' (largest magnitude).
    '''
    if which not in ('LR', 'LM'):
        raise ValueError('unsupported selection %r' % which)
    if dim <= max(_ARNOLDI_MIN_DIM, k + 2):
        matrix = np.column_stack([apply(col) for col in
                                  np.eye(dim, dtype=dtype)])
        full = eig_dense(matrix)
        if which == 'LM':
            order = np.argsort(-np.abs(full.eigenvalues), kind='stable')
        else:
            order = np.arange(dim)
        order = order[:k]
        values = full.eigenvalues[order]
        return SpectralResult(eigenvalues=values,
                              eigenvectors=full.eigenvectors[:, order],
                              degeneracy_gaps=degeneracy_gaps(values),
                              residual=full.residual)

    operator = LinearOperator((dim, dim), matvec=apply, dtype=dtype)
    ncv = min(dim - 1, max(20, 2 * k + 1))
    v0 = np.ones(dim, dtype=dtype) / np.sqrt(dim)
    try:
        values, vecs = eigs(operator, k=k, which=which, ncv=ncv, v0=v0,
                            tol=tol, maxiter=maxiter)
    except ArpackNoConvergence as exc:
        best = _best_residual(apply, exc.eigenvalues, exc.eigenvectors)
        raise ConvergenceError('Arnoldi did not converge for k=%d, dim=%d' %
                               (k, dim), best_residual=best)
    except ArpackError as exc:
        raise ConvergenceError('Arnoldi failed: %s' % exc)
    order = sort_spectrum(values) if which == 'LR' else \
        np.argsort(-np.abs(values), kind='stable')
    values, vecs = values[order], vecs[:, order]
    residual = _best_residual(apply, values, vecs, worst=True)
    logging.debug('eig_extreme dim=%d k=%d residual=%.2e', dim, k, residual)
    return SpectralResult(eigenvalues=values, eigenvectors=vecs,
                          degeneracy_gaps=degeneracy_gaps(values),
                          residual=residual)


def _best_residual(apply, values, vecs, worst=False):
    '''Relative eigenpair residual |Mv - lv| / |l| over returned pairs.'''
    if values is None or len(values) == 0:
        return float('nan')
    residuals = []
    for value, vec in zip(values, vecs.T):
        scale = max(abs(value), np.finfo(float).tiny) * np.linalg.norm(vec)
        residuals.append(np.linalg.norm(apply(vec) - value * vec) / scale)
    return float(max(residuals) if worst else min(residuals))


def count_near(values, target, rtol=DEGENERACY_TOL):
    '''Count values within rtol * max(1, |target|) of target.'''
    scale = rtol * max(1.0, abs(target))
    return int(np.count_nonzero(np.abs(np.asarray(values) - target) <= scale))


def relative_residual(lhs, rhs):
    '''Return |lhs - rhs| / max(|lhs|, |rhs|) in the Frobenius norm.'''
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    scale = max(np.linalg.norm(lhs), np.linalg.norm(rhs))
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(lhs - rhs) / scale)


def fit_scalar(target, basis):
    '''Least-squares c with target ~ c basis; return (c, relative residual).'''
    target = np.asarray(target).ravel()
    basis = np.asarray(basis).ravel()
    norm = np.vdot(basis, basis)
    if norm == 0:
        return 0.0, (0.0 if not np.any(target) else 1.0)
    coeff = np.vdot(basis, target) / norm
    scale = max(np.linalg.norm(target), np.finfo(float).tiny)
    return coeff, float(np.linalg.norm(target - coeff * basis) / scale)


def fit_affine(target, basis):
    '''Least squares target ~ x (basis + c Id); return (x, c, residual).'''
    target = np.asarray(target)
    basis = np.asarray(basis)
    ident = np.eye(basis.shape[0])
    design = np.column_stack([basis.ravel(), ident.ravel()])
    (x, xc), _, _, _ = np.linalg.lstsq(design, target.ravel(), rcond=None)
    scale = max(np.linalg.norm(target), np.finfo(float).tiny)
    residual = np.linalg.norm(target - x * basis - xc * ident) / scale
    return x, (xc / x if x != 0 else np.nan), float(residual)


def unitarity_defect(matrix):
    '''Return |U^dagger U - 1| / sqrt(dim).'''
    matrix = np.asarray(matrix)
    dim = matrix.shape[0]
    return float(np.linalg.norm(matrix.conj().T @ matrix - np.eye(dim)) /
                 np.sqrt(dim))

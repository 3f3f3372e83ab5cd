# Copyright (C) 2026 The susy8v Authors.

'''Print single constructions for exploration.'''

from collections import OrderedDict

import numpy as np

from susy8v.hamiltonian import susy_hamiltonian, xyz_at
from susy8v.params import (SpectralPoint, T_SINGLET,
                           combined_weight_residual, weights, y_of_t,
                           zeta_of_nome)
from susy8v.report import format_matrix
from susy8v.susy import singlet, supercharge_at, theta_basis
from susy8v.transfer import TransferSpec, transfer_dense
from susy8v.vertex import k_pair_weights


def _spectral_point(args):
    '''Spectral point of the command-line parameters.'''
    sp = SpectralPoint.make(args.p, args.u, args.t)
    if args.eta is not None:
        sp = sp._replace(eta=args.eta)
    return sp


def _y(args, sp):
    '''y from --y, otherwise y(t).'''
    if args.y is not None:
        return args.y
    return y_of_t(sp.nome, sp.t)


def print_weights(args, output):
    '''Print a, b, c, d and the residual of the combined-weight identity.'''
    sp = _spectral_point(args)
    w = weights(sp)
    rows = [[value] for value in w]
    if args.csv:
        format_matrix(np.array(rows), output, csv_mode=True)
        return
    for name, value in zip('abcd', w):
        output.write('%s = %.17g\n' % (name, value))
    output.write('combined-weight residual = %.3e\n' %
                 combined_weight_residual(w))


def print_kmatrix(args, output):
    '''Print the weight-form K^- and K^+.'''
    sp = _spectral_point(args)
    pair = k_pair_weights(weights(sp), _y(args, sp))
    for name in ('K_minus', 'K_plus'):
        if not args.csv:
            output.write('%s:\n' % name)
        format_matrix(getattr(pair, name), output, csv_mode=args.csv)


def print_hamiltonian(args, output):
    '''Print H_XYZ at (zeta(p), y).'''
    sp = _spectral_point(args)
    format_matrix(xyz_at(args.L, zeta_of_nome(sp.nome), _y(args, sp)),
                  output, csv_mode=args.csv)


def print_transfer(args, output):
    '''Print the dense transfer matrix.'''
    sp = _spectral_point(args)
    spec = TransferSpec.make(args.L, sp, y=_y(args, sp))
    format_matrix(transfer_dense(spec), output, csv_mode=args.csv)


def print_singlet(args, output):
    '''Print the phase-fixed singlet amplitudes at t = pi/6.'''
    sp = _spectral_point(args)
    q = supercharge_at(sp.nome, T_SINGLET)
    basis = theta_basis(sp.nome, T_SINGLET)
    psi = singlet(q, args.L, susy_hamiltonian(q, args.L), basis).psi
    format_matrix(psi, output, csv_mode=args.csv)


PRINTERS = OrderedDict([
    ('weights', print_weights),
    ('kmatrix', print_kmatrix),
    ('hamiltonian', print_hamiltonian),
    ('transfer', print_transfer),
    ('singlet', print_singlet),
])


def print_object(kind, args, output):
    '''Print the construction named by kind.'''
    PRINTERS[kind](args, output)

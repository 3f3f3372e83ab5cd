# Copyright (C) 2026 The susy8v Authors.

'''Statements certified by each check, keyed by check name.

A check without its own entry inherits the statement of its longest
dotted prefix.
'''

CLAIMS = {
    # theta
    'theta': 'theta series agree with their defining identities',
    'theta.parity': 'theta_1 is odd and theta_2, theta_3, theta_4 are even',
    'theta.quasi_periodic':
        'theta_1(z + pi) = -theta_1(z) and theta_4(z + pi) = theta_4(z)',
    'theta.derivative': 'theta derivatives match finite differences',
    'theta.derivative_at_zero':
        "theta_1'(0) = theta_2(0) theta_3(0) theta_4(0)",

    # params
    'params': 'parameter map and weight identities',
    'params.combined_weights':
        'weights obey (a^2+ab)(b^2+ab) = (c^2+ab)(d^2+ab) at eta = pi/3',
    'params.zeta': 'zeta = cd/ab agrees with its theta form',
    'params.positive': 'all four weights are positive for 0 < u < pi/3',
    'params.roots': 'the four roots solve the singlet condition on y',
    'params.principal_root': 'the root in (0, 1) is y at t = pi/6',
    'params.anisotropy': 'J_alpha agree with their theta form',
    'params.injective': '(p, t) -> (zeta, y) is injective',
    'params.domain': 'the normalization x is positive on the image',

    # susy
    'susy': 'supersymmetry of the XYZ chain',
    'susy.nilpotent': 'the supercharge squares to zero',
    'susy.nilpotent_adjoint': 'the adjoint supercharge squares to zero',
    'susy.coassociative': 'the local supercharge is coassociative',
    'susy.q_eigenvector': 'q maps v_eps to Lambda_eps v_eps (x) v_eps',
    'susy.dual_eigenvector': 'the dual vectors diagonalize the adjoint q',
    'susy.pairing': '<w_eps|v_eps\'> is diagonal with the theta value',
    'susy.q_derivative': 'q differentiates v_plus (x) v_plus along t at '
                         't = pi/2',
    'susy.q_derivative.finite_difference':
        'the t-derivative of Lambda_plus matches finite differences',
    'susy.determinant': 'v_plus and v_minus form a basis off t = pi/2',
    'susy.determinant.derivative':
        'v_plus and its t-derivative form a basis at t = pi/2',
    'susy.degenerate_vectors': 'v_minus coincides with v_plus at t = pi/2',
    'susy.polynomial_form': 'theta vectors are proportional to their '
                            'polynomial forms at t = pi/6',
    'susy.lambda_plus_zero': 'Lambda_plus vanishes at t = pi/6',
    'susy.dual_closed': 'the adjoint supercharge closes on w_eps (x) w_eps',
    'susy.alpha_chi_nonzero': '<alpha|chi> is nonzero',
    'susy.cohomology': 'dimension of the supercharge cohomology',
    'susy.homology': 'dimension of the adjoint supercharge homology',
    'susy.singlet': 'the supersymmetric ground state is a singlet',
    'susy.singlet.energy': 'the singlet has zero energy',
    'susy.singlet.annihilated': 'the supercharge annihilates the singlet',
    'susy.singlet.annihilated_adjoint':
        'the adjoint supercharge annihilates the singlet',
    'susy.singlet.unique': 'the zero-energy space is one-dimensional',
    'susy.singlet.mu_nonzero': 'the singlet has a nonzero component mu_L',
    'susy.singlet.overlap': 'the singlet overlaps the dual product state',
    'susy.singlet.product_state': 'for one site the singlet is v_plus',
    'susy.covariance': 'pi-rotations map the supercharge to its image at '
                       'the rotated root, up to a constant',

    # hamiltonian
    'hamiltonian': 'Hamiltonian identities',
    'hamiltonian.affine': 'the supersymmetric Hamiltonian is an affine '
                          'function of the XYZ Hamiltonian',
    'hamiltonian.affine.fit': 'a free affine fit reproduces x and the shift',
    'hamiltonian.hermitian': 'both Hamiltonians are Hermitian',
    'hamiltonian.nonnegative': 'the supersymmetric Hamiltonian is '
                               'nonnegative',
    'hamiltonian.anisotropy': 'chain anisotropy from weights matches zeta',
    'hamiltonian.commutes_with_q': 'the Hamiltonian commutes with the '
                                   'supercharge',
    'hamiltonian.rotation': 'spin rotations map the Hamiltonian to its image',
    'hamiltonian.rotation.unitary': 'the spin rotations are unitary',
    'hamiltonian.root_of_theta': 'y at t = pi/6 is the principal root',
    'hamiltonian.ground_state': 'at the roots the ground state is a '
                                'singlet with the closed-form energy',
    'hamiltonian.ground_state.energy':
        'E_0 = -(L-1)(3+zeta^2)/4 - (1+zeta)^2/2',
    'hamiltonian.ground_state.gap': 'the ground state is non-degenerate',
    'hamiltonian.ground_state.annihilated':
        'the ground state is annihilated by both supercharges',
    'hamiltonian.ground_state.off_root':
        'off the roots the ground state is not a singlet',
    'hamiltonian.perron': 'the ground state is a Perron vector',
    'hamiltonian.perron.nonnegative': 'lambda Id - H_XYZ is nonnegative',
    'hamiltonian.perron.positive': 'the ground state has positive entries',
    'hamiltonian.energy_slope': 'the singlet energy has slope '
                                '-(3+zeta^2)/4 in L',
    'hamiltonian.boundary_energy':
        'the boundary fields give E_0 through sum lambda^2/J',

    # vertex
    'vertex': 'eight-vertex integrability identities',
    'vertex.r_initial': 'R(0) = a(0) P',
    'vertex.ybe': 'the R-matrix solves the Yang-Baxter equation',
    'vertex.ybe.control': 'perturbed weights break the Yang-Baxter equation',
    'vertex.reflection': 'K(u) solves the reflection equation',
    'vertex.k_agreement': 'the weight-form K-matrices equal the theta form '
                          'up to a recorded scalar',
    'vertex.k_trace': 'tr K = 2',
    'vertex.k_identity_at_zero': 'K(0) = 1',
    'vertex.local_relation': 'R R q + (a+b) q R = R A + A R',
    'vertex.local_relation.control':
        'the local relation fails off the supersymmetric weights',
    'vertex.boundary_relation': '(a+b) A K^- = R K^- A and its transpose',
    'vertex.boundary_relation.control':
        'the boundary relation fails off the supersymmetric weights',
    'vertex.boundary_identity': "a(0) theta_1'(0) / (J b'(0)) = "
                                'theta_1(2 eta)',
    'vertex.boundary_field': 'both K-derived boundary terms equal h_B',
    'vertex.boundary_field.susy': 'h_B reduces to the supersymmetric '
                                  'boundary fields',

    # transfer
    'transfer': 'transfer matrix identities',
    'transfer.initial': 'T(0) = 2 a(0)^(2L)',
    'transfer.commute': 'transfer matrices commute at different u',
    'transfer.commute_hamiltonian': 'the transfer matrix commutes with '
                                    'H_XYZ',
    'transfer.commute_hamiltonian.control':
        'a mismatched boundary breaks the commutation with H_XYZ',
    'transfer.log_derivative': "T(0)^-1 T'(0) = L (a'+c')/a - (2b'/a) H_XYZ",
    'transfer.log_derivative.finite_difference':
        "analytic T'(0) matches finite differences",
    'transfer.energy_from_k': 'the log-derivative gives the singlet energy',
    'transfer.energy_from_k.boundary':
        "a(0)/(4b'(0)) tr(K'(0) K(2 eta)) = 2 sum lambda^2/J",
    'transfer.eigenvalue': 'Lambda_L = (a+b)^(2L) tr(K^+K^-) is a simple '
                           'eigenvalue with the singlet as eigenvector',
    'transfer.eigenvalue.residual': 'T Psi_L = Lambda_L Psi_L',
    'transfer.eigenvalue.match': 'Lambda_L is in the spectrum of T',
    'transfer.eigenvalue.multiplicity': 'Lambda_L is non-degenerate',
    'transfer.eigenvalue.overlap': 'the Lambda_L eigenvector is the singlet',
    'transfer.rayleigh': 'the dual product state quotient gives Lambda_L',
    'transfer.tq': 'T Q = (a+b)^2 Q T',
    'transfer.tq.control': 'T Q = (a+b)^2 Q T fails off eta = pi/3',
    'transfer.one_site': 'the one-site quotient is (a+b)^2 tr(K^+K^-)',
    'transfer.one_site.control': 'the one-site quotient fails off the root',
    'transfer.two_site': 'the two-site block is (a+b)^4 K^-',
    'transfer.two_site.factor': 'the two-site block scales K^- by (a+b)^4',
    'transfer.two_site.control': 'the two-site block fails off the root',
    'transfer.recurrence': 'Lambda_L = (a+b)^4 Lambda_(L-2)',
    'transfer.covariance': 'pi-rotations map T(y0) to T at the rotated root',
    'transfer.covariance.eigenvalue':
        'Lambda_L is in the spectrum at every rotated root',
    'transfer.dominance': 'Lambda_L is the largest eigenvalue of a '
                          'positive transfer matrix',
    'transfer.dominance.positive': 'every entry of T is positive',
    'transfer.dominance.top': 'the top eigenvalue is Lambda_L',
    'transfer.dominance.residual': 'the top eigenvector has eigenvalue '
                                   'Lambda_L',
    'transfer.dominance.gap': 'the top eigenvalue is separated',
    'transfer.free_energy': '-ln Lambda_L = 2L f + f_B with no finite-size '
                            'correction',
    'transfer.free_energy.measured':
        'the measured top eigenvalue obeys the free-energy split',
    'transfer.conjecture': 'the product formula is an eigenvalue of the '
                           'inhomogeneous transfer matrix',

    # harness
    'run': 'suite task completed',
}


def citation(check):
    '''Return the claim of check, falling back on its longest known prefix.'''
    name = check
    while name:
        if name in CLAIMS:
            return CLAIMS[name]
        name = name.rpartition('.')[0]
    raise KeyError('no claim registered for check %r' % check)

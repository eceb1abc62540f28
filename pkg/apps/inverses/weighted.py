"""
The weighted inverse family built on the W-weighted Drazin inverse: right and
left W-weighted core-EP inverses, WDMP, WMPD and WCMP inverses.

Results of wdmp/wmpd/wcmp are n×m; both weighted core-EP inverses are m×n.
"""

import logging

from apps.quaternions.determinants import cdet_minor_matrix, minor_sum, rdet_minor_matrix
from apps.quaternions.exceptions import NotHermitian
from apps.quaternions.matrices import QMatrix

from .representations import choose_variant, divide, record, smaller_side, u_side, v_side

logger = logging.getLogger(__name__)


def _zero_result(pair):
    return QMatrix.zeros(pair.n, pair.m)


# Weighted core-EP inverses

def wcep_right(pair, trace=None):
    """
    Right W-weighted core-EP inverse A[(WA)^⊕]².

    Φ is the rdet-minor matrix of H = U^{k+1}(U^{k+1})* with the rows of
    Ũ = AUᵏ(U^{k+1})*; the result is the rdet-minor matrix of H with the rows
    of Φ̃ = ΦUᵏ(U^{k+1})*, over the squared minor sum of H.
    """
    if pair.r1 == 0:
        return QMatrix.zeros(pair.m, pair.n)
    k, s = pair.k, pair.r1
    Uk1_star = pair.u_power(k + 1).H
    H = pair.u_power(k + 1) @ Uk1_star
    d = minor_sum(H, s)
    tail = pair.u_power(k) @ Uk1_star
    U_tilde = pair.A @ tail
    record(trace, 'U_tilde', U_tilde)
    Phi = rdet_minor_matrix(H, U_tilde, s)
    record(trace, 'Phi', Phi)
    Phi_tilde = Phi @ tail
    record(trace, 'Phi_tilde', Phi_tilde)
    record(trace, 'denominator', d * d)
    return divide(rdet_minor_matrix(H, Phi_tilde, s), d * d, 'right weighted core-EP inverse')


def wcep_left(pair, trace=None):
    """
    Left W-weighted core-EP inverse [(AW)^⊕_l]²A, the column mirror of
    `wcep_right` over H = (V^{k+1})*V^{k+1}.
    """
    if pair.r1 == 0:
        return QMatrix.zeros(pair.m, pair.n)
    k, s = pair.k, pair.r1
    Vk1_star = pair.v_power(k + 1).H
    H = Vk1_star @ pair.v_power(k + 1)
    d = minor_sum(H, s)
    head = Vk1_star @ pair.v_power(k)
    V_tilde = head @ pair.A
    record(trace, 'V_tilde', V_tilde)
    Psi = cdet_minor_matrix(H, V_tilde, s)
    record(trace, 'Psi', Psi)
    Psi_tilde = head @ Psi
    record(trace, 'Psi_tilde', Psi_tilde)
    record(trace, 'denominator', d * d)
    return divide(cdet_minor_matrix(H, Psi_tilde, s), d * d, 'left weighted core-EP inverse')


# WDMP

def wdmp(pair, variant='auto', trace=None):
    """
    W-weighted DMP inverse W·A_{d,W}·W·A·A†, n×m.

    The general variant runs the step order: Ǔ, Φ, Φ̂, Ω, Ω̃, then the final
    rdet-minor sums over AA*. `hermitian_wa` needs WA Hermitian.
    """
    chosen = choose_variant(pair, variant, ('general_u', 'hermitian_wa'), 'general_u')
    logger.debug("wdmp: variant=%s r=%d r1=%d k=%d", chosen, pair.r, pair.r1, pair.k)
    if chosen == 'hermitian_wa' and not pair.u_hermitian():
        raise NotHermitian("WA is not Hermitian")
    if pair.r == 0 or pair.r1 == 0:
        return _zero_result(pair)
    k, r, r1 = pair.k, pair.r, pair.r1
    gram = pair.A @ pair.A_star
    d_p = minor_sum(gram, r)
    if chosen == 'general_u':
        H, d_u, Phi, tail = u_side(pair, trace)
        Phi_hat = pair.U @ Phi @ tail
        record(trace, 'Phi_hat', Phi_hat)
        Omega = rdet_minor_matrix(H, Phi_hat, r1)
        record(trace, 'Omega', Omega)
        Omega_tilde = Omega @ pair.u_power(k + 1) @ pair.A_star
        denominator = d_p * d_u * d_u
    else:
        H = pair.u_power(k + 2)
        Omega = rdet_minor_matrix(H, pair.u_power(k + 1), r1)
        record(trace, 'Omega', Omega)
        Omega_tilde = Omega @ pair.U @ pair.A_star
        denominator = d_p * minor_sum(H, r1)
    record(trace, 'Omega_tilde', Omega_tilde)
    record(trace, 'denominator', denominator)
    return divide(rdet_minor_matrix(gram, Omega_tilde, r), denominator, 'WDMP inverse')


# WMPD

def wmpd(pair, variant='auto', trace=None):
    """
    W-weighted MPD inverse A†·A·W·A_{d,W}·W, n×m.

    Column mirror of `wdmp`: V̂, Ψ, Ψ̂, Υ, Υ̃, then cdet-minor sums over A*A.
    """
    chosen = choose_variant(pair, variant, ('general_v', 'hermitian_aw'), 'general_v')
    logger.debug("wmpd: variant=%s r=%d r1=%d k=%d", chosen, pair.r, pair.r1, pair.k)
    if chosen == 'hermitian_aw' and not pair.v_hermitian():
        raise NotHermitian("AW is not Hermitian")
    if pair.r == 0 or pair.r1 == 0:
        return _zero_result(pair)
    k, r, r1 = pair.k, pair.r, pair.r1
    gram = pair.A_star @ pair.A
    d_q = minor_sum(gram, r)
    if chosen == 'general_v':
        H, d_v, Psi, head = v_side(pair, trace)
        Psi_hat = head @ Psi @ pair.V
        record(trace, 'Psi_hat', Psi_hat)
        Upsilon = cdet_minor_matrix(H, Psi_hat, r1)
        record(trace, 'Upsilon', Upsilon)
        Upsilon_tilde = pair.A_star @ pair.v_power(k + 1) @ Upsilon
        denominator = d_q * d_v * d_v
    else:
        H = pair.v_power(k + 2)
        Upsilon = cdet_minor_matrix(H, pair.v_power(k + 1), r1)
        record(trace, 'Upsilon', Upsilon)
        Upsilon_tilde = pair.A_star @ pair.V @ Upsilon
        denominator = d_q * minor_sum(H, r1)
    record(trace, 'Upsilon_tilde', Upsilon_tilde)
    record(trace, 'denominator', denominator)
    return divide(cdet_minor_matrix(gram, Upsilon_tilde, r), denominator, 'WMPD inverse')


# WCMP

def wcmp(pair, variant='auto', trace=None):
    """
    Weighted CMP inverse A†·A·W·A_{d,W}·W·A·A†, n×m.

    Variants: general_u, general_v, hermitian_wa, hermitian_aw. Every path
    ends in a minor-sum quotient with the squared Gram denominator of A.
    """
    chosen = choose_variant(
        pair, variant, ('general_u', 'general_v', 'hermitian_wa', 'hermitian_aw'), smaller_side(pair)
    )
    logger.debug("wcmp: variant=%s r=%d r1=%d k=%d", chosen, pair.r, pair.r1, pair.k)
    if chosen == 'hermitian_wa' and not pair.u_hermitian():
        raise NotHermitian("WA is not Hermitian")
    if chosen == 'hermitian_aw' and not pair.v_hermitian():
        raise NotHermitian("AW is not Hermitian")
    if pair.r == 0 or pair.r1 == 0:
        return _zero_result(pair)
    return _WCMP_PATHS[chosen](pair, trace)


def _wcmp_general_u(pair, trace):
    k, r, r1 = pair.k, pair.r, pair.r1
    A, A_star = pair.A, pair.A_star
    column_gram = A_star @ A
    row_gram = A @ A_star
    d_q = minor_sum(column_gram, r)
    H, d_u, Phi, tail = u_side(pair, trace)
    Phi_tilde = A @ Phi @ tail
    record(trace, 'Phi_tilde', Phi_tilde)
    Phi_hat = rdet_minor_matrix(H, Phi_tilde, r1)
    record(trace, 'Phi_hat', Phi_hat)
    Phi_1 = column_gram @ pair.W @ Phi_hat
    record(trace, 'Phi_1', Phi_1)
    Omega = cdet_minor_matrix(column_gram, Phi_1, r)
    record(trace, 'Omega', Omega)
    Omega_tilde = Omega @ pair.u_power(k + 1) @ A_star
    record(trace, 'Omega_tilde', Omega_tilde)
    denominator = d_q * d_q * d_u * d_u
    record(trace, 'denominator', denominator)
    return divide(rdet_minor_matrix(row_gram, Omega_tilde, r), denominator, 'WCMP inverse')


def _wcmp_general_v(pair, trace):
    k, r, r1 = pair.k, pair.r, pair.r1
    A, A_star = pair.A, pair.A_star
    column_gram = A_star @ A
    row_gram = A @ A_star
    d_p = minor_sum(row_gram, r)
    H, d_v, Psi, head = v_side(pair, trace)
    Psi_tilde = head @ Psi @ A
    record(trace, 'Psi_tilde', Psi_tilde)
    Psi_hat = cdet_minor_matrix(H, Psi_tilde, r1)
    record(trace, 'Psi_hat', Psi_hat)
    Psi_1 = Psi_hat @ pair.W @ row_gram
    record(trace, 'Psi_1', Psi_1)
    Upsilon = rdet_minor_matrix(row_gram, Psi_1, r)
    record(trace, 'Upsilon', Upsilon)
    Upsilon_tilde = A_star @ pair.v_power(k + 1) @ Upsilon
    record(trace, 'Upsilon_tilde', Upsilon_tilde)
    denominator = d_p * d_p * d_v * d_v
    record(trace, 'denominator', denominator)
    return divide(cdet_minor_matrix(column_gram, Upsilon_tilde, r), denominator, 'WCMP inverse')


def _wcmp_hermitian_wa(pair, trace):
    k, r, r1 = pair.k, pair.r, pair.r1
    A, A_star = pair.A, pair.A_star
    column_gram = A_star @ A
    row_gram = A @ A_star
    d_q = minor_sum(column_gram, r)
    H = pair.u_power(k + 2)
    W_1 = column_gram @ pair.W
    record(trace, 'W_1', W_1)
    Phi = cdet_minor_matrix(column_gram, W_1, r)
    record(trace, 'Phi', Phi)
    Phi_1 = Phi @ A @ pair.u_power(k)
    record(trace, 'Phi_1', Phi_1)
    Omega = rdet_minor_matrix(H, Phi_1, r1)
    record(trace, 'Omega', Omega)
    Omega_tilde = Omega @ pair.U @ A_star
    record(trace, 'Omega_tilde', Omega_tilde)
    denominator = d_q * d_q * minor_sum(H, r1)
    record(trace, 'denominator', denominator)
    return divide(rdet_minor_matrix(row_gram, Omega_tilde, r), denominator, 'WCMP inverse')


def _wcmp_hermitian_aw(pair, trace):
    k, r, r1 = pair.k, pair.r, pair.r1
    A, A_star = pair.A, pair.A_star
    column_gram = A_star @ A
    row_gram = A @ A_star
    d_p = minor_sum(row_gram, r)
    H = pair.v_power(k + 2)
    W_2 = pair.W @ row_gram
    record(trace, 'W_2', W_2)
    Psi = rdet_minor_matrix(row_gram, W_2, r)
    record(trace, 'Psi', Psi)
    Psi_1 = pair.v_power(k) @ A @ Psi
    record(trace, 'Psi_1', Psi_1)
    Upsilon = cdet_minor_matrix(H, Psi_1, r1)
    record(trace, 'Upsilon', Upsilon)
    Upsilon_tilde = A_star @ pair.V @ Upsilon
    record(trace, 'Upsilon_tilde', Upsilon_tilde)
    denominator = d_p * d_p * minor_sum(H, r1)
    record(trace, 'denominator', denominator)
    return divide(cdet_minor_matrix(column_gram, Upsilon_tilde, r), denominator, 'WCMP inverse')


_WCMP_PATHS = {
    'general_u': _wcmp_general_u,
    'general_v': _wcmp_general_v,
    'hermitian_wa': _wcmp_hermitian_wa,
    'hermitian_aw': _wcmp_hermitian_aw,
}

"""
Determinantal representations of the classical generalized inverses.

Moore-Penrose inverse, the projectors P_A = AA† and Q_A = A†A, the W-weighted
Drazin inverse (general U-side and V-side formulas, Hermitian-product
formulas), the Drazin inverse as its W = I case, and the right/left core-EP
and core inverses.

Every function accepts an optional `trace` dict that receives the named
intermediate matrices in evaluation order.
"""

import logging

from apps.quaternions.determinants import cdet_minor_matrix, minor_sum, rdet_minor_matrix
from apps.quaternions.exceptions import (
    DimensionMismatch, IndexMismatch, NotHermitian, RankDegenerate, UnknownVariant,
)
from apps.quaternions.matrices import QMatrix

from .pairs import WeightedPair

logger = logging.getLogger(__name__)

VARIANTS = ('auto', 'general', 'general_u', 'general_v', 'hermitian_wa', 'hermitian_aw')


def record(trace, name, value):
    if trace is not None:
        trace[name] = value


def divide(matrix, denominator, what):
    """Divide by a principal-minor denominator, refusing zero."""
    if not denominator:
        logger.warning("%s: vanishing denominator", what)
        raise RankDegenerate(f"{what}: vanishing principal-minor denominator")
    return matrix / denominator


def choose_variant(pair, variant, allowed, general):
    """
    Resolve `auto` and `general` to one concrete formula.

    `auto` takes a Hermitian-case formula whose product is Hermitian (the
    smaller side when both are), otherwise the `general` choice.
    """
    if variant not in VARIANTS or variant not in allowed + ('auto', 'general'):
        raise UnknownVariant(f"variant {variant!r} is not one of {('auto', 'general') + allowed}")
    if variant == 'general':
        return general
    if variant != 'auto':
        return variant
    hermitian = []
    if 'hermitian_wa' in allowed and pair.u_hermitian():
        hermitian.append('hermitian_wa')
    if 'hermitian_aw' in allowed and pair.v_hermitian():
        hermitian.append('hermitian_aw')
    if len(hermitian) == 2:
        return 'hermitian_wa' if pair.n <= pair.m else 'hermitian_aw'
    return hermitian[0] if hermitian else general


def smaller_side(pair):
    return 'general_u' if pair.n <= pair.m else 'general_v'


# Moore-Penrose inverse and projectors

def mp_inverse(A, side=None, trace=None):
    """
    Moore-Penrose inverse A†.

    Args:
        A (QMatrix): any m×n matrix
        side (str, optional): 'column' sums cdet minors of A*A,
            'row' sums rdet minors of AA*; default is the smaller Gram matrix

    Returns:
        QMatrix: n×m; the zero matrix when A = 0
    """
    m, n = A.shape
    r = A.rank()
    if r == 0:
        return QMatrix.zeros(n, m)
    if side is None:
        side = 'column' if n <= m else 'row'
    A_star = A.H
    if side == 'column':
        gram = A_star @ A
        numerators = cdet_minor_matrix(gram, A_star, r)
    elif side == 'row':
        gram = A @ A_star
        numerators = rdet_minor_matrix(gram, A_star, r)
    else:
        raise UnknownVariant(f"side must be 'column' or 'row', got {side!r}")
    denominator = minor_sum(gram, r)
    record(trace, 'denominator', denominator)
    return divide(numerators, denominator, 'Moore-Penrose inverse')


def projector_q(A, trace=None):
    """Q_A = A†A, from cdet minors of A*A with its own columns."""
    r = A.rank()
    if r == 0:
        return QMatrix.zeros(A.cols, A.cols)
    gram = A.H @ A
    denominator = minor_sum(gram, r)
    record(trace, 'denominator', denominator)
    return divide(cdet_minor_matrix(gram, gram, r), denominator, 'projector Q_A')


def projector_p(A, trace=None):
    """P_A = AA†, from rdet minors of AA* with its own rows."""
    r = A.rank()
    if r == 0:
        return QMatrix.zeros(A.rows, A.rows)
    gram = A @ A.H
    denominator = minor_sum(gram, r)
    record(trace, 'denominator', denominator)
    return divide(rdet_minor_matrix(gram, gram, r), denominator, 'projector P_A')


# W-weighted Drazin inverse

def u_side(pair, trace=None):
    """
    U-side building blocks shared by the weighted Drazin, WDMP and WCMP
    formulas: Ǔ = Uᵏ(U^{2k+1})*, H_U = U^{2k+1}(U^{2k+1})*, its minor sum d_U
    and Φ = rdet-minor matrix of H_U with the rows of Ǔ.

    Returns:
        tuple: (H_U, d_U, Φ, U^{2k}(U^{2k+1})*)
    """
    k, r1 = pair.k, pair.r1
    U2k1_star = pair.u_power(2 * k + 1).H
    H = pair.u_power(2 * k + 1) @ U2k1_star
    denominator = minor_sum(H, r1)
    U_check = pair.u_power(k) @ U2k1_star
    record(trace, 'U_check', U_check)
    Phi = rdet_minor_matrix(H, U_check, r1)
    record(trace, 'Phi', Phi)
    return H, denominator, Phi, pair.u_power(2 * k) @ U2k1_star


def v_side(pair, trace=None):
    """
    V-side mirror of `u_side`: V̂ = (V^{2k+1})*Vᵏ, H_V = (V^{2k+1})*V^{2k+1},
    d_V and Ψ = cdet-minor matrix of H_V with the columns of V̂.

    Returns:
        tuple: (H_V, d_V, Ψ, (V^{2k+1})*V^{2k})
    """
    k, r1 = pair.k, pair.r1
    V2k1_star = pair.v_power(2 * k + 1).H
    H = V2k1_star @ pair.v_power(2 * k + 1)
    denominator = minor_sum(H, r1)
    V_hat = V2k1_star @ pair.v_power(k)
    record(trace, 'V_hat', V_hat)
    Psi = cdet_minor_matrix(H, V_hat, r1)
    record(trace, 'Psi', Psi)
    return H, denominator, Psi, V2k1_star @ pair.v_power(2 * k)


def wdrazin_u(pair, trace=None):
    """A_{d,W} by the U-side formula; m×n."""
    if pair.r1 == 0:
        return QMatrix.zeros(pair.m, pair.n)
    H, d, Phi, tail = u_side(pair, trace)
    Phi_tilde = pair.A @ Phi @ tail
    record(trace, 'Phi_tilde', Phi_tilde)
    numerators = rdet_minor_matrix(H, Phi_tilde, pair.r1) @ pair.u_power(pair.k)
    record(trace, 'denominator', d * d)
    return divide(numerators, d * d, 'weighted Drazin inverse (U-side)')


def wdrazin_v(pair, trace=None):
    """A_{d,W} by the V-side formula; m×n."""
    if pair.r1 == 0:
        return QMatrix.zeros(pair.m, pair.n)
    H, d, Psi, head = v_side(pair, trace)
    Psi_tilde = head @ Psi @ pair.A
    record(trace, 'Psi_tilde', Psi_tilde)
    numerators = pair.v_power(pair.k) @ cdet_minor_matrix(H, Psi_tilde, pair.r1)
    record(trace, 'denominator', d * d)
    return divide(numerators, d * d, 'weighted Drazin inverse (V-side)')


def wdrazin_hermitian(pair, side, trace=None):
    """
    A_{d,W} when one product is Hermitian.

    side 'AW': cdet minors of (AW)^{k+2} with the columns of V̄ = (AW)ᵏA.
    side 'WA': rdet minors of (WA)^{k+2} with the rows of Ū = A(WA)ᵏ.
    """
    k, r1 = pair.k, pair.r1
    if side == 'AW':
        if not pair.v_hermitian():
            raise NotHermitian("AW is not Hermitian")
        if r1 == 0:
            return QMatrix.zeros(pair.m, pair.n)
        H = pair.v_power(k + 2)
        V_bar = pair.v_power(k) @ pair.A
        record(trace, 'V_bar', V_bar)
        numerators = cdet_minor_matrix(H, V_bar, r1)
    elif side == 'WA':
        if not pair.u_hermitian():
            raise NotHermitian("WA is not Hermitian")
        if r1 == 0:
            return QMatrix.zeros(pair.m, pair.n)
        H = pair.u_power(k + 2)
        U_bar = pair.A @ pair.u_power(k)
        record(trace, 'U_bar', U_bar)
        numerators = rdet_minor_matrix(H, U_bar, r1)
    else:
        raise UnknownVariant(f"side must be 'AW' or 'WA', got {side!r}")
    denominator = minor_sum(H, r1)
    record(trace, 'denominator', denominator)
    return divide(numerators, denominator, f'weighted Drazin inverse (Hermitian {side})')


def wdrazin(pair, variant='auto', trace=None):
    """W-weighted Drazin inverse A_{d,W} with formula selection."""
    chosen = choose_variant(
        pair, variant, ('general_u', 'general_v', 'hermitian_wa', 'hermitian_aw'), smaller_side(pair)
    )
    logger.debug("wdrazin: variant=%s k=%d r1=%d", chosen, pair.k, pair.r1)
    if chosen == 'general_u':
        return wdrazin_u(pair, trace)
    if chosen == 'general_v':
        return wdrazin_v(pair, trace)
    return wdrazin_hermitian(pair, 'WA' if chosen == 'hermitian_wa' else 'AW', trace)


def drazin_inverse(A, variant='auto', trace=None):
    """Drazin inverse A^D as the weighted Drazin inverse with W = I."""
    return wdrazin(WeightedPair.unweighted(A), variant, trace)


# Core-EP and core inverses

def _core_ep(A, k, side, trace):
    if not A.is_square():
        raise DimensionMismatch("core-EP inverses need a square matrix")
    n = A.rows
    Ak = A.power(k)
    s = Ak.rank()
    if s == 0:
        return QMatrix.zeros(n, n)
    Ak1 = Ak @ A
    Ak1_star = Ak1.H
    if side == 'right':
        H = Ak1 @ Ak1_star
        A_hat = Ak @ Ak1_star
        record(trace, 'A_hat', A_hat)
        numerators = rdet_minor_matrix(H, A_hat, s)
    elif side == 'left':
        H = Ak1_star @ Ak1
        A_check = Ak1_star @ Ak
        record(trace, 'A_check', A_check)
        numerators = cdet_minor_matrix(H, A_check, s)
    else:
        raise UnknownVariant(f"side must be 'right' or 'left', got {side!r}")
    denominator = minor_sum(H, s)
    record(trace, 'denominator', denominator)
    return divide(numerators, denominator, f'{side} core-EP inverse')


def core_ep_right(A, trace=None):
    """Right core-EP inverse Aᵏ(A^{k+1})†, k = Ind A."""
    return _core_ep(A, A.index(), 'right', trace)


def core_ep_left(A, trace=None):
    """Left core-EP inverse (A^{k+1})†Aᵏ, k = Ind A."""
    return _core_ep(A, A.index(), 'left', trace)


def _require_core_index(A):
    if not A.is_square():
        raise DimensionMismatch("core inverses need a square matrix")
    index = A.index()
    if index > 1:
        raise IndexMismatch(f"core inverse needs Ind A <= 1, got {index}")


def core_right(A, trace=None):
    """Right core inverse, the k = 1 case with A² and Â = A(A²)*."""
    _require_core_index(A)
    return _core_ep(A, 1, 'right', trace)


def core_left(A, trace=None):
    """Left core inverse, the k = 1 case with A² and Ǎ = (A²)*A."""
    _require_core_index(A)
    return _core_ep(A, 1, 'left', trace)

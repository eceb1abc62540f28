"""
Ground-truth inverses through the complex-adjoint embedding.

Nothing here touches the rdet/cdet layer or the quaternion-side rank. Each
quaternion matrix is embedded straight into a sympy.Matrix over ℚ(i); rank,
row reduction, rank decomposition and inversion are sympy's, and only the
final answer is read back into a QMatrix. The Moore-Penrose inverse comes
from the rank decomposition, every other oracle is a product of
Moore-Penrose inverses and powers. Each result is checked against its
defining equations before it is returned, unless
GINVERSE['ORACLE_SELF_CHECK'] is off.
"""

import logging
from fractions import Fraction

import sympy

from apps.quaternions import conf
from apps.quaternions.exceptions import DimensionMismatch
from apps.quaternions.matrices import QMatrix
from apps.quaternions.scalars import Quaternion

from .exceptions import InternalOracleFailure

logger = logging.getLogger(__name__)


def _self_check(what, equations):
    """Raise InternalOracleFailure unless every (label, lhs, rhs) holds."""
    if not conf.oracle_self_check():
        return
    for label, lhs, rhs in equations:
        if lhs != rhs:
            logger.error("%s oracle failed its self-check: %s", what, label)
            raise InternalOracleFailure(f"{what} oracle violates {label}")


# sympy side

def _is_zero(value):
    return sympy.expand_complex(value) == 0


def _canonical(S):
    """Entries rewritten as a + b·I."""
    return S.applyfunc(sympy.expand_complex)


def _gaussian(re, im):
    return (sympy.Rational(re.numerator, re.denominator)
            + sympy.Rational(im.numerator, im.denominator) * sympy.I)


def _fraction(value):
    if not value.is_Rational:
        raise InternalOracleFailure(f"oracle produced the non-rational part {value}")
    return Fraction(int(value.p), int(value.q))


def embed(A):
    """χ(A) = [[A₁, A₂], [−conj(A₂), conj(A₁)]] as a 2m×2n sympy.Matrix."""
    m, n = A.shape
    S = sympy.zeros(2 * m, 2 * n)
    for i, row in enumerate(A.data):
        for j, q in enumerate(row):
            a1, a2 = _gaussian(q.w, q.x), _gaussian(q.y, q.z)
            S[i, j] = a1
            S[i, j + n] = a2
            S[i + m, j] = -sympy.conjugate(a2)
            S[i + m, j + n] = sympy.conjugate(a1)
    return _canonical(S)


def unembed(S):
    """Read A back from the top block row of χ(A)."""
    if S.rows % 2 or S.cols % 2:
        raise InternalOracleFailure(f"{S.rows}x{S.cols} is not an embedding shape")
    m, n = S.rows // 2, S.cols // 2
    rows = []
    for i in range(m):
        row = []
        for j in range(n):
            w, x = sympy.expand_complex(S[i, j]).as_real_imag()
            y, z = sympy.expand_complex(S[i, j + n]).as_real_imag()
            row.append(Quaternion._make(_fraction(w), _fraction(x), _fraction(y), _fraction(z)))
        rows.append(tuple(row))
    return QMatrix._make(tuple(rows), m, n)


def s_rank(S):
    return S.rank(iszerofunc=_is_zero)


def s_power(S, p):
    result = sympy.eye(S.rows)
    for _ in range(p):
        result = _canonical(result * S)
    return result


def s_index(S):
    """Smallest l ≥ 0 with rank S^{l+1} = rank S^l."""
    l, power, rank = 0, sympy.eye(S.rows), S.rows
    while True:
        following = _canonical(power * S)
        following_rank = s_rank(following)
        if following_rank == rank:
            return l
        l, power, rank = l + 1, following, following_rank


def s_pinv(S):
    """
    Moore-Penrose inverse over ℚ(i) from the rank decomposition S = CF:
    S† = F*(FF*)⁻¹(C*C)⁻¹C*, the method Matrix.pinv(method='RD') uses,
    with exact zero tests during the reduction.
    """
    if all(_is_zero(value) for value in S):
        return sympy.zeros(S.cols, S.rows)
    C, F = S.rank_decomposition(iszerofunc=_is_zero)
    C, F = _canonical(C), _canonical(F)
    C_plus = _canonical(_canonical(C.H * C).inv() * C.H)
    F_plus = _canonical(F.H * _canonical(F * F.H).inv())
    return _canonical(F_plus * C_plus)


def oracle_index(A):
    """Ind A read off χ(A), whose rank is twice the quaternion rank."""
    if not A.is_square():
        raise DimensionMismatch("the index is defined for square matrices")
    return s_index(embed(A))


def _s_drazin(S):
    l = s_index(S)
    Sl = s_power(S, l)
    return _canonical(Sl * s_pinv(s_power(S, 2 * l + 1)) * Sl), l


# Oracles

def mp_oracle(A):
    """A† = χ⁻¹(χ(A)†)."""
    X = unembed(s_pinv(embed(A)))
    _self_check('Moore-Penrose', [
        ('AXA = A', A @ X @ A, A),
        ('XAX = X', X @ A @ X, X),
        ('(AX)* = AX', (A @ X).H, A @ X),
        ('(XA)* = XA', (X @ A).H, X @ A),
    ])
    return X


def drazin_oracle(A):
    """A^D = Aˡ(A^{2l+1})†Aˡ with l = Ind A."""
    if not A.is_square():
        raise DimensionMismatch("the Drazin inverse needs a square matrix")
    S, l = _s_drazin(embed(A))
    X = unembed(S)
    Al = A.power(l)
    _self_check('Drazin', [
        ('A^{k+1}X = A^k', Al @ A @ X, Al),
        ('XAX = X', X @ A @ X, X),
        ('AX = XA', A @ X, X @ A),
    ])
    return X


def wdrazin_oracle(pair):
    """A_{d,W} = A((WA)^D)², which must equal ((AW)^D)²A."""
    A, W = pair.A, pair.W
    U_drazin = drazin_oracle(W @ A)
    V_drazin = drazin_oracle(A @ W)
    X = A @ U_drazin @ U_drazin
    other = V_drazin @ V_drazin @ A
    if conf.oracle_self_check() and X != other:
        logger.error("weighted Drazin oracle: A((WA)^D)^2 and ((AW)^D)^2 A differ")
        raise InternalOracleFailure("A((WA)^D)^2 differs from ((AW)^D)^2 A")
    return X


def core_ep_right_oracle(A):
    """A^⊕ = A^D Aˡ(Aˡ)†."""
    l = oracle_index(A)
    Al = A.power(l)
    X = drazin_oracle(A) @ Al @ mp_oracle(Al)
    _self_check('right core-EP', [
        ('XA^{k+1} = A^k', X @ Al @ A, Al),
        ('AX^2 = X', A @ X @ X, X),
        ('(AX)* = AX', (A @ X).H, A @ X),
    ])
    return X


def core_ep_left_oracle(A):
    """A_⊕ = (Aˡ)†Aˡ A^D."""
    l = oracle_index(A)
    Al = A.power(l)
    X = mp_oracle(Al) @ Al @ drazin_oracle(A)
    _self_check('left core-EP', [
        ('A^{k+1}X = A^k', Al @ A @ X, Al),
        ('X^2A = X', X @ X @ A, X),
        ('(XA)* = XA', (X @ A).H, X @ A),
    ])
    return X


# Definitional compositions of the weighted family

def compose_wdmp(pair):
    """W·A_{d,W}·W·A·A†"""
    return pair.W @ wdrazin_oracle(pair) @ pair.W @ pair.A @ mp_oracle(pair.A)


def compose_wmpd(pair):
    """A†·A·W·A_{d,W}·W"""
    return mp_oracle(pair.A) @ pair.A @ pair.W @ wdrazin_oracle(pair) @ pair.W


def compose_wcmp(pair):
    """A†·A·W·A_{d,W}·W·A·A†"""
    A_dagger = mp_oracle(pair.A)
    return A_dagger @ pair.A @ pair.W @ wdrazin_oracle(pair) @ pair.W @ pair.A @ A_dagger


def compose_wcep_right(pair):
    """A·[(WA)^⊕]²"""
    core = core_ep_right_oracle(pair.W @ pair.A)
    return pair.A @ core @ core


def compose_wcep_left(pair):
    """[(AW)_⊕]²·A"""
    core = core_ep_left_oracle(pair.A @ pair.W)
    return core @ core @ pair.A

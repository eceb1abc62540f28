"""
Complex-adjoint embedding and exact complex elimination.

Writing A = A₁ + A₂·j with complex blocks A₁ = w + x·i and A₂ = y + z·i,
the embedding is the 2m×2n complex matrix

    χ(A) = [[ A₁,        A₂      ],
            [ −conj(A₂), conj(A₁) ]]

which is additive, multiplicative and star-preserving, with
rank_ℂ χ(A) = 2·rank_ℍ A. Complex numbers are the j = k = 0 quaternions, so
CMatrix reuses the quaternion scalar type restricted to that subfield.
Elimination over ℚ(i) is delegated to sympy; entries cross over as
Rational + Rational·I and come back as Fractions.
"""

from fractions import Fraction

import sympy
from sympy.matrices.exceptions import NonInvertibleMatrixError

from .exceptions import DimensionMismatch, ZeroDivisor
from .matrices import QMatrix
from .scalars import ZERO, Quaternion

__all__ = [
    'CMatrix', 'complex_embedding', 'from_complex_embedding', 'to_sympy', 'from_sympy',
    'c_rref', 'c_rank', 'c_inverse', 'quaternion_rank',
]


class CMatrix(QMatrix):
    """A matrix of exact complex rationals (quaternions with y = z = 0)."""

    __slots__ = ()

    def __init__(self, entries, shape=None):
        super().__init__(entries, shape)
        if not self.is_complex():
            raise DimensionMismatch("CMatrix entries must have zero j and k parts")

    @classmethod
    def from_qmatrix(cls, matrix):
        if not matrix.is_complex():
            raise DimensionMismatch("matrix has nonzero j or k parts")
        return cls._make(matrix.data, matrix.rows, matrix.cols)

    def rref(self):
        return c_rref(self)

    def rank(self):
        return c_rank(self)

    def inverse(self):
        return c_inverse(self)


def _complex(w, x):
    return Quaternion._make(w, x, ZERO.w, ZERO.w)


def complex_embedding(A):
    """χ(A) as a 2m×2n CMatrix."""
    m, n = A.shape
    top, bottom = [], []
    for row in A.data:
        a1 = [_complex(q.w, q.x) for q in row]
        a2 = [_complex(q.y, q.z) for q in row]
        top.append(tuple(a1 + a2))
        bottom.append(tuple([-c.conjugate() for c in a2] + [c.conjugate() for c in a1]))
    return CMatrix._make(tuple(top + bottom), 2 * m, 2 * n)


def from_complex_embedding(M):
    """Invert χ: read the quaternion matrix back from the top block row."""
    if M.rows % 2 or M.cols % 2:
        raise DimensionMismatch(f"{M.rows}x{M.cols} is not an embedding shape")
    m, n = M.rows // 2, M.cols // 2
    return QMatrix._make(tuple(
        tuple(
            Quaternion._make(M.data[i][j].w, M.data[i][j].x,
                             M.data[i][j + n].w, M.data[i][j + n].x)
            for j in range(n)
        )
        for i in range(m)
    ), m, n)


# sympy bridge

def _rational(value):
    return sympy.Rational(value.numerator, value.denominator)


def _fraction(value):
    if not value.is_Rational:
        raise TypeError(f"{value} is not a rational number")
    return Fraction(int(value.p), int(value.q))


def _is_zero(value):
    # a + b·I is canonical after expand_complex, so the comparison is exact
    return sympy.expand_complex(value) == 0


def to_sympy(M):
    """A CMatrix as a sympy.Matrix of Rational + Rational·I entries."""
    return sympy.Matrix(M.rows, M.cols, [
        _rational(q.w) + _rational(q.x) * sympy.I for row in M.data for q in row
    ])


def from_sympy(S):
    """A sympy.Matrix over ℚ(i) as a CMatrix."""
    entries = []
    for i in range(S.rows):
        row = []
        for j in range(S.cols):
            re, im = sympy.expand_complex(S[i, j]).as_real_imag()
            row.append(_complex(_fraction(re), _fraction(im)))
        entries.append(tuple(row))
    return CMatrix._make(tuple(entries), S.rows, S.cols)


def c_rref(M):
    """
    Reduced row echelon form over ℚ(i).

    Returns:
        tuple: (CMatrix in reduced form, tuple of 0-based pivot columns)
    """
    reduced, pivots = to_sympy(M).rref(iszerofunc=_is_zero, pivots=True)
    return from_sympy(reduced), tuple(pivots)


def c_rank(M):
    if M.rows == 0 or M.cols == 0:
        return 0
    return to_sympy(M).rank(iszerofunc=_is_zero)


def c_inverse(M):
    """Inverse of a square complex matrix."""
    if not M.is_square():
        raise DimensionMismatch("only square matrices have an inverse")
    try:
        return from_sympy(to_sympy(M).inv())
    except NonInvertibleMatrixError as exc:
        raise ZeroDivisor("matrix is singular") from exc


def quaternion_rank(A):
    """rank_ℍ(A) = rank_ℂ(χ(A)) / 2."""
    return c_rank(complex_embedding(A)) // 2

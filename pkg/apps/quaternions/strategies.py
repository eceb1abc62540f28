"""
Hypothesis strategies shared by the test modules.

Entries have numerators in [-3, 3] and denominators in [1, 3], and about half
of them are zero so that singular, rank-deficient and nilpotent inputs turn
up regularly.
"""

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from .matrices import QMatrix
from .scalars import ZERO, Quaternion


def exact_settings(max_examples):
    """Settings for exact-arithmetic properties: no deadline, slow data allowed."""
    return settings(
        max_examples=max_examples,
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
    )


def _sparse(strategy, zero):
    return st.tuples(st.booleans(), strategy).map(lambda pair: pair[1] if pair[0] else zero)


small_fractions = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 3))
coefficients = _sparse(small_fractions, Fraction(0))

quaternions = st.builds(Quaternion, coefficients, coefficients, coefficients, coefficients)
complex_numbers = st.builds(Quaternion, coefficients, coefficients)
real_numbers = st.builds(Quaternion, small_fractions)

quaternion_entries = _sparse(quaternions, ZERO)
complex_entries = _sparse(complex_numbers, ZERO)
real_entries = _sparse(real_numbers, ZERO)


@st.composite
def qmatrices(draw, rows=None, cols=None, max_dim=4, entries=quaternion_entries):
    m = rows if rows is not None else draw(st.integers(1, max_dim))
    n = cols if cols is not None else draw(st.integers(1, max_dim))
    data = draw(st.lists(
        st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m,
    ))
    return QMatrix(data, shape=(m, n))


@st.composite
def square_matrices(draw, max_dim=4, entries=quaternion_entries):
    n = draw(st.integers(1, max_dim))
    return draw(qmatrices(rows=n, cols=n, entries=entries))


@st.composite
def hermitian_matrices(draw, max_dim=5, entries=quaternion_entries):
    """M + M*, Hermitian by construction."""
    n = draw(st.integers(1, max_dim))
    M = draw(qmatrices(rows=n, cols=n, entries=entries))
    return M + M.H


@st.composite
def weighted_pairs(draw, max_dim=3, entries=quaternion_entries):
    """(A, W) with A m×n and W n×m."""
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    A = draw(qmatrices(rows=m, cols=n, entries=entries))
    W = draw(qmatrices(rows=n, cols=m, entries=entries))
    return A, W


@st.composite
def hermitian_weighted_pairs(draw, max_dim=3, entries=quaternion_entries):
    """(A, W) with W = A*(AA*)^p, so that both WA and AW are Hermitian."""
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    A = draw(qmatrices(rows=m, cols=n, entries=entries))
    p = draw(st.integers(0, 1))
    W = A.H @ (A @ A.H).power(p)
    return A, W


def _hermitian_of_size(draw, n, entries):
    M = draw(qmatrices(rows=n, cols=n, entries=entries))
    return M + M.H


@st.composite
def wa_hermitian_pairs(draw, max_dim=3, entries=quaternion_entries):
    """(A, W) with W = A*·H for a Hermitian m×m H: WA = A*HA is Hermitian, AW usually is not."""
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    A = draw(qmatrices(rows=m, cols=n, entries=entries))
    return A, A.H @ _hermitian_of_size(draw, m, entries)


@st.composite
def aw_hermitian_pairs(draw, max_dim=3, entries=quaternion_entries):
    """(A, W) with W = K·A* for a Hermitian n×n K: AW = AKA* is Hermitian, WA usually is not."""
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    A = draw(qmatrices(rows=m, cols=n, entries=entries))
    return A, _hermitian_of_size(draw, n, entries) @ A.H

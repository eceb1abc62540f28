"""
Row and column determinants of square quaternion matrices.

rdet_i expands over all n! permutations. Each permutation is split into
cycles and written in left-ordered form: the cycle through i comes first and
starts at i, the remaining cycles start at their smallest element and follow
in increasing order of it. A cycle (c₀ c₁ … c_l) contributes the chain
a_{c₀c₁}a_{c₁c₂}…a_{c_l c₀}, chains multiply left to right and the term has
sign (−1)^{n−r} for r cycles.

cdet_j mirrors this from the right: the cycle through j starts at j and is
placed rightmost, the others start at their smallest element with those
elements decreasing from left to right.

Every determinantal representation reduces to the minor sums at the end of
this module: for Hermitian H of rank r with d = minor_sum(H, r),
rdet_minor_matrix(H, B, r) = d·B·H† and cdet_minor_matrix(H, B, r) = d·H†·B
whenever B lies in the row (column) space of H.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache, partial
from itertools import combinations, permutations
from typing import NamedTuple

from . import conf
from .exceptions import (
    DimensionLimitExceeded, DimensionMismatch, IndexOutOfRange,
    NonRealResult, NotHermitian,
)
from .matrices import IndexSet, QMatrix
from .scalars import ZERO, Quaternion

logger = logging.getLogger(__name__)

# Below this many terms the pool is skipped. Fraction arithmetic holds the GIL,
# so `threads` is a scheduling hint and never changes a result.
_PARALLEL_TERMS = 720


class CycleDecomposition(NamedTuple):
    """
    Disjoint cycles of a permutation of {1..n}.

    Each cycle lists its elements in chain order: c, σ(c), σ²(c), …
    """
    cycles: tuple

    @classmethod
    def from_images(cls, images):
        """Decompose σ given as images[p - 1] = σ(p); cycles start at their minimum."""
        n = len(images)
        seen = [False] * (n + 1)
        cycles = []
        for start in range(1, n + 1):
            if seen[start]:
                continue
            cycle = []
            current = start
            while not seen[current]:
                seen[current] = True
                cycle.append(current)
                current = images[current - 1]
            cycles.append(tuple(cycle))
        return cls(tuple(cycles))

    @property
    def size(self):
        return sum(len(cycle) for cycle in self.cycles)

    @property
    def sign(self):
        return -1 if (self.size - len(self.cycles)) % 2 else 1

    def _split(self, anchor):
        for position, cycle in enumerate(self.cycles):
            if anchor in cycle:
                start = cycle.index(anchor)
                rotated = cycle[start:] + cycle[:start]
                others = self.cycles[:position] + self.cycles[position + 1:]
                return rotated, others
        raise IndexOutOfRange(f"{anchor} is not permuted by {self.cycles}")

    def left_ordered(self, i):
        """Cycle through i first (starting at i), the rest by increasing minimum."""
        anchored, others = self._split(i)
        return CycleDecomposition((anchored,) + tuple(sorted(others)))

    def right_ordered(self, j):
        """Cycle through j last (starting at j), the rest by decreasing minimum."""
        anchored, others = self._split(j)
        return CycleDecomposition(tuple(sorted(others, reverse=True)) + (anchored,))

    def chain(self):
        """Entry positions (row, col), 1-based, in multiplication order."""
        pairs = []
        for cycle in self.cycles:
            length = len(cycle)
            pairs.extend((cycle[t], cycle[(t + 1) % length]) for t in range(length))
        return tuple(pairs)


def _terms(n, anchor, ordering):
    terms = []
    for images in permutations(range(1, n + 1)):
        ordered = ordering(CycleDecomposition.from_images(images), anchor)
        terms.append((ordered.sign, tuple((r - 1, c - 1) for r, c in ordered.chain())))
    return tuple(terms)


@lru_cache(maxsize=None)
def row_expansion(n, i):
    """The n! signed entry chains of rdet_i on n×n matrices (0-based positions)."""
    return _terms(n, i, CycleDecomposition.left_ordered)


@lru_cache(maxsize=None)
def column_expansion(n, j):
    """The n! signed entry chains of cdet_j on n×n matrices (0-based positions)."""
    return _terms(n, j, CycleDecomposition.right_ordered)


def check_dimension(n):
    limit = conf.max_dim()
    if n > limit:
        logger.warning("Rejected %dx%d determinantal sum (cap %d)", n, n, limit)
        raise DimensionLimitExceeded(n, limit)


def index_sets(r, n):
    """L_{r,n}: all strictly increasing r-subsets of {1..n}."""
    return [IndexSet(alpha) for alpha in combinations(range(1, n + 1), r)]


def index_sets_containing(r, n, j):
    """I_{r,n}{j} (= J_{r,n}{j}): the r-subsets of {1..n} that contain j."""
    others = [p for p in range(1, n + 1) if p != j]
    return [IndexSet(sorted(rest + (j,))) for rest in combinations(others, r - 1)]


def _sum_terms(data, terms):
    total = ZERO
    for sign, chain in terms:
        product = None
        for r, c in chain:
            q = data[r][c]
            if not q:
                product = None
                break
            product = q if product is None else product * q
        if product is None:
            continue
        total = total + product if sign > 0 else total - product
    return total


def _evaluate(data, terms, threads):
    workers = threads or conf.threads()
    if workers <= 1 or len(terms) < _PARALLEL_TERMS:
        return _sum_terms(data, terms)
    size = -(-len(terms) // workers)
    chunks = [terms[start:start + size] for start in range(0, len(terms), size)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(partial(_sum_terms, data), chunks), ZERO)


def _square(A):
    if not A.is_square():
        raise DimensionMismatch(f"determinants need a square matrix, got {A.rows}x{A.cols}")
    return A.rows


def _check_anchor(index, n):
    if not 1 <= index <= n:
        raise IndexOutOfRange(f"index {index} outside 1..{n}")


def _require_hermitian(B):
    if not B.is_hermitian():
        raise NotHermitian(f"{B.rows}x{B.cols} matrix is not Hermitian")


def _check_rank(r, n):
    if not 0 <= r <= n:
        raise IndexOutOfRange(f"minor size {r} outside 0..{n}")


def rdet(A, i, threads=None):
    """The i-th row determinant rdet_i(A)."""
    n = _square(A)
    _check_anchor(i, n)
    check_dimension(n)
    return _evaluate(A.data, row_expansion(n, i), threads)


def cdet(A, j, threads=None):
    """The j-th column determinant cdet_j(A)."""
    n = _square(A)
    _check_anchor(j, n)
    check_dimension(n)
    return _evaluate(A.data, column_expansion(n, j), threads)


def hdet(A, threads=None):
    """
    Determinant of a Hermitian matrix, the common real value of every
    rdet_i and cdet_j.

    Returns:
        Fraction
    """
    _require_hermitian(A)
    value = rdet(A, 1, threads) if A.rows else Quaternion(1)
    if not value.is_real():
        raise NonRealResult(f"Hermitian determinant evaluated to {value}")
    return value.w


def _principal(data, alpha):
    return [[data[a - 1][b - 1] for b in alpha] for a in alpha]


def minor_sum(B, r, threads=None):
    """Σ over α ∈ L_{r,n} of the principal minors |B|_α^α (0 when r = 0)."""
    _require_hermitian(B)
    n = B.rows
    _check_rank(r, n)
    if r == 0:
        return Fraction(0)
    check_dimension(n)
    terms = row_expansion(r, 1)
    total = ZERO
    for alpha in index_sets(r, n):
        total = total + _evaluate(_principal(B.data, alpha), terms, threads)
    if not total.is_real():
        raise NonRealResult(f"principal minor sum evaluated to {total}")
    return total.w


def _row_minor_sum(data, n, j, b, r):
    total = ZERO
    for alpha in index_sets_containing(r, n, j):
        replacement = [b[c - 1] for c in alpha]
        if not any(replacement):
            continue
        sub = _principal(data, alpha)
        position = alpha.position(j)
        sub[position - 1] = replacement
        total = total + _sum_terms(sub, row_expansion(r, position))
    return total


def _column_minor_sum(data, n, i, c, r):
    total = ZERO
    for beta in index_sets_containing(r, n, i):
        replacement = [c[a - 1] for a in beta]
        if not any(replacement):
            continue
        sub = _principal(data, beta)
        position = beta.position(i)
        for row, value in zip(sub, replacement):
            row[position - 1] = value
        total = total + _sum_terms(sub, column_expansion(r, position))
    return total


def _prepare(B, anchor, vector, r):
    _require_hermitian(B)
    n = B.rows
    _check_anchor(anchor, n)
    _check_rank(r, n)
    vector = tuple(Quaternion.coerce(q) for q in vector)
    if len(vector) != n:
        raise DimensionMismatch(f"replacement of length {len(vector)} for order {n}")
    check_dimension(n)
    return n, vector


def rdet_minor_sum(B, j, b, r):
    """Σ over α ∈ I_{r,n}{j} of rdet_j((B_{j.}(b))_α^α)."""
    n, b = _prepare(B, j, b, r)
    if r == 0:
        return ZERO
    return _row_minor_sum(B.data, n, j, b, r)


def cdet_minor_sum(B, i, c, r):
    """Σ over β ∈ J_{r,n}{i} of cdet_i((B_{.i}(c))_β^β)."""
    n, c = _prepare(B, i, c, r)
    if r == 0:
        return ZERO
    return _column_minor_sum(B.data, n, i, c, r)


def _entrywise(cells, compute, threads):
    workers = threads or conf.threads()
    if workers <= 1 or len(cells) < 2:
        return [compute(cell) for cell in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(compute, cells))


def rdet_minor_matrix(H, B, r, threads=None):
    """
    Matrix with (i, j) entry rdet_minor_sum(H, j, row i of B, r).

    Args:
        H (QMatrix): Hermitian n×n matrix
        B (QMatrix): p×n matrix whose rows replace rows of H
        r (int): minor size, normally rank H

    Returns:
        QMatrix: p×n matrix equal to minor_sum(H, r)·B·H† when the rows of B
        lie in the row space of H

    `threads` only spreads the entries over a thread pool; it is a hint and
    brings no speedup while pure-Python arithmetic holds the GIL.
    """
    _require_hermitian(H)
    n = H.rows
    if B.cols != n:
        raise DimensionMismatch(f"rows of length {B.cols} cannot replace rows of order {n}")
    _check_rank(r, n)
    if r == 0:
        return QMatrix.zeros(B.rows, n)
    check_dimension(n)
    cells = [(i, j) for i in range(B.rows) for j in range(1, n + 1)]
    values = _entrywise(
        cells, lambda cell: _row_minor_sum(H.data, n, cell[1], B.data[cell[0]], r), threads
    )
    return QMatrix._make(
        tuple(tuple(values[i * n:(i + 1) * n]) for i in range(B.rows)), B.rows, n
    )


def cdet_minor_matrix(H, B, r, threads=None):
    """
    Matrix with (i, j) entry cdet_minor_sum(H, i, column j of B, r).

    Equals minor_sum(H, r)·H†·B when the columns of B lie in the column
    space of H.

    `threads` is a hint, as for rdet_minor_matrix.
    """
    _require_hermitian(H)
    n = H.rows
    if B.rows != n:
        raise DimensionMismatch(f"columns of length {B.rows} cannot replace columns of order {n}")
    _check_rank(r, n)
    if r == 0:
        return QMatrix.zeros(n, B.cols)
    check_dimension(n)
    columns = [tuple(row[j] for row in B.data) for j in range(B.cols)]
    cells = [(i, j) for i in range(1, n + 1) for j in range(B.cols)]
    values = _entrywise(
        cells, lambda cell: _column_minor_sum(H.data, n, cell[0], columns[cell[1]], r), threads
    )
    return QMatrix._make(
        tuple(tuple(values[i * B.cols:(i + 1) * B.cols]) for i in range(n)), n, B.cols
    )

"""
Dense quaternion matrices.

QMatrix is immutable and stores its entries as a tuple of row tuples. The
public operations (entry, row, col, submatrix, replace_row,
replace_col) take 1-based indices; `data` exposes the raw 0-based storage
for the determinant layer.
"""

from numbers import Rational

from .exceptions import DimensionMismatch, IndexOutOfRange
from .scalars import ONE, ZERO, Quaternion, as_fraction

__all__ = ['QMatrix', 'IndexSet']


class IndexSet(tuple):
    """
    A strictly increasing, nonempty sequence of 1-based indices.

    Used for the row/column selections α, β of principal minors.
    """

    def __new__(cls, indices, bound=None):
        values = tuple(int(i) for i in indices)
        if not values:
            raise IndexOutOfRange("an index set must be nonempty")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise IndexOutOfRange(f"indices {values} are not strictly increasing")
        if values[0] < 1 or (bound is not None and values[-1] > bound):
            raise IndexOutOfRange(f"indices {values} fall outside 1..{bound}")
        return super().__new__(cls, values)

    @classmethod
    def full(cls, n):
        return cls(range(1, n + 1))

    def position(self, index):
        """1-based position of `index` inside the set."""
        try:
            return self.index(index) + 1
        except ValueError:
            raise IndexOutOfRange(f"{index} is not in {tuple(self)}") from None


class QMatrix:
    """An m×n matrix of Quaternion entries."""

    __slots__ = ('rows', 'cols', 'data', '_hash')

    def __init__(self, entries, shape=None):
        data = tuple(tuple(Quaternion.coerce(q) for q in row) for row in entries)
        if shape is None:
            if not data:
                raise DimensionMismatch("cannot infer the shape of an empty matrix")
            shape = (len(data), len(data[0]))
        m, n = shape
        if len(data) != m or any(len(row) != n for row in data):
            raise DimensionMismatch(f"entries do not form a {m}x{n} matrix")
        self._set(m, n, data)

    def _set(self, m, n, data):
        object.__setattr__(self, 'rows', m)
        object.__setattr__(self, 'cols', n)
        object.__setattr__(self, 'data', data)
        object.__setattr__(self, '_hash', None)

    @classmethod
    def _make(cls, data, m=None, n=None):
        matrix = object.__new__(cls)
        if m is None:
            m = len(data)
            n = len(data[0]) if data else 0
        matrix._set(m, n, data)
        return matrix

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    # Constructors

    @classmethod
    def zeros(cls, m, n):
        return cls._make(tuple((ZERO,) * n for _ in range(m)), m, n)

    @classmethod
    def identity(cls, n):
        return cls._make(tuple(
            tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
        ), n, n)

    @classmethod
    def diagonal(cls, values):
        values = [Quaternion.coerce(v) for v in values]
        n = len(values)
        return cls._make(tuple(
            tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n)
        ), n, n)

    @classmethod
    def from_rows(cls, rows):
        rows = [tuple(Quaternion.coerce(q) for q in row) for row in rows]
        return cls(rows)

    @classmethod
    def from_columns(cls, columns):
        columns = [tuple(Quaternion.coerce(q) for q in col) for col in columns]
        return cls(list(zip(*columns)), shape=(len(columns[0]), len(columns)))

    # Shape and access

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return not any(q for row in self.data for q in row)

    def is_hermitian(self):
        if not self.is_square():
            return False
        data = self.data
        return all(
            data[i][j] == data[j][i].conjugate()
            for i in range(self.rows) for j in range(i, self.cols)
        )

    def is_complex(self):
        return all(q.is_complex() for row in self.data for q in row)

    def _check_row(self, i):
        if not 1 <= i <= self.rows:
            raise IndexOutOfRange(f"row {i} outside 1..{self.rows}")

    def _check_col(self, j):
        if not 1 <= j <= self.cols:
            raise IndexOutOfRange(f"column {j} outside 1..{self.cols}")

    def entry(self, i, j):
        self._check_row(i)
        self._check_col(j)
        return self.data[i - 1][j - 1]

    def row(self, i):
        self._check_row(i)
        return self.data[i - 1]

    def col(self, j):
        self._check_col(j)
        return tuple(row[j - 1] for row in self.data)

    def entries(self):
        """Entries in row-major order."""
        return [q for row in self.data for q in row]

    # Arithmetic

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def _result_type(self, other):
        return type(self) if type(self) is type(other) else QMatrix

    def __add__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._same_shape(other)
        return self._result_type(other)._make(tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)
        ), self.rows, self.cols)

    def __sub__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._same_shape(other)
        return self._result_type(other)._make(tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)
        ), self.rows, self.cols)

    def __neg__(self):
        return type(self)._make(tuple(tuple(-q for q in row) for row in self.data),
                                self.rows, self.cols)

    def __mul__(self, scalar):
        """Right scalar multiplication A·s."""
        if isinstance(scalar, (Rational, Quaternion)):
            s = Quaternion.coerce(scalar)
            cls = type(self) if s.is_complex() else QMatrix
            return cls._make(tuple(tuple(q * s for q in row) for row in self.data),
                             self.rows, self.cols)
        return NotImplemented

    def __rmul__(self, scalar):
        """Left scalar multiplication s·A."""
        if isinstance(scalar, (Rational, Quaternion)):
            s = Quaternion.coerce(scalar)
            cls = type(self) if s.is_complex() else QMatrix
            return cls._make(tuple(tuple(s * q for q in row) for row in self.data),
                             self.rows, self.cols)
        return NotImplemented

    def __truediv__(self, scalar):
        if isinstance(scalar, Rational):
            d = as_fraction(scalar)
            return type(self)._make(tuple(tuple(q / d for q in row) for row in self.data),
                                    self.rows, self.cols)
        return NotImplemented

    def __matmul__(self, other):
        """Matrix product; entry products keep their left-to-right order."""
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = list(zip(*other.data)) if other.rows else [()] * other.cols
        result = []
        for row in self.data:
            out = []
            for col in columns:
                acc = ZERO
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
            result.append(tuple(out))
        return self._result_type(other)._make(tuple(result), self.rows, other.cols)

    def conj_transpose(self):
        """A* with (A*)_{ij} = conj(a_{ji})."""
        return type(self)._make(tuple(
            tuple(self.data[i][j].conjugate() for i in range(self.rows))
            for j in range(self.cols)
        ), self.cols, self.rows)

    @property
    def H(self):
        return self.conj_transpose()

    def power(self, p):
        """A^p by repeated squaring; A^0 is the identity."""
        if not self.is_square():
            raise DimensionMismatch(f"power of a non-square {self.rows}x{self.cols} matrix")
        if p < 0:
            raise ValueError("negative matrix powers are not defined here")
        result = type(self).identity(self.rows)
        base = self
        while p:
            if p & 1:
                result = result @ base
            p >>= 1
            if p:
                base = base @ base
        return result

    # Selection and replacement

    def submatrix(self, alpha, beta):
        """Rows α and columns β (1-based, order preserved)."""
        alpha = alpha if isinstance(alpha, IndexSet) else IndexSet(alpha)
        beta = beta if isinstance(beta, IndexSet) else IndexSet(beta)
        if alpha[-1] > self.rows or beta[-1] > self.cols:
            raise IndexOutOfRange(
                f"selection {tuple(alpha)}x{tuple(beta)} outside {self.rows}x{self.cols}"
            )
        return type(self)._make(tuple(
            tuple(self.data[i - 1][j - 1] for j in beta) for i in alpha
        ), len(alpha), len(beta))

    def principal(self, alpha):
        return self.submatrix(alpha, alpha)

    def replace_row(self, i, b):
        self._check_row(i)
        b = tuple(Quaternion.coerce(q) for q in b)
        if len(b) != self.cols:
            raise DimensionMismatch(f"row of length {len(b)} for {self.cols} columns")
        data = list(self.data)
        data[i - 1] = b
        return QMatrix._make(tuple(data), self.rows, self.cols)

    def replace_col(self, j, c):
        self._check_col(j)
        c = tuple(Quaternion.coerce(q) for q in c)
        if len(c) != self.rows:
            raise DimensionMismatch(f"column of length {len(c)} for {self.rows} rows")
        return QMatrix._make(tuple(
            row[:j - 1] + (c[i],) + row[j:] for i, row in enumerate(self.data)
        ), self.rows, self.cols)

    # Rank and index through the complex-adjoint embedding

    def complex_embedding(self):
        from .embedding import complex_embedding
        return complex_embedding(self)

    def rank(self):
        from .embedding import quaternion_rank
        return quaternion_rank(self)

    def index(self):
        """Ind A: smallest k ≥ 0 with rank A^{k+1} = rank A^k."""
        if not self.is_square():
            raise DimensionMismatch("the index is defined for square matrices only")
        k = 0
        current = type(self).identity(self.rows)
        previous_rank = self.rows
        while True:
            current = current @ self
            rank = current.rank()
            if rank == previous_rank:
                return k
            previous_rank = rank
            k += 1

    # Comparison and display

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, '_hash', hash((self.rows, self.cols, self.data)))
        return self._hash

    def __repr__(self):
        body = '; '.join('[' + ', '.join(str(q) for q in row) + ']' for row in self.data)
        return f"{type(self).__name__}({self.rows}x{self.cols}: {body})"

    def __str__(self):
        from .literals import format_matrix_text
        return format_matrix_text(self)

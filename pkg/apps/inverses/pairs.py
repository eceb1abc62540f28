"""
The weighted pair (A, W) shared by every weighted inverse.
"""

from dataclasses import dataclass, field
from functools import cached_property

from apps.quaternions.exceptions import DimensionMismatch
from apps.quaternions.matrices import QMatrix


@dataclass(frozen=True)
class WeightedPair:
    """
    A ∈ ℍ^{m×n} with its weight W ∈ ℍ^{n×m}.

    U = WA and V = AW are cached together with their powers up to exponent
    2k + 2; k is always recomputed as max(Ind U, Ind V).
    """

    A: QMatrix
    W: QMatrix
    _powers: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        m, n = self.A.shape
        if self.W.shape != (n, m):
            raise DimensionMismatch(
                f"weight must be {n}x{m} for a {m}x{n} matrix, got {self.W.rows}x{self.W.cols}"
            )

    @classmethod
    def unweighted(cls, A):
        """The pair (A, I) of a square matrix, where A_{d,W} is the Drazin inverse."""
        if not A.is_square():
            raise DimensionMismatch("W = I needs a square A")
        return cls(A, QMatrix.identity(A.rows))

    @property
    def m(self):
        return self.A.rows

    @property
    def n(self):
        return self.A.cols

    @cached_property
    def U(self):
        return self.W @ self.A

    @cached_property
    def V(self):
        return self.A @ self.W

    @cached_property
    def A_star(self):
        return self.A.H

    @cached_property
    def index_u(self):
        return self.U.index()

    @cached_property
    def index_v(self):
        return self.V.index()

    @cached_property
    def k(self):
        return max(self.index_u, self.index_v)

    @cached_property
    def r(self):
        """rank A"""
        return self.A.rank()

    @cached_property
    def r1(self):
        """rank U^k, equal to rank V^k for k ≥ both indices."""
        return self.u_power(self.k).rank()

    @cached_property
    def power_cache_limit(self):
        """Largest exponent kept in the power cache; U^{2k+1} and U^{k+2} are the highest in use."""
        return 2 * self.k + 2

    def u_power(self, p):
        return self._power('U', p)

    def v_power(self, p):
        return self._power('V', p)

    def _power(self, side, p):
        key = (side, p)
        if key in self._powers:
            return self._powers[key]
        base = self.U if side == 'U' else self.V
        below = [q for (s, q) in self._powers if s == side and q < p]
        if below:
            start = max(below)
            value = self._powers[(side, start)] @ base.power(p - start)
        else:
            value = base.power(p)
        if p <= self.power_cache_limit:
            self._powers[key] = value
        return value

    def u_hermitian(self):
        return self.U.is_hermitian()

    def v_hermitian(self):
        return self.V.is_hermitian()

"""
Exact quaternion scalars.

A Quaternion holds four fractions.Fraction coefficients w + x·i + y·j + z·k
with i² = j² = k² = ijk = −1. Fractions stay in lowest terms with a positive
denominator after every operation, so equality is structural and exact.
Any numbers.Rational mixes in and is converted to Fraction on the way.
"""

from fractions import Fraction
from numbers import Rational

from .exceptions import ZeroDivisor

__all__ = ['Quaternion', 'ZERO', 'ONE', 'I', 'J', 'K', 'as_fraction']


def as_fraction(value):
    """Coerce a numbers.Rational or a fraction string to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected a rational coefficient, got {type(value).__name__}")


class Quaternion:
    """
    An immutable quaternion over the rationals.

    Arithmetic operators follow the Hamilton product (noncommutative).
    Rationals mix in freely on either side: `2 * q`, `q - 1`, `q / 3`.
    """

    __slots__ = ('w', 'x', 'y', 'z')

    def __init__(self, w=0, x=0, y=0, z=0):
        object.__setattr__(self, 'w', as_fraction(w))
        object.__setattr__(self, 'x', as_fraction(x))
        object.__setattr__(self, 'y', as_fraction(y))
        object.__setattr__(self, 'z', as_fraction(z))

    @classmethod
    def _make(cls, w, x, y, z):
        # Coefficients are already Fractions.
        q = object.__new__(cls)
        object.__setattr__(q, 'w', w)
        object.__setattr__(q, 'x', x)
        object.__setattr__(q, 'y', y)
        object.__setattr__(q, 'z', z)
        return q

    @classmethod
    def coerce(cls, value):
        """Return `value` as a Quaternion; strings are parsed as literals."""
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, str):
            from .literals import parse_quaternion
            return parse_quaternion(value)
        if isinstance(value, Rational):
            return cls._make(as_fraction(value), _F0, _F0, _F0)
        raise TypeError(f"cannot interpret {value!r} as a quaternion")

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    def __reduce__(self):
        return (Quaternion, (self.w, self.x, self.y, self.z))

    # Components

    @property
    def components(self):
        return (self.w, self.x, self.y, self.z)

    @property
    def real(self):
        return self.w

    def is_real(self):
        return not (self.x or self.y or self.z)

    def is_complex(self):
        """True when the j and k parts vanish (the complex subfield)."""
        return not (self.y or self.z)

    # Algebra

    def conjugate(self):
        return Quaternion._make(self.w, -self.x, -self.y, -self.z)

    def norm_squared(self):
        """|q|², the nonnegative rational with conj(q)·q = |q|²."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self):
        n = self.norm_squared()
        if not n:
            raise ZeroDivisor("the zero quaternion has no inverse")
        return Quaternion._make(self.w / n, -self.x / n, -self.y / n, -self.z / n)

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion._make(self.w + other.w, self.x + other.x,
                                    self.y + other.y, self.z + other.z)
        if isinstance(other, Rational):
            return Quaternion._make(self.w + as_fraction(other), self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion._make(self.w - other.w, self.x - other.x,
                                    self.y - other.y, self.z - other.z)
        if isinstance(other, Rational):
            return Quaternion._make(self.w - as_fraction(other), self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Quaternion._make(-self.w, -self.x, -self.y, -self.z)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a1, b1, c1, d1 = self.w, self.x, self.y, self.z
            a2, b2, c2, d2 = other.w, other.x, other.y, other.z
            return Quaternion._make(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            )
        if isinstance(other, Rational):
            s = as_fraction(other)
            return Quaternion._make(self.w * s, self.x * s,
                                    self.y * s, self.z * s)
        return NotImplemented

    def __rmul__(self, other):
        # Rationals are central, so the side does not matter.
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if not other:
                raise ZeroDivisor("division of a quaternion by zero")
            d = as_fraction(other)
            return Quaternion._make(self.w / d, self.x / d, self.y / d, self.z / d)
        # Left and right quotients differ; callers multiply by inverse().
        return NotImplemented

    # Comparison

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (self.w == other.w and self.x == other.x
                    and self.y == other.y and self.z == other.z)
        if isinstance(other, Rational):
            return self.w == as_fraction(other) and self.is_real()
        return NotImplemented

    def __hash__(self):
        if self.is_real():
            return hash(self.w)
        return hash((self.w, self.x, self.y, self.z))

    def __bool__(self):
        return bool(self.w or self.x or self.y or self.z)

    def __repr__(self):
        return f"Quaternion('{self}')"

    def __str__(self):
        from .literals import format_quaternion
        return format_quaternion(self)


_F0 = Fraction(0)

ZERO = Quaternion()
ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)

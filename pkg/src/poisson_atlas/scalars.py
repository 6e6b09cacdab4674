"""Exact scalars: rationals and elements of a single quadratic extension Q(sqrt d).

A Scalar is a + b*sqrt(d) with a, b rational and d a square-free integer
(d = 0 encodes a plain rational, in which case b = 0).  Arithmetic between two
distinct extensions raises ScalarDomainError; rationals embed into any
extension.  Values are immutable and hashable, so they can serve as
polynomial coefficients and dictionary keys.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ScalarDomainError, ExtensionRequiredError

_RationalLike = (int, Fraction)


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = s^2 * d with d square-free; returns (s, d).  n may be negative."""
    if n == 0:
        return 0, 1
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= n  # leftover prime
    return s, sign * d


_F0 = Fraction(0)

_set = object.__setattr__


def _make(a, b, d):
    """Internal fast constructor; inputs must already be normalized Fractions."""
    s = object.__new__(Scalar)
    _set(s, "a", a)
    _set(s, "b", b)
    _set(s, "d", d)
    return s


class Scalar:
    """Immutable exact scalar in Q or one quadratic extension Q(sqrt d)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        if type(a) is not Fraction:
            a = Fraction(a)
        if type(b) is not Fraction:
            b = Fraction(b)
        if b == 0:
            d = 0
            b = _F0
        elif d == 0 or d == 1:
            raise ScalarDomainError(f"invalid extension discriminant {d}")
        _set(self, "a", a)
        _set(self, "b", b)
        _set(self, "d", d)

    def __setattr__(self, *args):
        raise AttributeError("Scalar is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def coerce(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, _RationalLike):
            return Scalar(value)
        raise TypeError(f"cannot coerce {value!r} to Scalar")

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    @property
    def is_zero(self) -> bool:
        return self.d == 0 and self.a == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ScalarDomainError(f"{self} is not rational")
        return self.a

    def conj(self) -> "Scalar":
        return Scalar(self.a, -self.b, self.d)

    def _common_d(self, other: "Scalar") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0:
            return self.d
        if self.d != other.d:
            raise ScalarDomainError(
                f"cannot mix sqrt({self.d}) with sqrt({other.d})"
            )
        return self.d

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if type(other) is not Scalar:
            if not isinstance(other, _RationalLike):
                return NotImplemented
            other = Scalar(other)
        if self.d == 0 and other.d == 0:
            return _make(self.a + other.a, _F0, 0)
        d = self._common_d(other)
        b = self.b + other.b
        return _make(self.a + other.a, b, d if b != 0 else 0)

    __radd__ = __add__

    def __neg__(self):
        return _make(-self.a, -self.b, self.d)

    def __sub__(self, other):
        if type(other) is not Scalar:
            if not isinstance(other, _RationalLike):
                return NotImplemented
            other = Scalar(other)
        if self.d == 0 and other.d == 0:
            return _make(self.a - other.a, _F0, 0)
        d = self._common_d(other)
        b = self.b - other.b
        return _make(self.a - other.a, b, d if b != 0 else 0)

    def __rsub__(self, other):
        if not isinstance(other, _RationalLike):
            return NotImplemented
        return Scalar(other) - self

    def __mul__(self, other):
        if type(other) is not Scalar:
            if not isinstance(other, _RationalLike):
                return NotImplemented
            other = Scalar(other)
        if self.d == 0 and other.d == 0:
            return _make(self.a * other.a, _F0, 0)
        d = self._common_d(other)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return _make(a, b, d if b != 0 else 0)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero:
            raise ZeroDivisionError("scalar division by zero")
        if self.d == 0:
            return _make(1 / self.a, _F0, 0)
        n = self.a * self.a - self.b * self.b * self.d
        # n != 0 since sqrt(d) is irrational
        return _make(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing --------------------------------------------------

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def sort_key(self):
        """Deterministic total order used for report stability (not algebraic)."""
        return (self.d, self.a, self.b)

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return format_scalar(self)


ZERO = Scalar(0)
ONE = Scalar(1)


def scalar_sqrt(value) -> Scalar:
    """Exact square root of a rational as a Scalar, possibly in Q(sqrt d).

    Raises ExtensionRequiredError if the input is itself irrational.
    """
    value = Scalar.coerce(value)
    if not value.is_rational:
        raise ExtensionRequiredError(
            "extension beyond quadratic required (sqrt of an irrational)"
        )
    q = value.as_fraction()
    if q == 0:
        return ZERO
    s_num, d_num = squarefree_decompose(q.numerator * q.denominator)
    # sqrt(p/q) = sqrt(p*q)/q
    root = Fraction(s_num, q.denominator)
    if d_num == 1:
        return Scalar(root)
    return Scalar(0, root, d_num)


def format_scalar(s: Scalar) -> str:
    """Render exactly: `p/q`, or `a+b*sqrt(d)` with b's sign folded in."""
    def frac(q: Fraction) -> str:
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    if s.b == 0:
        return frac(s.a)
    mag = abs(s.b)
    root = f"sqrt({s.d})" if mag == 1 else f"{frac(mag)}*sqrt({s.d})"
    sign = "-" if s.b < 0 else "+"
    if s.a == 0:
        return root if s.b > 0 else f"-{root}"
    return f"{frac(s.a)}{sign}{root}"


def common_domain(values) -> int:
    """Discriminant shared by a collection of scalars (0 if all rational)."""
    d = 0
    for v in values:
        if v.b != 0:
            if d == 0:
                d = v.d
            elif d != v.d:
                raise ScalarDomainError(f"mixed extensions sqrt({d}) and sqrt({v.d})")
    return d

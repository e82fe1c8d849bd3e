"""Truncated formal power series with exact rational coefficients.

A series carries a fixed truncation order N and exactly N+1 coefficients,
stored as `fractions.Fraction`.  Arithmetic never leaves exact rationals;
combining series of different orders raises instead of silently
re-truncating.  Series are immutable values: every operation returns a
fresh series.
"""

from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]

__all__ = ["TruncatedSeries", "OrderMismatchError"]


class OrderMismatchError(ValueError):
    """Two series of different truncation orders were combined."""


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed in an exact series")
    return Fraction(value)


class TruncatedSeries:
    """Formal power series in one variable q, truncated at a fixed order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Rational]):
        coeffs = tuple(_exact(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = coeffs

    # ------------------------------------------------------------------
    # construction helpers
    # ------------------------------------------------------------------

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Rational], order: int | None = None) -> "TruncatedSeries":
        """Build a series, zero-padding up to ``order`` when given."""
        coeffs = list(coefficients)
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            if len(coeffs) > order + 1:
                raise ValueError("more coefficients than the requested order allows")
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        return cls(coeffs)

    @classmethod
    def constant(cls, value: Rational, order: int) -> "TruncatedSeries":
        return cls.from_coefficients([value], order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.constant(1, order)

    @classmethod
    def monomial(cls, value: Rational, power: int, order: int) -> "TruncatedSeries":
        """The series value*q^power at the given truncation order."""
        if not 0 <= power <= order:
            raise ValueError("monomial power must lie within the truncation order")
        coeffs = [0] * (order + 1)
        coeffs[power] = value
        return cls(coeffs)

    # ------------------------------------------------------------------
    # basic accessors
    # ------------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs[k]

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._coeffs)

    def integer_coefficients(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return tuple(int(c) for c in self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c if c.denominator != 1 else c.numerator) for c in self._coeffs)
        return f"TruncatedSeries([{shown}])"

    def _same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._same_order(other)
        return TruncatedSeries(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self._coeffs)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._same_order(other)
        return TruncatedSeries(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(other * c for c in self._coeffs)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._same_order(other)
        n = self.order
        a, b = self._coeffs, other._coeffs
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return TruncatedSeries(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        """Integer power by square-and-multiply; negative powers go through inverse()."""
        if not isinstance(exponent, int):
            raise TypeError("series powers must be integers")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a unit (nonzero constant term)."""
        a = self._coeffs
        if a[0] == 0:
            raise ValueError("not a unit: constant term is zero")
        n = self.order
        b = [Fraction(0)] * (n + 1)
        b[0] = 1 / a[0]
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if a[j] != 0:
                    acc += a[j] * b[k - j]
            b[k] = -acc / a[0]
        return TruncatedSeries(b)

    def negate_q(self) -> "TruncatedSeries":
        """Substitute q -> -q."""
        return TruncatedSeries(
            c if k % 2 == 0 else -c for k, c in enumerate(self._coeffs)
        )

    # ------------------------------------------------------------------
    # transcendental operations (coefficient recurrences, O(N^2))
    # ------------------------------------------------------------------

    def log1(self) -> "TruncatedSeries":
        """Logarithm of a series with constant term 1; the result has constant term 0.

        Uses the recurrence from b' = a'/a rather than composing the
        Mercator series, which would cost O(N^3).
        """
        a = self._coeffs
        if a[0] != 1:
            raise ValueError("log1 requires constant term 1")
        n = self.order
        b = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            acc = k * a[k]
            for j in range(1, k):
                if a[k - j] != 0 and b[j] != 0:
                    acc -= j * b[j] * a[k - j]
            b[k] = acc / k
        return TruncatedSeries(b)

    def exp0(self) -> "TruncatedSeries":
        """Exponential of a series with constant term 0; the result has constant term 1."""
        a = self._coeffs
        if a[0] != 0:
            raise ValueError("exp0 requires constant term 0")
        n = self.order
        b = [Fraction(0)] * (n + 1)
        b[0] = Fraction(1)
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if a[j] != 0 and b[k - j] != 0:
                    acc += j * a[j] * b[k - j]
            b[k] = acc / k
        return TruncatedSeries(b)

    def root_m(self, m: int) -> "TruncatedSeries":
        """The unique m-th root with constant term 1 of a series with constant term 1.

        Solves the triangular system for the root coefficient by
        coefficient, via the relation m*a*b' = a'*b.  Coefficients of the
        root are exact rationals; integrality can be queried afterwards
        with is_integral().
        """
        if not isinstance(m, int) or m < 1:
            raise ValueError("root index m must be a positive integer")
        a = self._coeffs
        if a[0] != 1:
            raise ValueError("root_m requires constant term 1")
        n = self.order
        b = [Fraction(0)] * (n + 1)
        b[0] = Fraction(1)
        for k in range(1, n + 1):
            acc = k * a[k]
            for l in range(1, k):
                if a[l] != 0 and b[k - l] != 0:
                    acc += l * a[l] * b[k - l]
                if b[l] != 0 and a[k - l] != 0:
                    acc -= m * l * b[l] * a[k - l]
            b[k] = acc / (m * k)
        return TruncatedSeries(b)

"""Exact arithmetic in Q(i), the Gaussian rationals.

Values mix freely with ``int`` and ``Fraction``; mixing with ``float`` or
``complex`` degrades to a Python ``complex`` so the same formulas can run on
either backend.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction

_EXACT = (int, Fraction)


class GaussQ:
    """A number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussQ):
            re, im = re.re, re.im + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> GaussQ:
        if isinstance(value, GaussQ):
            return value
        if isinstance(value, _EXACT):
            return cls(value)
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, numbers.Real):
            return cls(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} to GaussQ")

    # ----- arithmetic -------------------------------------------------
    def _other(self, other):
        if isinstance(other, GaussQ):
            return other
        if isinstance(other, _EXACT):
            return GaussQ(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return complex(self) + other if isinstance(other, numbers.Number) else NotImplemented
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return complex(self) - other if isinstance(other, numbers.Number) else NotImplemented
        return GaussQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return other - complex(self) if isinstance(other, numbers.Number) else NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return complex(self) * other if isinstance(other, numbers.Number) else NotImplemented
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return complex(self) / other if isinstance(other, numbers.Number) else NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("GaussQ division by zero")
        num = self * o.conjugate()
        return GaussQ(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return other / complex(self) if isinstance(other, numbers.Number) else NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return complex(self) ** k
        if k < 0:
            return GaussQ(1) / (self ** -k)
        result, base = GaussQ(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ----- comparisons and conversions --------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _EXACT):
            return self.im == 0 and self.re == other
        if isinstance(other, numbers.Complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return math.sqrt(float(self.norm()))

    def conjugate(self) -> GaussQ:
        return GaussQ(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def __repr__(self):
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussQ(0, 1)


def is_exact(value) -> bool:
    return isinstance(value, (GaussQ, int, Fraction))


def to_complex(value) -> complex:
    return complex(value)


def conj(value):
    """Complex conjugate that preserves the exact backend."""
    if isinstance(value, _EXACT):
        return value
    return value.conjugate()

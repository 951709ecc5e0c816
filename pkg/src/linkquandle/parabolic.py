"""The parabolic quandle: classes ``[x, y]`` of nonzero vectors in C^2 up to sign.

Operation on representatives::

    [x1, y1] * [x2, y2] = [x1 + x1 x2 y2 - y1 x2^2,  x1 y2^2 + y1 - x2 y2 y1]

Writing ``P(x, y) = [[1 - xy, x^2], [-y^2, 1 + xy]]`` this is
``v * w = P(w)^-1 v`` and ``P(v * w) = P(w)^-1 P(v) P(w)``, so ``P`` maps
``(Par, *)`` into the conjugation quandle ``x * y = y^-1 x y``.  The inverse
operation ``v *^-1 w = P(w) v`` realises ``x * y = y x y^-1`` instead.

All functions work on any coordinate type with ring operations (ints,
``GaussQ``, complex, polynomials); ``star``/``star_inv`` act on raw pairs.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

from .gaussian import GaussQ


def star(v, w):
    x1, y1 = v
    x2, y2 = w
    return (x1 + x1 * x2 * y2 - y1 * x2 * x2, x1 * y2 * y2 + y1 - x2 * y2 * y1)


def star_inv(v, w):
    x1, y1 = v
    x2, y2 = w
    return (x1 - x1 * x2 * y2 + x2 * x2 * y1, y1 - x1 * y2 * y2 + x2 * y2 * y1)


def matrix_of(v):
    x, y = v
    return ((1 - x * y, x * x), (-(y * y), 1 + x * y))


@dataclass(frozen=True)
class ParabolicElement:
    """A representative ``(x, y)`` of a class in ``(C^2 - 0)/±``.

    Equality of objects is equality of representatives; use
    ``projective_eq`` (or ``same_class`` for exact values) for class equality.
    """

    x: object
    y: object

    def __post_init__(self):
        if _is_number(self.x) and _is_number(self.y) and self.x == 0 and self.y == 0:
            raise ValueError("[0, 0] is not an element of the parabolic quandle")

    @property
    def pair(self):
        return (self.x, self.y)

    def __neg__(self):
        return ParabolicElement(-self.x, -self.y)

    def __iter__(self):
        return iter((self.x, self.y))


def _is_number(v):
    return isinstance(v, (numbers.Number, GaussQ))


def par_op(v: ParabolicElement, w: ParabolicElement) -> ParabolicElement:
    return ParabolicElement(*star(v.pair, w.pair))


def par_op_inv(v: ParabolicElement, w: ParabolicElement) -> ParabolicElement:
    return ParabolicElement(*star_inv(v.pair, w.pair))


def to_matrix(v: ParabolicElement):
    return matrix_of(v.pair)


def same_class(v: ParabolicElement, w: ParabolicElement) -> bool:
    """Exact class equality: ``w = ±v``."""
    return (v.x == w.x and v.y == w.y) or (v.x == -w.x and v.y == -w.y)


def _norm(pair) -> float:
    return math.hypot(*(abs(complex(c)) for c in pair))


def projective_eq(v: ParabolicElement, w: ParabolicElement, eps: float = 1e-9) -> bool:
    a, b = v.pair, w.pair
    diff = _norm((complex(a[0]) - complex(b[0]), complex(a[1]) - complex(b[1])))
    summ = _norm((complex(a[0]) + complex(b[0]), complex(a[1]) + complex(b[1])))
    return min(diff, summ) <= eps * max(_norm(a), _norm(b))


def _positive(z: complex, tol: float) -> bool:
    """Argument in (-pi/2, pi/2], with a tolerance on the imaginary axis."""
    if abs(z.real) > tol:
        return z.real > 0
    return z.imag >= 0


def canonical_sign(v: ParabolicElement, tol: float = 1e-12) -> ParabolicElement:
    """The representative whose first nonzero coordinate points rightwards."""
    scale = max(_norm(v.pair), 1.0)
    for c in v.pair:
        z = complex(c)
        if abs(z) > tol * scale:
            return v if _positive(z, tol * scale) else -v
    return v


def complex_pair(z, digits: int | None = None) -> list:
    z = complex(z)
    re, im = z.real, z.imag
    if digits is not None:
        re, im = round(re, digits) + 0.0, round(im, digits) + 0.0
    return [re, im]


def element_to_dict(v: ParabolicElement, digits: int | None = None) -> dict:
    v = canonical_sign(v)
    return {"x": complex_pair(v.x, digits), "y": complex_pair(v.y, digits)}


def element_from_dict(data: dict) -> ParabolicElement:
    return ParabolicElement(complex(*data["x"]), complex(*data["y"]))


def fixed_point_det(v: ParabolicElement, w: ParabolicElement):
    """``x1 y2 - x2 y1``; zero iff ``P(v)`` and ``P(w)`` share their fixed point."""
    return v.x * w.y - w.x * v.y


"""2x2 matrices as nested tuples ``((a, b), (c, d))``.

Entries may be ints, ``GaussQ``, ``complex`` or anything with ring
operations; all helpers are generic over the entry type.
"""

from __future__ import annotations

from .gaussian import conj

IDENTITY = ((1, 0), (0, 1))


def mat(a, b, c, d):
    return ((a, b), (c, d))


def mul(m, n):
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def inv(m):
    """Inverse of a determinant-one matrix (adjugate)."""
    (a, b), (c, d) = m
    return ((d, -b), (-c, a))


def inv_general(m):
    (a, b), (c, d) = m
    det = a * d - b * c
    return ((d / det, -b / det), (-c / det, a / det))


def det(m):
    (a, b), (c, d) = m
    return a * d - b * c


def trace(m):
    return m[0][0] + m[1][1]


def neg(m):
    return tuple(tuple(-v for v in row) for row in m)


def conjugate(m):
    return tuple(tuple(conj(v) for v in row) for row in m)


def entries(m):
    return [m[0][0], m[0][1], m[1][0], m[1][1]]


def max_entry_distance(m, n) -> float:
    return max(abs(complex(x) - complex(y)) for x, y in zip(entries(m), entries(n)))


def distance_up_to_sign(m, n) -> float:
    """``min(|m - n|, |m + n|)`` in the max-entry norm."""
    return min(max_entry_distance(m, n), max_entry_distance(m, neg(n)))


def exact_equal_up_to_sign(m, n) -> bool:
    return m == n or m == neg(n)


def product(mats):
    out = IDENTITY
    for m in mats:
        out = mul(out, m)
    return out

"""Simultaneous (Aberth-Ehrlich) root finding for univariate complex polynomials."""

from __future__ import annotations

import cmath
import math

import numpy as np


def _horner(coeffs, z):
    p = 0j
    dp = 0j
    for c in coeffs:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def aberth_roots(coeffs, eps: float = 1e-14, max_iter: int = 200, polish: int = 3) -> list:
    """All roots (with multiplicity) of ``sum coeffs[k] z^(n-k)``.

    ``coeffs`` is highest degree first.  Leading coefficients that vanish
    relative to the largest one are dropped; zero roots are split off
    exactly.
    """
    c = [complex(v) for v in coeffs]
    big = max((abs(v) for v in c), default=0.0)
    if big == 0:
        raise ValueError("zero polynomial has no isolated roots")
    while c and abs(c[0]) <= 1e-15 * big:
        c.pop(0)
    zeros = 0
    while len(c) > 1 and c[-1] == 0:
        c.pop()
        zeros += 1
    n = len(c) - 1
    roots = [0j] * zeros
    if n <= 0:
        return roots
    if n == 1:
        return roots + [-c[1] / c[0]]

    monic = [v / c[0] for v in c]
    # start on a circle whose radius is the geometric mean of the root moduli,
    # kept within a small factor of the Fujiwara bound so the starting points
    # never sit numerically on top of each other
    bound = 2 * max(abs(monic[k]) ** (1 / k) for k in range(1, n + 1))
    radius = min(max(abs(monic[-1]) ** (1 / n), 1e-3 * bound), bound)
    z = np.array([radius * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)])
    for _ in range(max_iter):
        biggest = 0.0
        for k in range(n):
            p, dp = _horner(monic, z[k])
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else p
            diff = z[k] - np.delete(z, k)
            step = ratio
            if np.all(diff != 0):
                with np.errstate(all="ignore"):
                    denom = 1 - ratio * np.sum(1.0 / diff)
                if denom != 0 and cmath.isfinite(denom):
                    step = ratio / denom
            if not cmath.isfinite(step):
                continue
            z[k] -= step
            biggest = max(biggest, abs(step) / max(1.0, abs(z[k])))
        if biggest <= eps:
            break
    out = []
    for r in z:
        r = complex(r)
        for _ in range(polish):
            p, dp = _horner(monic, r)
            if dp == 0 or p == 0:
                break
            r2 = r - p / dp
            if abs(_horner(monic, r2)[0]) >= abs(p):
                break
            r = r2
        out.append(r)
    return roots + out

"""Sparse multivariate polynomials over exact or floating complex coefficients.

A ``MultiPoly`` stores ``{exponent tuple: coefficient}`` over a fixed ordered
variable list.  Coefficients may be ints, ``Fraction``, ``GaussQ`` or
``complex``; zero coefficients are never stored.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass

from .gaussian import GaussQ, conj


def _is_zero(c) -> bool:
    return c == 0


@dataclass(frozen=True)
class MultiPoly:
    variables: tuple
    terms: tuple  # sorted ((exponents, coeff), ...)

    # ----- construction ------------------------------------------------
    @classmethod
    def from_dict(cls, variables, terms: dict) -> MultiPoly:
        variables = tuple(variables)
        clean = {e: c for e, c in terms.items() if not _is_zero(c)}
        return cls(variables, tuple(sorted(clean.items(), key=lambda kv: kv[0])))

    @classmethod
    def constant(cls, variables, c) -> MultiPoly:
        return cls.from_dict(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, name) -> MultiPoly:
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls.from_dict(variables, {tuple(e): 1})

    @classmethod
    def gens(cls, variables) -> tuple:
        return tuple(cls.var(variables, v) for v in variables)

    def as_dict(self) -> dict:
        return dict(self.terms)

    # ----- arithmetic --------------------------------------------------
    def _lift(self, other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError("polynomials over different variable lists")
            return other
        if isinstance(other, (numbers.Number, GaussQ)):
            return MultiPoly.constant(self.variables, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms:
            out[e] = out.get(e, 0) + c
        return MultiPoly.from_dict(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms:
            for e2, c2 in o.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly.from_dict(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = MultiPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> MultiPoly:
        return MultiPoly.from_dict(self.variables, {e: v * c for e, v in self.terms})

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (numbers.Number, GaussQ)):
            if _is_zero(other):
                return not self.terms
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, self.terms))

    # ----- inspection --------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e, _ in self.terms)

    def constant_value(self):
        for e, c in self.terms:
            if not any(e):
                return c
        return 0

    def _index(self, name) -> int:
        return self.variables.index(name)

    def degree(self, name) -> int:
        k = self._index(name)
        return max((e[k] for e, _ in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    def used_variables(self) -> tuple:
        return tuple(v for k, v in enumerate(self.variables) if any(e[k] for e, _ in self.terms))

    def is_exact(self) -> bool:
        return all(not isinstance(c, (complex, float)) for _, c in self.terms)

    def coefficient_in(self, name, power: int) -> MultiPoly:
        """Coefficient of ``name**power``, as a polynomial in the other variables."""
        k = self._index(name)
        out = {}
        for e, c in self.terms:
            if e[k] == power:
                e2 = list(e)
                e2[k] = 0
                out[tuple(e2)] = c
        return MultiPoly.from_dict(self.variables, out)

    def degree_in_set(self, names) -> set:
        """The set of total degrees of terms restricted to ``names``."""
        ks = [self._index(n) for n in names]
        return {sum(e[k] for k in ks) for e, _ in self.terms}

    def univariate_coeffs(self, name) -> list:
        """Coefficients, highest degree first, of a polynomial in ``name`` only."""
        k = self._index(name)
        deg = self.degree(name)
        coeffs = [0] * (deg + 1)
        for e, c in self.terms:
            if any(v for i, v in enumerate(e) if i != k):
                raise ValueError("polynomial involves other variables")
            coeffs[deg - e[k]] = c
        return coeffs

    def monomial_content(self) -> tuple:
        """Exponents of the largest monomial dividing every term."""
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(e[k] for e, _ in self.terms) for k in range(len(self.variables)))

    def divide_monomial(self, exps) -> MultiPoly:
        out = {}
        for e, c in self.terms:
            out[tuple(a - b for a, b in zip(e, exps))] = c
        return MultiPoly.from_dict(self.variables, out)

    # ----- evaluation and substitution -----------------------------------
    def __call__(self, point):
        if isinstance(point, dict):
            point = [point[v] for v in self.variables]
        total = 0
        for e, c in self.terms:
            term = c
            for v, k in zip(point, e):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    def substitute(self, name, value, tol: float = 0.0) -> MultiPoly:
        """Replace ``name`` by a number or a polynomial over the same variables.

        With floating values, output coefficients whose magnitude is at most
        ``tol`` times the sum of magnitudes that produced them are dropped.
        """
        k = self._index(name)
        if isinstance(value, MultiPoly):
            out = MultiPoly.constant(self.variables, 0)
            powers = {}
            for e, c in self.terms:
                p = e[k]
                if p not in powers:
                    powers[p] = value ** p
                e2 = list(e)
                e2[k] = 0
                out = out + MultiPoly.from_dict(self.variables, {tuple(e2): c}) * powers[p]
            return out
        out, mags = {}, {}
        for e, c in self.terms:
            e2 = list(e)
            e2[k] = 0
            e2 = tuple(e2)
            term = c * value ** e[k] if e[k] else c
            out[e2] = out.get(e2, 0) + term
            mags[e2] = mags.get(e2, 0.0) + abs(complex(term))
        if tol > 0:
            out = {e: c for e, c in out.items() if abs(complex(c)) > tol * mags[e]}
        return MultiPoly.from_dict(self.variables, out)

    def clean(self, tol: float) -> MultiPoly:
        """Drop coefficients below ``tol`` times the largest one."""
        if not self.terms:
            return self
        big = max(abs(complex(c)) for _, c in self.terms)
        return MultiPoly.from_dict(self.variables,
                                   {e: c for e, c in self.terms if abs(complex(c)) > tol * big})

    def derivative(self, name) -> MultiPoly:
        k = self._index(name)
        out = {}
        for e, c in self.terms:
            if e[k]:
                e2 = list(e)
                e2[k] -= 1
                out[tuple(e2)] = c * e[k]
        return MultiPoly.from_dict(self.variables, out)

    def to_complex(self) -> MultiPoly:
        return MultiPoly.from_dict(self.variables, {e: complex(c) for e, c in self.terms})

    def conjugate(self) -> MultiPoly:
        return MultiPoly.from_dict(self.variables, {e: conj(c) for e, c in self.terms})

    def normalized(self) -> MultiPoly:
        """Scale so the leading (last in term order) coefficient is 1."""
        if not self.terms:
            return self
        lead = self.terms[-1][1]
        inv = 1 / lead if not isinstance(lead, int) else GaussQ(1) / lead
        return self.scale(inv)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k)
            coeff = str(c)
            if mono:
                parts.append(mono if c == 1 else f"({coeff})*{mono}")
            else:
                parts.append(f"({coeff})")
        return " + ".join(parts)

"""Parabolic colorings of quandle presentations via polynomial systems.

Coloring convention
-------------------
A coloring must turn every crossing relation into a conjugation relation of
the Wirtinger group, where ``u * o`` corresponds to ``o u o^-1``.  In the
parabolic quandle that operation is ``star_inv`` (``P(v *^-1 w) = P(w) P(v)
P(w)^-1``), so presentation words are evaluated with ``*`` -> ``star_inv``
and ``*^-1`` -> ``star``.  Colorings are then exactly the maps whose matrix
images ``P(f(g))`` satisfy the Wirtinger relators.  The map ``(x, y) ->
(ix, iy)`` is an isomorphism between the two conventions, so solution counts
do not depend on this choice; the concrete coordinates do.

System construction
-------------------
Generator ``g0`` is pinned to ``[1, 0]``, ``g1`` to ``[0, t]`` and every
other generator gets fresh variables ``[x_k, y_k]``.  A relation ``L ~ R`` is
first rewritten so that its left side is a single generator by peeling the
outermost operation of ``L`` onto ``R``; then ``L = sigma R`` gives two
coordinate equations, one system per sign vector ``sigma``.

Solver
------
Isolated solutions are found by (1) roots of univariate members, (2) the
vanishing of the minors of homogeneous linear blocks in a nonzero vector
``(x_k, y_k)``, (3) substitution of variables that occur linearly with a
constant coefficient, and (4) seeded multistart damped Newton when nothing
else applies.  Every candidate is polished by Gauss-Newton on the original
system and accepted at relative residual <= 1e-12.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from . import sl2
from .diagram import LinkDiagram
from .errors import (
    PositiveDimensional,
    SearchSpaceTooLarge,
    SolverError,
    SolverStalled,
    TooFewGenerators,
)
from .gaussian import GaussQ
from .multipoly import MultiPoly
from .parabolic import (
    ParabolicElement,
    canonical_sign,
    fixed_point_det,
    matrix_of,
    projective_eq,
    star,
    star_inv,
)
from .presentations import (
    GroupWord,
    QuandlePresentation,
    QuandleWord,
    eliminate_with_definitions,
    fundamental_quandle_presentation,
)
from .roots import aberth_roots

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverOptions:
    tolerance: float = 1e-12        # accepted relative residual
    stall_tolerance: float = 1e-6   # above this a candidate is discarded
    aberth_eps: float = 1e-14
    aberth_iter: int = 200
    newton_starts: int = 64
    newton_radius: float = 4.0
    newton_iter: int = 100
    seed: int = 0
    merge_tol: float = 1e-8
    fingerprint_tol: float = 1e-8
    max_vars: int = 8
    max_branches: int = 4096


# ---------------------------------------------------------------------------
# system construction

@dataclass(frozen=True)
class ConstraintSystem:
    variables: tuple
    polynomials: tuple
    sign_branch: tuple
    gauge: tuple                 # (index pinned to [1,0], index pinned to [0,t])
    generator_values: tuple      # per generator: (x, y) as MultiPoly
    nonzero_groups: tuple        # variable-name tuples that cannot all vanish


def peel_relation(lhs: QuandleWord, rhs: QuandleWord):
    """Rewrite ``lhs ~ rhs`` as ``g ~ W`` with ``g`` a generator."""
    while not lhs.is_leaf:
        if lhs.inverse:
            rhs = rhs.star(lhs.right)
        else:
            rhs = rhs.star_inv(lhs.right)
        lhs = lhs.left
    return lhs.gen, rhs


def evaluate_word(word: QuandleWord, value_of):
    """Evaluate a presentation word on coordinate pairs (coloring convention)."""
    return word.evaluate(value_of, star_inv, star)


def _variable_names(n_free: int):
    if n_free == 1:
        return ("t", "x", "y"), [("x", "y")]
    names = ["t"]
    pairs = []
    for k in range(1, n_free + 1):
        names += [f"x{k}", f"y{k}"]
        pairs.append((f"x{k}", f"y{k}"))
    return tuple(names), pairs


def _gauge_values(n: int, gauge):
    i, j = gauge
    n_free = n - 2
    if n_free == 0:
        variables, pairs = ("t",), []
    else:
        variables, pairs = _variable_names(n_free)
    one = MultiPoly.constant(variables, 1)
    zero = MultiPoly.constant(variables, 0)
    t = MultiPoly.var(variables, "t")
    values = [None] * n
    values[i] = (one, zero)
    values[j] = (zero, t)
    free = iter(pairs)
    for g in range(n):
        if values[g] is None:
            xn, yn = next(free)
            values[g] = (MultiPoly.var(variables, xn), MultiPoly.var(variables, yn))
    groups = (("t",),) + tuple(pairs)
    return variables, tuple(values), groups


def build_systems(p: QuandlePresentation, gauge=(0, 1), max_branches: int | None = None) -> list:
    """One constraint system per sign vector, for the given gauge pair."""
    n = p.generator_count
    if n < 2:
        raise TooFewGenerators("gauge fixing needs at least two generators")
    if gauge[0] == gauge[1] or not all(0 <= g < n for g in gauge):
        raise ValueError(f"bad gauge pair {gauge}")
    variables, values, groups = _gauge_values(n, gauge)
    sides = []
    for lhs, rhs in p.relations:
        g, word = peel_relation(lhs, rhs)
        sides.append((values[g], evaluate_word(word, lambda k: values[k])))
    k = len(sides)
    if max_branches is not None and 2 ** k > max_branches:
        raise SearchSpaceTooLarge(f"{2 ** k} sign branches exceed the limit {max_branches}")
    systems = []
    for sigma in itertools.product((1, -1), repeat=k):
        polys = []
        for s, (left, right) in zip(sigma, sides):
            polys.append(left[0] - right[0] * s)
            polys.append(left[1] - right[1] * s)
        systems.append(ConstraintSystem(variables, tuple(polys), sigma, tuple(gauge),
                                        values, groups))
    return systems


def linear_block_minors(polys, block) -> list:
    """Maximal minors of the coefficient matrix of the members homogeneous
    linear in ``block``."""
    rows = []
    for q in polys:
        if q.terms and q.degree_in_set(block) == {1}:
            rows.append([q.coefficient_in(v, 1) for v in block])
    out = []
    m = len(block)
    for combo in itertools.combinations(rows, m):
        out.append(_det([list(r) for r in combo]))
    return out


def _det(matrix):
    if len(matrix) == 1:
        return matrix[0][0]
    if len(matrix) == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = None
    for j in range(len(matrix)):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# numerical helpers

def _term_scale(poly: MultiPoly, point) -> float:
    total = 0.0
    for e, c in poly.terms:
        m = abs(complex(c))
        for v, k in zip(point, e):
            if k:
                m *= abs(v) ** k
        total += m
    return total


def relative_residual(polys, point) -> float:
    worst = 0.0
    for q in polys:
        if not q.terms:
            continue
        val = abs(complex(q(point)))
        scale = _term_scale(q, point)
        worst = max(worst, val / scale if scale > 0 else val)
    return worst


class _Jacobian:
    """Vectorised values and Jacobian of a polynomial list.

    Every polynomial is flattened into one exponent matrix so a single
    ``prod(z ** E)`` evaluates all monomials at once.
    """

    def __init__(self, polys, variables):
        polys = [q for q in polys if q.terms]
        self.index = [polys[0].variables.index(v) for v in variables] if polys else []
        exps, coeffs, owner = [], [], []
        for r, q in enumerate(polys):
            for e, c in q.terms:
                exps.append(e)
                coeffs.append(complex(c))
                owner.append(r)
        nvars = len(polys[0].variables) if polys else 0
        self.E = np.array(exps, dtype=int).reshape(len(exps), nvars)
        self.c = np.array(coeffs, dtype=complex)
        self.S = np.zeros((len(polys), len(exps)))
        self.S[owner, np.arange(len(exps))] = 1.0
        self.dE, self.dc = [], []
        for k in self.index:
            col = self.E[:, k]
            dE = self.E.copy()
            dE[:, k] = np.maximum(col - 1, 0)
            self.dE.append(dE)
            self.dc.append(self.c * col)

    def _point(self, full, z):
        full = np.array(full, dtype=complex)
        for k, v in zip(self.index, z):
            full[k] = v
        return full

    def values(self, full, z):
        pt = self._point(full, z)
        return self.S @ (self.c * np.prod(pt[None, :] ** self.E, axis=1))

    def matrix(self, full, z):
        pt = self._point(full, z)
        cols = [self.S @ (dc * np.prod(pt[None, :] ** dE, axis=1))
                for dE, dc in zip(self.dE, self.dc)]
        return np.array(cols).T.reshape(self.S.shape[0], len(self.index))


def _gauss_newton(jac: _Jacobian, full, z, iters: int, damped: bool = True):
    """Damped Gauss-Newton; gives up when the residual stops shrinking."""
    z = np.array(z, dtype=complex)
    f = jac.values(full, z)
    norm = np.linalg.norm(f)
    history = [norm]
    for it in range(iters):
        if norm == 0:
            break
        J = jac.matrix(full, z)
        step = np.linalg.lstsq(J, -f, rcond=None)[0]
        lam = 1.0
        while True:
            z_new = z + lam * step
            f_new = jac.values(full, z_new)
            n_new = np.linalg.norm(f_new)
            if n_new < norm or not damped or lam < 1e-4:
                break
            lam /= 4
        if not n_new < norm:
            break
        small = np.linalg.norm(lam * step) <= 1e-16 * max(1.0, np.linalg.norm(z))
        z, f, norm = z_new, f_new, n_new
        history.append(norm)
        if small:
            break
        if it >= 12 and norm > 0.5 * history[-11]:
            break
    return z


# ---------------------------------------------------------------------------
# the solver

@dataclass
class _State:
    polys: list
    assigned: dict
    definitions: list = field(default_factory=list)
    handled: frozenset = frozenset()


class _Solver:
    def __init__(self, system: ConstraintSystem, opts: SolverOptions):
        self.system = system
        self.opts = opts
        self.variables = system.variables
        self.groups = system.nonzero_groups
        self.singletons = {g[0] for g in self.groups if len(g) == 1}
        self.rng = np.random.default_rng(opts.seed)

    # --- substitution -----------------------------------------------------
    def _subst(self, poly: MultiPoly, var, value):
        strict = poly.substitute(var, value, tol=1e-12)
        if strict.terms and strict.is_constant():
            loose = poly.substitute(var, value, tol=1e-8)
            if loose.is_zero():
                return loose
        return strict

    def _tidy(self, polys):
        """Drop zeros; return None on an inconsistent constant."""
        out = []
        for q in polys:
            if q.is_zero():
                continue
            if q.is_constant():
                return None
            content = q.monomial_content()
            if any(content[self.variables.index(v)] for v in self.singletons):
                strip = [c if self.variables[k] in self.singletons else 0
                         for k, c in enumerate(content)]
                q = q.divide_monomial(strip)
                if q.is_constant():
                    return None
            if q not in out:
                out.append(q)
        return out

    def _group_zero(self, assigned, var) -> bool:
        for g in self.groups:
            if var in g and all(v in assigned and assigned[v] == 0 for v in g):
                return True
        return False

    # --- recursion --------------------------------------------------------
    def solve(self):
        polys = list(self.system.polynomials)
        return self._solve(_State(polys, {}))

    def _assign(self, state: _State, var, value):
        polys = [self._subst(q, var, value) for q in state.polys]
        assigned = dict(state.assigned)
        assigned[var] = value
        return _State(polys, assigned, list(state.definitions), state.handled)

    def _solve(self, state: _State) -> list:
        polys = self._tidy(state.polys)
        if polys is None:
            return []
        state = _State(polys, state.assigned, state.definitions, state.handled)
        defined = {v for v, _ in state.definitions}
        open_vars = [v for v in self.variables if v not in state.assigned and v not in defined]

        if not polys:
            if open_vars:
                raise PositiveDimensional(f"free variables {open_vars}", open_vars)
            return [self._finish(state)]

        # a factor v^k with v possibly zero: branch
        for q in polys:
            content = q.monomial_content()
            for k, c in enumerate(content):
                v = self.variables[k]
                if c and v not in self.singletons:
                    others = [r for r in polys if r is not q]
                    out = []
                    zero_state = self._assign(_State(others + [q], state.assigned,
                                                     state.definitions, state.handled), v, 0)
                    if not self._group_zero(zero_state.assigned, v):
                        out += self._solve(zero_state)
                    exps = [0] * len(content)
                    exps[k] = c
                    out += self._solve(_State(others + [q.divide_monomial(exps)], state.assigned,
                                              state.definitions, state.handled))
                    return out

        # (1) univariate members
        uni = [q for q in polys if len(q.used_variables()) == 1]
        if uni:
            q = min(uni, key=lambda r: (r.total_degree(), len(r.terms)))
            var = q.used_variables()[0]
            same_var = [r for r in uni if r.used_variables() == (var,)]
            out = []
            for root in self._univariate_roots(q, same_var):
                if abs(root) <= 1e-10:
                    if var in self.singletons:
                        continue
                    root = 0
                nxt = self._assign(state, var, root)
                if root == 0 and self._group_zero(nxt.assigned, var):
                    continue
                out += self._solve(nxt)
            return out

        # (2) homogeneous linear block in a nonzero vector
        for group in self.groups:
            if len(group) < 2 or group in state.handled:
                continue
            if any(v in state.assigned or v in defined for v in group):
                continue
            minors = [m for m in linear_block_minors(polys, group) if not m.is_zero()]
            block_rows = sum(1 for q in polys if q.degree_in_set(group) == {1})
            if block_rows >= len(group):
                if any(m.is_constant() for m in minors):
                    return []
                return self._solve(_State(polys + minors, state.assigned, state.definitions,
                                          state.handled | {group}))

        # (3) a variable occurring linearly with constant coefficient
        best = None
        for q in polys:
            for v in q.used_variables():
                if q.degree(v) == 1:
                    coeff = q.coefficient_in(v, 1)
                    if coeff.is_constant() and not coeff.is_zero():
                        key = (len(q.terms), self.variables.index(v))
                        if best is None or key < best[0]:
                            best = (key, q, v, coeff.constant_value())
        if best is not None:
            _, q, v, c = best
            vv = MultiPoly.var(self.variables, v)
            expr = (vv * c - q).scale(1 / complex(c) if not isinstance(c, (int, GaussQ)) else GaussQ(1) / c)
            rest = [r.substitute(v, expr) for r in polys if r is not q]
            return self._solve(_State(rest, state.assigned, state.definitions + [(v, expr)],
                                      state.handled))

        # (4) multistart Newton on what is left
        return self._newton(state, polys, open_vars)

    def _univariate_roots(self, q: MultiPoly, companions):
        var = q.used_variables()[0]
        coeffs = q.univariate_coeffs(var)
        if q.is_exact():
            coeffs = _squarefree(coeffs)
        roots = aberth_roots(coeffs, self.opts.aberth_eps, self.opts.aberth_iter)
        comp = [r.to_complex() for r in companions]
        derivs = [r.derivative(var) for r in comp]
        k = self.variables.index(var)
        refined = []
        for z in roots:
            for _ in range(20):
                pt = [0j] * len(self.variables)
                pt[k] = z
                num, den = 0j, 0.0
                for r, d in zip(comp, derivs):
                    f, df = complex(r(pt)), complex(d(pt))
                    num += df.conjugate() * f
                    den += abs(df) ** 2
                if den == 0 or num == 0:
                    break
                step = num / den
                z -= step
                if abs(step) <= 1e-16 * max(1.0, abs(z)):
                    break
            if all(abs(z - w) > self.opts.merge_tol * max(1.0, abs(z)) for w in refined):
                refined.append(z)
        return refined

    def _newton(self, state: _State, polys, open_vars):
        used = sorted({v for q in polys for v in q.used_variables()}, key=self.variables.index)
        free = [v for v in open_vars if v not in used]
        if free:
            raise PositiveDimensional(f"free variables {free}", free)
        jac = _Jacobian(polys, used)
        base = [state.assigned.get(v, 0) for v in self.variables]
        found = []
        r = self.opts.newton_radius
        for _ in range(self.opts.newton_starts):
            grid = self.rng.integers(-64, 65, size=(len(used), 2)) / 16.0
            start = (grid[:, 0] + 1j * grid[:, 1]) * (r / 4.0) / np.sqrt(2)
            z = _gauss_newton(jac, base, start, self.opts.newton_iter)
            pt = list(jac._point(base, z))
            if relative_residual(polys, pt) > 1e-9:
                continue
            if all(np.linalg.norm(z - w) > self.opts.merge_tol * max(1.0, np.linalg.norm(z))
                   for w in found):
                found.append(z)
        out = []
        for z in found:
            J = jac.matrix(base, z)
            if np.linalg.matrix_rank(J, tol=1e-8 * max(1.0, np.abs(J).max())) < len(used):
                raise PositiveDimensional("Newton converged onto a positive-dimensional set",
                                          used, dict(zip(used, z)))
            assigned = dict(state.assigned)
            assigned.update(zip(used, (complex(v) for v in z)))
            out.append(self._finish(_State([], assigned, state.definitions, state.handled)))
        return out

    def _finish(self, state: _State) -> dict:
        assigned = dict(state.assigned)
        for v, expr in reversed(state.definitions):
            pt = [assigned.get(w, 0) for w in self.variables]
            assigned[v] = complex(expr(pt))
        return {v: complex(assigned.get(v, 0)) for v in self.variables}


def _squarefree(coeffs):
    """Exact square-free part of a univariate polynomial (highest degree first)."""
    p = [GaussQ.coerce(c) for c in coeffs]
    n = len(p) - 1
    if n < 2:
        return coeffs
    dp = [p[k] * (n - k) for k in range(n)]
    g = _poly_gcd(p, dp)
    if len(g) <= 1:
        return coeffs
    q, _ = _poly_divmod(p, g)
    return q


def _strip(p):
    k = 0
    while k < len(p) - 1 and p[k] == 0:
        k += 1
    return p[k:]


def _poly_divmod(a, b):
    a = _strip(list(a))
    b = _strip(list(b))
    if len(a) < len(b):
        return [GaussQ(0)], a
    q = [GaussQ(0)] * (len(a) - len(b) + 1)
    r = list(a)
    for k in range(len(q)):
        coef = r[k] / b[0]
        q[k] = coef
        for j in range(len(b)):
            r[k + j] = r[k + j] - coef * b[j]
    rem = _strip(r[len(q):]) if len(r) > len(q) else [GaussQ(0)]
    return q, rem


def _poly_gcd(a, b):
    a, b = _strip(a), _strip(b)
    while not (len(b) == 1 and b[0] == 0):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return a


def solve_system(system: ConstraintSystem, opts: SolverOptions | None = None) -> list:
    """Isolated solutions as ``(values, residual)`` pairs, values keyed by variable."""
    opts = opts or SolverOptions()
    if len(system.variables) > opts.max_vars:
        raise SolverError(f"{len(system.variables)} variables exceed the limit {opts.max_vars}")
    candidates = _Solver(system, opts).solve()
    polys = [q.to_complex() for q in system.polynomials if q.terms]
    variables = list(system.variables)
    jac = _Jacobian(polys, variables) if polys else None
    results, stalled = [], []
    for cand in candidates:
        z = np.array([cand[v] for v in variables])
        if jac is not None:
            z = _gauss_newton(jac, [0] * len(variables), z, 20, damped=False)
        point = [complex(v) for v in z]
        res = relative_residual(polys, point)
        if not all(np.isfinite(point)):
            continue
        if any(all(abs(point[variables.index(v)]) <= 1e-10 for v in g) for g in system.nonzero_groups):
            continue
        if res <= opts.tolerance:
            _merge(results, (dict(zip(variables, point)), res), opts.merge_tol)
        elif res <= opts.stall_tolerance:
            stalled.append((dict(zip(variables, point)), res))
    if stalled:
        raise SolverStalled(f"{len(stalled)} candidates stuck above the residual target",
                            results + stalled)
    return results


def _merge(results, item, tol):
    values, _ = item
    vec = np.array(list(values.values()))
    for other, _ in results:
        o = np.array(list(other.values()))
        if np.linalg.norm(vec - o) <= tol * max(1.0, np.linalg.norm(vec)):
            log.warning("merged two solutions closer than %g", tol)
            return
    results.append(item)


# ---------------------------------------------------------------------------
# fingerprints

def default_words(n: int, relators=()) -> list:
    """Generators, products of pairs, the product of all generators, the same
    product with all but the first reversed, then any relators."""
    words = [GroupWord(((i, 1),)) for i in range(n)]
    words += [GroupWord(((i, 1), (j, 1))) for i, j in itertools.combinations(range(n), 2)]
    if n >= 3:
        words.append(GroupWord(tuple((i, 1) for i in range(n))))
        words.append(GroupWord(((0, 1),) + tuple((i, 1) for i in range(n - 1, 0, -1))))
    words += list(relators)
    return words


def normalize_trace(z: complex, tol: float = 1e-9) -> complex:
    z = complex(z)
    if abs(z.real) <= tol * max(1.0, abs(z)):
        z = complex(0.0, z.imag)
        return z if z.imag >= 0 else -z
    return z if z.real > 0 else -z


def word_matrix(word: GroupWord, images):
    out = sl2.IDENTITY
    for g, e in word.letters:
        m = images[g]
        out = sl2.mul(out, m if e > 0 else sl2.inv(m))
    return out


def trace_fingerprint(images, words=None) -> tuple:
    """Sign-normalised traces of the images of ``words``.

    ``images`` is a list of 2x2 matrices indexed by generator.
    """
    if words is None:
        words = default_words(len(images))
    return tuple(normalize_trace(complex(sl2.trace(word_matrix(w, images)))) for w in words)


def coloring_fingerprint(values, words=None) -> tuple:
    return trace_fingerprint([matrix_of(v.pair if isinstance(v, ParabolicElement) else v)
                              for v in values], words)


def fingerprints_close(f1, f2, tol: float = 1e-8) -> bool:
    if len(f1) != len(f2):
        return False
    for a, b in zip(f1, f2):
        scale = max(1.0, abs(a), abs(b))
        if min(abs(a - b), abs(a + b)) > tol * scale:
            return False
    return True


def _fingerprint_key(fp):
    return tuple(v for z in fp for v in (round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0))


# ---------------------------------------------------------------------------
# pipeline

@dataclass
class RawSolution:
    branch: tuple
    gauge: tuple
    values: dict
    residual: float


@dataclass
class ColoringClass:
    generators: tuple            # ParabolicElement per simplified generator
    arcs: tuple                  # ParabolicElement per diagram arc
    fingerprint: tuple
    members: list                # indices into SolutionSet.raw
    conjugate: int | None = None


@dataclass
class SolutionSet:
    generator_names: tuple
    arc_names: tuple
    raw: list
    classes: list
    conjugate_pairs: list
    dropped_non_injective: int = 0
    dropped_reducible: int = 0
    warnings: list = field(default_factory=list)

    @property
    def has_conjugate_pair(self) -> bool:
        return bool(self.conjugate_pairs)


def _coloring_from_values(system: ConstraintSystem, values: dict):
    pt = [values[v] for v in system.variables]
    return [(complex(x(pt)), complex(y(pt))) for x, y in system.generator_values]


def _is_injective(elems, tol) -> bool:
    return not any(projective_eq(a, b, tol) for a, b in itertools.combinations(elems, 2))


def _is_reducible(elems, tol) -> bool:
    if len(elems) < 2:
        return False
    for a, b in itertools.combinations(elems, 2):
        scale = max(1.0, abs(complex(a.x)) + abs(complex(a.y))) * max(1.0, abs(complex(b.x)) + abs(complex(b.y)))
        if abs(complex(fixed_point_det(a, b))) > tol * scale:
            return False
    return True


def _relations_hold(p: QuandlePresentation, pairs, tol) -> bool:
    for lhs, rhs in p.relations:
        a = ParabolicElement(*evaluate_word(lhs, lambda k: pairs[k]))
        b = ParabolicElement(*evaluate_word(rhs, lambda k: pairs[k]))
        if not projective_eq(a, b, tol):
            return False
    return True


def _complete_sign_orbits(systems, found, opts: SolverOptions):
    """Close the raw solutions under sign changes of the free representatives.

    Negating ``t`` or a pair ``(x_k, y_k)`` does not change the coloring, so
    the flipped vector solves the system of some (possibly other) sign
    branch.  Adding these makes the raw list independent of which orbit
    members the numerical search happened to reach.
    """
    variables = list(systems[0].variables)
    groups = systems[0].nonzero_groups
    out = list(found)

    def known(values):
        vec = np.array([values[v] for v in variables])
        return any(np.linalg.norm(vec - np.array([o[v] for v in variables]))
                   <= opts.merge_tol * max(1.0, np.linalg.norm(vec)) for _, o, _ in out)

    for _, values, _ in found:
        for flips in itertools.product((False, True), repeat=len(groups)):
            if not any(flips):
                continue
            new = dict(values)
            for flip, g in zip(flips, groups):
                if flip:
                    for v in g:
                        new[v] = -new[v]
            if known(new):
                continue
            point = [new[v] for v in variables]
            for system in systems:
                polys = [q for q in system.polynomials if q.terms]
                res = relative_residual(polys, point)
                if res <= opts.tolerance:
                    out.append((system, new, res))
                    break
    index = {s.sign_branch: k for k, s in enumerate(systems)}
    out.sort(key=lambda item: index[item[0].sign_branch])
    return out


def enumerate_parabolic_colorings(target, opts: SolverOptions | None = None,
                                  gauges=None) -> SolutionSet:
    """All injective, irreducible parabolic colorings up to conjugacy.

    ``target`` is a diagram or a quandle presentation.  ``gauges`` lists the
    ordered generator pairs to pin (default: the first two); pass ``"all"``
    for every ordered pair.
    """
    opts = opts or SolverOptions()
    if isinstance(target, LinkDiagram):
        full = fundamental_quandle_presentation(target)
    else:
        full = target
    elim = eliminate_with_definitions(full)
    p = elim.presentation
    n = p.generator_count
    words = default_words(n)

    raw, entries, warnings = [], [], []
    if n == 1:
        pairs = [(1, 0)]
        if _relations_hold(p, pairs, opts.fingerprint_tol):
            raw.append(RawSolution((), (0,), {}, 0.0))
            entries.append((0, pairs))
    elif n >= 2:
        if gauges is None:
            gauges = [(0, 1)]
        elif gauges == "all":
            gauges = list(itertools.permutations(range(n), 2))
        for gauge in gauges:
            systems = build_systems(p, gauge, opts.max_branches)
            found = []
            for system in systems:
                found += [(system, values, res) for values, res in solve_system(system, opts)]
            for system, values, res in _complete_sign_orbits(systems, found, opts):
                raw.append(RawSolution(system.sign_branch, tuple(gauge), values, res))
                entries.append((len(raw) - 1, _coloring_from_values(system, values)))

    classes = []
    dropped_inj = dropped_red = 0
    for idx, pairs in entries:
        elems = [ParabolicElement(*pr) for pr in pairs]
        if not _is_injective(elems, opts.fingerprint_tol):
            dropped_inj += 1
            continue
        if _is_reducible(elems, opts.fingerprint_tol):
            dropped_red += 1
            continue
        fp = coloring_fingerprint(pairs, words)
        for cls in classes:
            if fingerprints_close(cls.fingerprint, fp, opts.fingerprint_tol):
                cls.members.append(idx)
                break
        else:
            gens = tuple(canonical_sign(e) for e in elems)
            arcs = tuple(canonical_sign(ParabolicElement(*evaluate_word(w, lambda k: pairs[k])))
                         for _, w in sorted(elim.definitions.items()))
            classes.append(ColoringClass(gens, arcs, fp, [idx]))

    classes.sort(key=lambda c: _fingerprint_key(c.fingerprint))
    pairs_found = []
    for i, ci in enumerate(classes):
        conj_fp = tuple(z.conjugate() for z in ci.fingerprint)
        for j, cj in enumerate(classes):
            if j != i and fingerprints_close(conj_fp, cj.fingerprint, opts.fingerprint_tol):
                ci.conjugate = j
                if i < j:
                    pairs_found.append((i, j))
                break
    return SolutionSet(tuple(p.generator_names), tuple(full.generator_names), raw, classes,
                       pairs_found, dropped_inj, dropped_red, warnings)

"""Finite quandles, colorings and the adjoint group.

A finite quandle is stored as an operation table with ``table[i][j] = i*j``.
A coloring of a diagram is a tuple indexed by arc id; a coloring of a
presentation is indexed by generator.  Colorings are always returned sorted.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .diagram import Handedness, LinkDiagram
from .errors import SearchSpaceTooLarge, SubsetNotClosed
from .groups import FiniteGroup
from .presentations import (
    GroupPresentation,
    GroupWord,
    QuandlePresentation,
    QuandleWord,
    fundamental_quandle_presentation,
)

SEARCH_LIMIT = 10 ** 7


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple


def verify_quandle(table) -> list:
    """All violated quandle axioms as ``Violation`` records (empty if none)."""
    n = len(table)
    out = []
    for i in range(n):
        if table[i][i] != i:
            out.append(Violation("idempotence", (i,)))
    for j in range(n):
        column = sorted(table[i][j] for i in range(n))
        if column != list(range(n)):
            out.append(Violation("right-invertibility", (j,)))
    for i, j, k in itertools.product(range(n), repeat=3):
        try:
            if table[table[i][j]][k] != table[table[i][k]][table[j][k]]:
                out.append(Violation("self-distributivity", (i, j, k)))
        except IndexError:
            out.append(Violation("range", (i, j, k)))
    return out


@dataclass(frozen=True)
class FiniteQuandle:
    table: tuple
    name: str = ""

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if any(len(row) != n for row in table) or any(not 0 <= v < n for r in table for v in r):
            raise ValueError("quandle table must be square with entries in range")
        inv = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                inv[table[i][j]][j] = i
        object.__setattr__(self, "_inv", tuple(map(tuple, inv)))

    @property
    def n(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def op_inv(self, a: int, b: int) -> int:
        """``a *^-1 b``: the ``c`` with ``c * b = a``."""
        return self._inv[a][b]

    def is_quandle(self) -> bool:
        return not verify_quandle(self.table)

    def to_dict(self) -> dict:
        return {"name": self.name, "n": self.n, "table": [list(r) for r in self.table]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def quandle_from_json(text: str) -> FiniteQuandle:
    data = json.loads(text)
    table = data["table"] if isinstance(data, dict) else data
    return FiniteQuandle(tuple(map(tuple, table)), data.get("name", "") if isinstance(data, dict) else "")


# ---------------------------------------------------------------------------
# standard families

def make_trivial(n: int) -> FiniteQuandle:
    return FiniteQuandle(tuple(tuple(i for _ in range(n)) for i in range(n)), f"trivial:{n}")


def make_dihedral(n: int) -> FiniteQuandle:
    return FiniteQuandle(tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n)),
                         f"dihedral:{n}")


def make_eisermann(m: int, n: int) -> FiniteQuandle:
    """Disjoint union of Z_m and Z_n: trivial within a part, ``a+1`` across.

    Elements ``0..m-1`` form Z_m and ``m..m+n-1`` form Z_n; the increment is
    taken modulo the size of the part containing ``a``.
    """
    if m < 1 or n < 1:
        raise ValueError("Eisermann quandle needs m, n >= 1")
    size = m + n

    def part(a):
        return 0 if a < m else 1

    def prod(a, b):
        if part(a) == part(b):
            return a
        if a < m:
            return (a + 1) % m
        return m + (a - m + 1) % n

    return FiniteQuandle(tuple(tuple(prod(a, b) for b in range(size)) for a in range(size)),
                         f"eisermann:{m},{n}")


def make_conj(group: FiniteGroup, subset=None, n_fold: int = 1) -> FiniteQuandle:
    """``x * y = y^-n x y^n`` on a conjugation-closed subset of ``group``.

    Quandle element ``i`` is group element ``subset[i]`` (all of the group by
    default).
    """
    elems = list(range(group.order)) if subset is None else list(subset)
    index = {g: i for i, g in enumerate(elems)}
    if len(index) != len(elems):
        raise ValueError("subset has repeated elements")
    for s in elems:
        for g in range(group.order):
            conj = group.mul(group.mul(group.inverse(g), s), g)
            if conj not in index:
                raise SubsetNotClosed(f"conjugate of {s} by {g} leaves the subset")

    def prod(x, y):
        yn = group.power(y, n_fold)
        return group.mul(group.mul(group.inverse(yn), x), yn)

    table = tuple(tuple(index[prod(x, y)] for y in elems) for x in elems)
    return FiniteQuandle(table, f"conj{n_fold}({group.name or 'G'})")


def all_quandles(n: int) -> list:
    """Every quandle structure on ``{0..n-1}`` (labelled, not up to isomorphism)."""
    column_choices = []
    for j in range(n):
        column_choices.append([p for p in itertools.permutations(range(n)) if p[j] == j])
    out = []
    for cols in itertools.product(*column_choices):
        table = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        ok = all(table[table[i][j]][k] == table[table[i][k]][table[j][k]]
                 for i, j, k in itertools.product(range(n), repeat=3))
        if ok:
            out.append(FiniteQuandle(table))
    return out


# ---------------------------------------------------------------------------
# colorings

def _assign_from(word: QuandleWord, target: int, known: dict, q: FiniteQuandle):
    """If ``word`` has exactly one unknown leaf reachable along the left spine,
    return ``(gen, value)`` forcing ``word = target``."""
    while not word.is_leaf:
        rv = _value(word.right, known, q)
        if rv is None:
            return None
        target = q.op(target, rv) if word.inverse else q.op_inv(target, rv)
        word = word.left
    if word.gen in known:
        return None
    return word.gen, target


def _value(word: QuandleWord, known: dict, q: FiniteQuandle):
    if word.is_leaf:
        return known.get(word.gen)
    lv = _value(word.left, known, q)
    if lv is None:
        return None
    rv = _value(word.right, known, q)
    if rv is None:
        return None
    return q.op_inv(lv, rv) if word.inverse else q.op(lv, rv)


def _propagate(relations, known: dict, q: FiniteQuandle) -> bool:
    """Extend ``known`` by forced values; False on a contradiction."""
    changed = True
    while changed:
        changed = False
        for lhs, rhs in relations:
            lv, rv = _value(lhs, known, q), _value(rhs, known, q)
            if lv is not None and rv is not None:
                if lv != rv:
                    return False
                continue
            forced = None
            if lv is not None:
                forced = _assign_from(rhs, lv, known, q)
            elif rv is not None:
                forced = _assign_from(lhs, rv, known, q)
            if forced is not None:
                known[forced[0]] = forced[1]
                changed = True
    return True


def _generator_order(relations, n):
    """Most-constrained first, then breadth-first through shared relations."""
    degree = [0] * n
    for lhs, rhs in relations:
        for g in lhs.generators() | rhs.generators():
            degree[g] += 1
    order, seen = [], set()
    for start in sorted(range(n), key=lambda g: (-degree[g], g)):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            g = queue.pop(0)
            order.append(g)
            for lhs, rhs in relations:
                gens = lhs.generators() | rhs.generators()
                if g in gens:
                    for h in sorted(gens - seen):
                        seen.add(h)
                        queue.append(h)
    return order


def enumerate_colorings(target, q: FiniteQuandle) -> list:
    """All quandle morphisms from a diagram's (or presentation's) quandle to ``q``."""
    p = fundamental_quandle_presentation(target) if isinstance(target, LinkDiagram) else target
    n = p.generator_count
    relations = list(p.relations)
    order = _generator_order(relations, n)
    results = []

    def search(known):
        if not _propagate(relations, known, q):
            return
        free = next((g for g in order if g not in known), None)
        if free is None:
            results.append(tuple(known[g] for g in range(n)))
            return
        for v in range(q.n):
            trial = dict(known)
            trial[free] = v
            search(trial)

    search({})
    return sorted(set(results))


def coloring_is_valid(d: LinkDiagram, q: FiniteQuandle, coloring) -> bool:
    for c in d.crossings:
        expect = q.op(coloring[c.under_in], coloring[c.over])
        if c.handedness is Handedness.LEFT:
            expect = q.op_inv(coloring[c.under_in], coloring[c.over])
        if coloring[c.under_out] != expect:
            return False
    return True


def is_tricolorable(d: LinkDiagram) -> bool:
    return any(len(set(col)) == 3 for col in enumerate_colorings(d, make_dihedral(3)))


# ---------------------------------------------------------------------------
# adjoint group and hom counting

def adjoint_presentation(q: FiniteQuandle) -> GroupPresentation:
    """Generators are the elements; relators ``(a*b) b^-1 a^-1 b`` for all pairs."""
    relators = []
    for a in range(q.n):
        for b in range(q.n):
            relators.append(GroupWord(((q.op(a, b), 1), (b, -1), (a, -1), (b, 1))))
    return GroupPresentation(tuple(str(i) for i in range(q.n)), tuple(relators))


def _quandle_as_presentation(q: FiniteQuandle) -> QuandlePresentation:
    leaf = QuandleWord.leaf
    relations = tuple((leaf(a).star(leaf(b)), leaf(q.op(a, b)))
                      for a in range(q.n) for b in range(q.n))
    return QuandlePresentation(tuple(str(i) for i in range(q.n)), relations)


def count_quandle_homs(q: FiniteQuandle, group: FiniteGroup, n_fold: int = 1) -> int:
    """``|Hom(q, Conj_n(group))|`` by exhaustive backtracking."""
    if group.order ** q.n > SEARCH_LIMIT:
        raise SearchSpaceTooLarge(f"{group.order}^{q.n} assignments exceed {SEARCH_LIMIT}")
    conj = make_conj(group, None, n_fold)
    return len(enumerate_colorings(_quandle_as_presentation(q), conj))


def _word_value(word: GroupWord, assignment, group: FiniteGroup):
    out = group.identity
    for g, e in word.letters:
        x = assignment[g]
        out = group.mul(out, x if e > 0 else group.inverse(x))
    return out


def count_group_homs(p: GroupPresentation, group: FiniteGroup) -> int:
    """Number of homomorphisms from the presented group to ``group``."""
    n = p.generator_count
    if group.order ** n > SEARCH_LIMIT:
        raise SearchSpaceTooLarge(f"{group.order}^{n} assignments exceed {SEARCH_LIMIT}")
    # check each relator as soon as its last generator is assigned
    ready = [[] for _ in range(n)]
    for r in p.relators:
        if r.letters:
            ready[max(r.generators())].append(r)
    e = group.identity
    count = 0

    def search(assignment):
        nonlocal count
        k = len(assignment)
        if k == n:
            count += 1
            return
        for v in range(group.order):
            assignment.append(v)
            if all(_word_value(r, assignment, group) == e for r in ready[k]):
                search(assignment)
            assignment.pop()

    search([])
    return count


# ---------------------------------------------------------------------------
# inner automorphisms and the adjoint action

def inner_group(q: FiniteQuandle) -> set:
    """The group generated by the right translations, as permutation tuples."""
    gens = [tuple(q.op(x, y) for x in range(q.n)) for y in range(q.n)]
    identity = tuple(range(q.n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                comp = tuple(g[p[x]] for x in range(q.n))
                if comp not in seen:
                    seen.add(comp)
                    nxt.append(comp)
        frontier = nxt
    return seen


def act_right(x: int, word, q: FiniteQuandle) -> int:
    """Apply ``*^e1 x1``, then ``*^e2 x2``, ... to ``x``."""
    for y, e in word:
        x = q.op(x, y) if e > 0 else q.op_inv(x, y)
    return x

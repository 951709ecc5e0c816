"""Group and quandle presentations of link diagrams.

Group words are tuples of ``(generator, exponent)`` letters with exponents
``+1``/``-1``.  Quandle words are binary trees whose internal nodes are ``*``
or ``*^-1``.

Wirtinger relators, with ``u`` the incoming under-arc, ``u1`` the outgoing
one and ``o`` the over-arc::

    RIGHT:  u1 o u^-1 o^-1      (u1 = o u o^-1)
    LEFT:   o u1 o^-1 u^-1      (u = o u1 o^-1)

Fundamental quandle relations: ``u * o ~ u1`` at a RIGHT crossing and
``u1 * o ~ u`` at a LEFT one, so no ``*^-1`` ever appears in the raw
presentation.  Commutators are ``[x, y] = x y x^-1 y^-1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .diagram import Handedness, LinkDiagram


# ---------------------------------------------------------------------------
# group words

@dataclass(frozen=True)
class GroupWord:
    letters: tuple = ()

    @classmethod
    def of(cls, *letters) -> GroupWord:
        """``GroupWord.of(0, (1, -1))``: bare ints mean exponent +1."""
        out = []
        for item in letters:
            if isinstance(item, int):
                out.append((item, 1))
            else:
                out.append((int(item[0]), int(item[1])))
        return cls(tuple(out))

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self.letters + other.letters).reduced()

    def inverse(self) -> GroupWord:
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def reduced(self) -> GroupWord:
        stack = []
        for g, e in self.letters:
            if stack and stack[-1] == (g, -e):
                stack.pop()
            else:
                stack.append((g, e))
        return GroupWord(tuple(stack))

    def cyclically_reduced(self) -> GroupWord:
        letters = list(self.reduced().letters)
        while len(letters) >= 2 and letters[0] == (letters[-1][0], -letters[-1][1]):
            letters = letters[1:-1]
        return GroupWord(tuple(letters))

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def count(self, g: int) -> int:
        return sum(1 for h, _ in self.letters if h == g)

    def substitute(self, mapping: dict) -> GroupWord:
        """Replace generator ``g`` by the word ``mapping[g]``."""
        out = []
        for g, e in self.letters:
            if g in mapping:
                w = mapping[g]
                out.extend(w.letters if e > 0 else w.inverse().letters)
            else:
                out.append((g, e))
        return GroupWord(tuple(out)).reduced()

    def renumber(self, index: dict) -> GroupWord:
        return GroupWord(tuple((index[g], e) for g, e in self.letters))

    def exponent_sums(self, n: int) -> list:
        row = [0] * n
        for g, e in self.letters:
            row[g] += e
        return row

    def to_str(self, names) -> str:
        if not self.letters:
            return "1"
        return " ".join(names[g] if e > 0 else f"{names[g]}^-1" for g, e in self.letters)


def parse_group_word(text: str, names) -> GroupWord:
    """Parse ``"C a C^-1 A^-1"`` against the generator name list."""
    index = {n: k for k, n in enumerate(names)}
    letters = []
    for tok in text.split():
        if tok == "1":
            continue
        name, exp = (tok[:-3], -1) if tok.endswith("^-1") else (tok, 1)
        if name not in index:
            raise ValueError(f"unknown generator {name!r} in word {text!r}")
        letters.append((index[name], exp))
    return GroupWord(tuple(letters))


def commutator(x: GroupWord, y: GroupWord) -> GroupWord:
    return (x * y * x.inverse() * y.inverse()).reduced()


def same_relator(r: GroupWord, s: GroupWord) -> bool:
    """Equality up to free/cyclic reduction, cyclic rotation and inversion."""
    a = r.cyclically_reduced().letters
    b = s.cyclically_reduced().letters
    if len(a) != len(b):
        return False
    if not a:
        return True
    b_inv = GroupWord(b).inverse().letters
    for k in range(len(a)):
        rot = a[k:] + a[:k]
        if rot == b or rot == b_inv:
            return True
    return False


@dataclass(frozen=True)
class GroupPresentation:
    generator_names: tuple
    relators: tuple = ()

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    def relator_strings(self) -> list:
        return [r.to_str(self.generator_names) for r in self.relators]


# ---------------------------------------------------------------------------
# quandle words

@dataclass(frozen=True)
class QuandleWord:
    """A leaf (``gen`` set) or a node ``left * right`` / ``left *^-1 right``."""

    gen: int | None = None
    left: QuandleWord | None = None
    right: QuandleWord | None = None
    inverse: bool = False

    @classmethod
    def leaf(cls, g: int) -> QuandleWord:
        return cls(gen=g)

    def star(self, other: QuandleWord) -> QuandleWord:
        return QuandleWord(left=self, right=other)

    def star_inv(self, other: QuandleWord) -> QuandleWord:
        return QuandleWord(left=self, right=other, inverse=True)

    @property
    def is_leaf(self) -> bool:
        return self.gen is not None

    def generators(self) -> set:
        if self.is_leaf:
            return {self.gen}
        return self.left.generators() | self.right.generators()

    def substitute(self, mapping: dict) -> QuandleWord:
        if self.is_leaf:
            return mapping.get(self.gen, self)
        return QuandleWord(left=self.left.substitute(mapping),
                           right=self.right.substitute(mapping), inverse=self.inverse)

    def renumber(self, index: dict) -> QuandleWord:
        return self.substitute({g: QuandleWord.leaf(i) for g, i in index.items()})

    def evaluate(self, value_of, op, op_inv):
        """Fold the tree with ``value_of(gen)`` at leaves."""
        if self.is_leaf:
            return value_of(self.gen)
        lv = self.left.evaluate(value_of, op, op_inv)
        rv = self.right.evaluate(value_of, op, op_inv)
        return op_inv(lv, rv) if self.inverse else op(lv, rv)

    def to_str(self, names) -> str:
        if self.is_leaf:
            return names[self.gen]
        sym = "*^-1" if self.inverse else "*"
        return f"({self.left.to_str(names)}{sym}{self.right.to_str(names)})"


@dataclass(frozen=True)
class QuandlePresentation:
    generator_names: tuple
    relations: tuple = ()

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    def relation_strings(self) -> list:
        return [f"{lhs.to_str(self.generator_names)} = {rhs.to_str(self.generator_names)}"
                for lhs, rhs in self.relations]


# ---------------------------------------------------------------------------
# presentations of diagrams

def wirtinger_presentation(d: LinkDiagram) -> GroupPresentation:
    relators = []
    for c in d.crossings:
        u, o, u1 = c.under_in, c.over, c.under_out
        if c.handedness is Handedness.RIGHT:
            relators.append(GroupWord(((u1, 1), (o, 1), (u, -1), (o, -1))))
        else:
            relators.append(GroupWord(((o, 1), (u1, 1), (o, -1), (u, -1))))
    return GroupPresentation(tuple(d.arc_names), tuple(relators))


def fundamental_quandle_presentation(d: LinkDiagram) -> QuandlePresentation:
    leaf = QuandleWord.leaf
    relations = []
    for c in d.crossings:
        if c.handedness is Handedness.RIGHT:
            relations.append((leaf(c.under_in).star(leaf(c.over)), leaf(c.under_out)))
        else:
            relations.append((leaf(c.under_out).star(leaf(c.over)), leaf(c.under_in)))
    return QuandlePresentation(tuple(d.arc_names), tuple(relations))


# ---------------------------------------------------------------------------
# Tietze elimination

@dataclass(frozen=True)
class Elimination:
    """Result of eliminating generators.

    ``kept[i]`` is the original index of new generator ``i``;
    ``definitions[g]`` expresses original generator ``g`` as a word in the new
    generators (a bare leaf for kept ones).
    """

    presentation: object
    kept: tuple
    definitions: dict


def _quandle_pick(relations):
    for k, (lhs, rhs) in enumerate(relations):
        candidates = []
        if rhs.is_leaf and rhs.gen not in lhs.generators():
            candidates.append((rhs.gen, lhs, 1))
        if lhs.is_leaf and lhs.gen not in rhs.generators():
            candidates.append((lhs.gen, rhs, 0))
        if candidates:
            if lhs.is_leaf and rhs.is_leaf:
                g, w, _ = max(candidates, key=lambda c: c[0])
            else:
                g, w, _ = max(candidates, key=lambda c: c[2])
            return k, g, w
    return None


def _group_pick(relators):
    for k, r in enumerate(relators):
        once = [g for g in r.generators() if r.count(g) == 1]
        if once:
            g = max(once)
            pos = next(i for i, (h, _) in enumerate(r.letters) if h == g)
            e = r.letters[pos][1]
            before = GroupWord(r.letters[:pos])
            after = GroupWord(r.letters[pos + 1:])
            # before * g^e * after = 1
            value = (before.inverse() * after.inverse()).reduced()
            if e < 0:
                value = value.inverse()
            return k, g, value
    return None


def eliminate_with_definitions(p) -> Elimination:
    """Eliminate generators defined by a relation ``g ~ W`` (or relator ``g W``).

    Relations are scanned in order and the first usable one is applied; the
    scan restarts after each substitution.  Tautologies are dropped.
    """
    n = p.generator_count
    is_group = isinstance(p, GroupPresentation)
    defs = {}
    if is_group:
        items = [r.cyclically_reduced() for r in p.relators]
        items = [r for r in items if r.letters]
    else:
        items = [(lhs, rhs) for lhs, rhs in p.relations if lhs != rhs]
    while True:
        pick = _group_pick(items) if is_group else _quandle_pick(items)
        if pick is None:
            break
        k, g, word = pick
        items = items[:k] + items[k + 1:]
        sub = {g: word}
        defs = {h: w.substitute(sub) for h, w in defs.items()}
        defs[g] = word
        if is_group:
            items = [r.substitute(sub).cyclically_reduced() for r in items]
            items = [r for r in items if r.letters]
        else:
            items = [(lhs.substitute(sub), rhs.substitute(sub)) for lhs, rhs in items]
            items = [(lhs, rhs) for lhs, rhs in items if lhs != rhs]

    kept = tuple(g for g in range(n) if g not in defs)
    index = {g: i for i, g in enumerate(kept)}
    names = tuple(p.generator_names[g] for g in kept)
    definitions = {}
    for g in range(n):
        if g in index:
            definitions[g] = GroupWord(((index[g], 1),)) if is_group else QuandleWord.leaf(index[g])
        else:
            definitions[g] = defs[g].renumber(index)
    if is_group:
        new = GroupPresentation(names, tuple(r.renumber(index) for r in items))
    else:
        new = QuandlePresentation(names, tuple((lhs.renumber(index), rhs.renumber(index))
                                               for lhs, rhs in items))
    return Elimination(new, kept, definitions)


def eliminate_generators(p):
    return eliminate_with_definitions(p).presentation


# ---------------------------------------------------------------------------
# abelianization

def abelianization_rank(p: GroupPresentation) -> int:
    """Free rank of the abelianization: generators minus rank of exponent sums."""
    n = p.generator_count
    rows = [[Fraction(v) for v in r.exponent_sums(n)] for r in p.relators]
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return n - rank


# ---------------------------------------------------------------------------
# JSON

def presentation_to_dict(p) -> dict:
    if isinstance(p, GroupPresentation):
        return {"kind": "group", "generators": list(p.generator_names),
                "relators": p.relator_strings()}
    return {"kind": "quandle", "generators": list(p.generator_names),
            "relations": p.relation_strings()}


def presentation_to_json(p) -> str:
    return json.dumps(presentation_to_dict(p), sort_keys=True)

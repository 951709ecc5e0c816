"""Finite groups given by multiplication tables."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass


@dataclass(frozen=True)
class FiniteGroup:
    """Elements ``0..n-1`` with ``table[i][j] = i*j``."""

    table: tuple
    name: str = ""

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", table)
        problems = group_axiom_violations(table)
        if problems:
            raise ValueError(f"not a group table: {problems[0]}")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        n = self.order
        return next(e for e in range(n) if all(self.table[e][x] == x for x in range(n)))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        e = self.identity
        return next(b for b in range(self.order) if self.table[a][b] == e)

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse(a), -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][a]
        return out

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "table": [list(r) for r in self.table]})


def group_axiom_violations(table) -> list:
    n = len(table)
    if any(len(row) != n for row in table):
        return ["table is not square"]
    if any(not 0 <= v < n for row in table for v in row):
        return ["entry out of range"]
    ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ids:
        return ["no identity element"]
    e = ids[0]
    out = []
    for a in range(n):
        if not any(table[a][b] == e and table[b][a] == e for b in range(n)):
            out.append(f"element {a} has no inverse")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            out.append(f"associativity fails at {(a, b, c)}")
            break
    return out


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)), f"Z{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """Permutations in lexicographic order; product ``(p*q)(x) = p(q(x))``."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return FiniteGroup(tuple(map(tuple, table)), f"S{n}")


def group_from_json(text: str) -> FiniteGroup:
    data = json.loads(text)
    if isinstance(data, list):
        return FiniteGroup(tuple(map(tuple, data)))
    return FiniteGroup(tuple(map(tuple, data["table"])), data.get("name", ""))

"""Shared, cached Reidemeister sweep used by the invariance and acceptance tests."""

import functools
import itertools

from linkquandle.diagram import BUILTIN_NAMES, apply_reidemeister, builtin, is_planar, reidemeister_sites, serialize_pd
from linkquandle.quandles import enumerate_colorings

from conftest import small_quandles

QUANDLES = small_quandles()
MOVES = ("R1+", "R2+", "R1-", "R2-", "R3")


def _canonical(table):
    n = len(table)
    return min(tuple(tuple(p[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
               for p in itertools.permutations(range(n))
               for inv in [{v: i for i, v in enumerate(p)}])


def _representatives():
    seen, reps = set(), []
    for q in QUANDLES:
        key = _canonical(q.table) if q.n <= 4 else (q.name,)
        if key not in seen:
            seen.add(key)
            reps.append(q)
    return reps


# one quandle per isomorphism class up to order 4, plus the order 5 and 6 ones
REPS = _representatives()

_counts = {}


def counts(d):
    key = serialize_pd(d)
    if key not in _counts:
        _counts[key] = tuple(len(enumerate_colorings(d, q)) for q in REPS)
    return _counts[key]


@functools.lru_cache(maxsize=None)
def planar_moves(name):
    """Diagrams one planar R1+/R2+ away from the built-in, and the diagrams
    reached from those by R1-, R2- and R3 (as ``(before, after)`` pairs)."""
    d = builtin(name)
    out = {m: [] for m in MOVES}
    for move in ("R1+", "R2+"):
        for site in reidemeister_sites(d, move):
            e = apply_reidemeister(d, move, site)
            if is_planar(e):
                out[move].append(e)
    for e in out["R1+"] + out["R2+"]:
        for move in ("R1-", "R2-", "R3"):
            for site in reidemeister_sites(e, move):
                f = apply_reidemeister(e, move, site)
                if is_planar(f):
                    out[move].append((e, f))
    return out


def moved_diagrams(name, move):
    return [x[1] if isinstance(x, tuple) else x for x in planar_moves(name)[move]]


def invariance_failures(names=BUILTIN_NAMES, moves=MOVES):
    """``(name, move, pd)`` for every moved diagram whose counts differ."""
    bad = []
    for name in names:
        base = counts(builtin(name))
        for move in moves:
            for e in moved_diagrams(name, move):
                if counts(e) != base:
                    bad.append((name, move, serialize_pd(e)))
    return bad


def sites_checked(names=BUILTIN_NAMES):
    return {m: sum(len(planar_moves(n)[m]) for n in names) for m in MOVES}

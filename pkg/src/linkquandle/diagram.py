"""Oriented link diagrams in planar-diagram (PD) notation.

Conventions
-----------
A crossing is written ``X[a,b,c,d]``: the four edge labels in
counterclockwise order, starting with the incoming under-strand.  So ``a`` is
the incoming under edge and ``c`` the outgoing one; ``b`` and ``d`` belong to
the over-strand.  Edge labels are segments between consecutive crossings;
arcs are the maximal strands between two undercrossings, i.e. unions of edges
glued across overpasses.

Handedness is read from the direction of the over-strand.  With the under
strand pointing "north", ``d`` sits on the west and ``b`` on the east:

* RIGHT  (positive, right-hand rule): the over-strand runs ``d -> b``.
* LEFT   (negative): the over-strand runs ``b -> d``.

Crossing relations follow the arc on the right of the over-strand: at a RIGHT
crossing ``under_out = under_in * over``, at a LEFT crossing
``under_out = under_in *^-1 over``.

Worked example, the trefoil ``X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]``.  Edge 1
enters crossing 0 from below and leaves crossing 1 as its ``d`` slot, so at
crossing 1 the over-strand runs ``b=6 -> d=1``: LEFT.  The same holds at the
other two crossings, so this trefoil has three LEFT crossings and arcs
``{1,6}``, ``{2,3}``, ``{4,5}``.

Arc ``k`` is the arc that begins (as the outgoing under-strand) at crossing
``k``.  Components that never pass under anything form one closed arc each and
are numbered after those, followed by crossingless loops.

The text format also accepts a bare ``O`` token for a crossingless unknotted
component, so that the unknot and split unions with it can be written down.
"""

from __future__ import annotations

import collections
import enum
import itertools
import re
import string
from dataclasses import dataclass, field

from .errors import EmptyDiagram, InconsistentArcs, InvalidSite, MalformedCode

UNDER_IN, OVER_B, UNDER_OUT, OVER_D = 0, 1, 2, 3


class Handedness(enum.Enum):
    RIGHT = 1
    LEFT = -1

    def flipped(self) -> Handedness:
        return Handedness.LEFT if self is Handedness.RIGHT else Handedness.RIGHT


@dataclass(frozen=True)
class Crossing:
    over: int
    under_in: int
    under_out: int
    handedness: Handedness


class _UnionFind:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _default_names(n):
    if n <= len(string.ascii_lowercase):
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"x{i}" for i in range(n))


@dataclass(frozen=True)
class LinkDiagram:
    """An oriented link diagram.

    ``pd`` holds the crossings with edge labels renumbered ``0..E-1`` by
    first appearance; ``loops`` counts crossingless components.  Everything
    else (arcs, crossings, components) is derived on construction.
    """

    pd: tuple
    loops: int = 0
    arc_names: tuple | None = None
    arc_count: int = field(init=False, compare=False)
    crossings: tuple = field(init=False, compare=False, repr=False)
    component_of_arc: tuple = field(init=False, compare=False, repr=False)
    edge_arc: dict = field(init=False, compare=False, repr=False)
    edge_head: dict = field(init=False, compare=False, repr=False)
    edge_tail: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        pd = tuple(tuple(int(v) for v in x) for x in self.pd)
        object.__setattr__(self, "pd", pd)
        info = _analyse(pd, self.loops)
        for key, value in info.items():
            object.__setattr__(self, key, value)
        if self.arc_names is None:
            object.__setattr__(self, "arc_names", _default_names(self.arc_count))
        elif len(self.arc_names) != self.arc_count:
            raise ValueError("arc_names must name every arc")
        else:
            object.__setattr__(self, "arc_names", tuple(self.arc_names))

    @property
    def component_count(self) -> int:
        return len(set(self.component_of_arc))

    @property
    def edge_count(self) -> int:
        return 2 * len(self.pd)

    def same_diagram(self, other: LinkDiagram) -> bool:
        """Equality of the combinatorial data, ignoring arc names and edge labels."""
        return _relabelled(self.pd) == _relabelled(other.pd) and self.loops == other.loops

    def with_names(self, names) -> LinkDiagram:
        return LinkDiagram(self.pd, self.loops, tuple(names))


def _relabelled(pd):
    """Rename edge labels 0, 1, ... in order of first appearance."""
    index = {}
    for x in pd:
        for lab in x:
            index.setdefault(lab, len(index))
    return tuple(tuple(index[lab] for lab in x) for x in pd)


def _analyse(pd, loops):
    occurrences = {}
    for ci, x in enumerate(pd):
        if len(x) != 4:
            raise MalformedCode(f"crossing {ci} does not have four labels")
        for pos, label in enumerate(x):
            occurrences.setdefault(label, []).append((ci, pos))
    bad = {lab: len(occ) for lab, occ in occurrences.items() if len(occ) != 2}
    if bad:
        lab, cnt = sorted(bad.items())[0]
        raise InconsistentArcs(f"edge label {lab} used {cnt} times (expected 2)")
    if sorted(occurrences) != list(range(len(occurrences))):
        raise InconsistentArcs("edge labels are not contiguous")

    # role[(ci, pos)] is True for an incoming slot, False for outgoing
    role = {}
    for ci in range(len(pd)):
        role[(ci, UNDER_IN)] = True
        role[(ci, UNDER_OUT)] = False

    def other_occ(ci, pos):
        a, b = occurrences[pd[ci][pos]]
        return b if a == (ci, pos) else a

    def settle(slot, incoming, queue):
        if slot in role:
            if role[slot] != incoming:
                lab = pd[slot[0]][slot[1]]
                raise InconsistentArcs(f"edge label {lab} cannot be oriented consistently")
            return
        role[slot] = incoming
        queue.append(slot)

    queue = list(role)
    pending = [ci for ci in range(len(pd))]
    while True:
        while queue:
            ci, pos = queue.pop()
            settle(other_occ(ci, pos), not role[(ci, pos)], queue)
            if pos in (OVER_B, OVER_D):
                partner = OVER_D if pos == OVER_B else OVER_B
                settle((ci, partner), not role[(ci, pos)], queue)
        unresolved = [ci for ci in pending if (ci, OVER_B) not in role]
        if not unresolved:
            break
        # a component that only ever passes over: orient it d -> b
        ci = unresolved[0]
        settle((ci, OVER_D), True, queue)

    edge_head, edge_tail = {}, {}
    for (ci, pos), incoming in role.items():
        (edge_head if incoming else edge_tail)[pd[ci][pos]] = (ci, pos)

    arcs = _UnionFind(occurrences)
    comps = _UnionFind(occurrences)
    for x in pd:
        arcs.union(x[OVER_B], x[OVER_D])
        comps.union(x[OVER_B], x[OVER_D])
        comps.union(x[UNDER_IN], x[UNDER_OUT])

    arc_of_root = {}
    for ci, x in enumerate(pd):
        arc_of_root[arcs.find(x[UNDER_OUT])] = ci
    order = [lab for x in pd for lab in x]
    for lab in order:
        root = arcs.find(lab)
        if root not in arc_of_root:
            arc_of_root[root] = len(arc_of_root)
    edge_arc = {lab: arc_of_root[arcs.find(lab)] for lab in occurrences}
    n_arcs = len(arc_of_root)

    comp_index = {}
    for lab in order:
        comp_index.setdefault(comps.find(lab), len(comp_index))
    component_of_arc = [None] * n_arcs
    for lab in occurrences:
        component_of_arc[edge_arc[lab]] = comp_index[comps.find(lab)]
    n_comp = len(comp_index)
    for k in range(loops):
        component_of_arc.append(n_comp + k)

    crossings = []
    for ci, x in enumerate(pd):
        hand = Handedness.RIGHT if role[(ci, OVER_D)] else Handedness.LEFT
        crossings.append(Crossing(
            over=edge_arc[x[OVER_B]],
            under_in=edge_arc[x[UNDER_IN]],
            under_out=edge_arc[x[UNDER_OUT]],
            handedness=hand,
        ))
    return dict(
        arc_count=n_arcs + loops,
        crossings=tuple(crossings),
        component_of_arc=tuple(component_of_arc),
        edge_arc=edge_arc,
        edge_head=edge_head,
        edge_tail=edge_tail,
    )


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(X\s*\[[^\]]*\])|(O)\b|([;,]))")
_ENTRY = re.compile(r"X\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]$")


def _normalise(pd, loops, arc_names=None) -> LinkDiagram:
    relabel = {}
    for x in pd:
        for lab in x:
            relabel.setdefault(lab, len(relabel))
    new_pd = tuple(tuple(relabel[lab] for lab in x) for x in pd)
    return LinkDiagram(new_pd, loops, arc_names)


def parse_pd(text: str) -> LinkDiagram:
    """Parse PD text such as ``X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]``.

    Entries may be separated by ``;``, ``,`` or whitespace; ``#`` starts a
    comment.  Labels are arbitrary nonnegative integers.
    """
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    pd, loops, pos = [], 0, 0
    while pos < len(body):
        if body[pos:].strip() == "":
            break
        m = _TOKEN.match(body, pos)
        if not m:
            bad = body[pos:].strip().split()[0]
            raise MalformedCode(f"unexpected token {bad!r}")
        if m.group(1):
            entry = _ENTRY.match(m.group(1))
            if not entry:
                raise MalformedCode(f"bad crossing entry {m.group(1)!r}")
            pd.append(tuple(int(g) for g in entry.groups()))
        elif m.group(2):
            loops += 1
        pos = m.end()
    if not pd and not loops:
        raise EmptyDiagram("no crossings or loops in PD text")
    counts = collections.Counter(lab for x in pd for lab in x)
    for lab, cnt in sorted(counts.items()):
        if cnt != 2:
            raise InconsistentArcs(f"edge label {lab} used {cnt} times (expected 2)")
    return _normalise(pd, loops)


def serialize_pd(d: LinkDiagram) -> str:
    parts = ["X[{},{},{},{}]".format(*(lab + 1 for lab in x)) for x in d.pd]
    parts.extend("O" for _ in range(d.loops))
    return "; ".join(parts)


# ---------------------------------------------------------------------------
# built-in diagrams

class Builtin(enum.Enum):
    UNKNOT = "unknot"
    TREFOIL = "trefoil"
    HOPF = "hopf"
    BORROMEAN = "borromean"
    BORROMEAN_MIRROR = "borromean-mirror"


# Crossing order puts the three LEFT crossings first: a*c=A, b*a=B, c*b=C,
# then the RIGHT ones a*C=A, b*A=B, c*B=C.  Arcs come out as a,b,c,A,B,C.
_BORROMEAN_PD = "X[1,2,3,4]; X[5,3,6,7]; X[8,6,2,9]; X[7,8,11,10]; X[9,1,12,11]; X[4,5,10,12]"
_BORROMEAN_NAMES = ("a", "b", "c", "A", "B", "C")


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Reflect the diagram in a line of the plane.

    Over/under information and arcs are unchanged; every crossing changes
    handedness.
    """
    pd = tuple((x[0], x[3], x[2], x[1]) for x in d.pd)
    return LinkDiagram(pd, d.loops, d.arc_names)


def builtin(name) -> LinkDiagram:
    """Return one of the fixed diagrams.

    * unknot: one crossingless loop.
    * trefoil: ``X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]`` (three LEFT crossings).
    * hopf: ``X[1,3,2,4]; X[3,1,4,2]`` (two RIGHT crossings, linking number 1).
    * borromean: six crossings, arcs ``a,b,c,A,B,C`` with components
      ``{a,A}, {b,B}, {c,C}``.
    * borromean-mirror: the reflection of the above.
    """
    key = Builtin(name.lower() if isinstance(name, str) else name.value)
    if key is Builtin.UNKNOT:
        return LinkDiagram((), 1)
    if key is Builtin.TREFOIL:
        return parse_pd("X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]")
    if key is Builtin.HOPF:
        return parse_pd("X[1,3,2,4]; X[3,1,4,2]")
    base = parse_pd(_BORROMEAN_PD).with_names(_BORROMEAN_NAMES)
    if key is Builtin.BORROMEAN:
        return base
    return mirror(base)


BUILTIN_NAMES = tuple(b.value for b in Builtin)


# ---------------------------------------------------------------------------
# planarity helpers

def face_count(d: LinkDiagram) -> int:
    """Number of faces of the 4-valent ribbon graph given by the PD code."""
    seen = set()
    faces = 0
    for start in itertools.product(range(len(d.pd)), range(4)):
        if start in seen:
            continue
        faces += 1
        corner = start
        while corner not in seen:
            seen.add(corner)
            ci, pos = corner
            nxt = (pos + 1) % 4
            lab = d.pd[ci][nxt]
            a, b = [(c, p) for c, x in enumerate(d.pd) for p, v in enumerate(x) if v == lab]
            corner = b if a == (ci, nxt) else a
    return faces


def is_planar(d: LinkDiagram) -> bool:
    """Euler-characteristic test, applied per connected piece of the diagram."""
    if not d.pd:
        return True
    pieces = _UnionFind(range(len(d.pd)))
    for lab, (ci, _) in d.edge_head.items():
        pieces.union(ci, d.edge_tail[lab][0])
    n_pieces = len({pieces.find(ci) for ci in range(len(d.pd))})
    v, e = len(d.pd), 2 * len(d.pd)
    return v - e + face_count(d) == 2 * n_pieces


# ---------------------------------------------------------------------------
# Reidemeister moves

class Move(enum.Enum):
    R1_PLUS = "R1+"
    R1_MINUS = "R1-"
    R2_PLUS = "R2+"
    R2_MINUS = "R2-"
    R3 = "R3"


@dataclass(frozen=True)
class KinkSite:
    """Where to add a kink: an edge label, or a crossingless loop index."""

    edge: int | None = None
    loop: int | None = None
    handedness: Handedness = Handedness.RIGHT
    under_first: bool = True


@dataclass(frozen=True)
class BigonSite:
    """Push edge ``over_edge`` across ``under_edge``, creating two crossings.

    ``from_west``: the finger arrives from the west of the (north-pointing)
    under edge.  ``south_first``: the over strand meets the southern of the
    two new crossings first.
    """

    over_edge: int
    under_edge: int
    from_west: bool = True
    south_first: bool = True


def _fresh(pd):
    return 1 + max((lab for x in pd for lab in x), default=-1)


def _split_edge(pd, d, edge, pieces):
    """Replace the head occurrence of ``edge`` by a new label; return labels."""
    head_ci, head_pos = d.edge_head[edge]
    start = _fresh(pd)
    labels = [edge] + list(range(start, start + pieces - 1))
    row = list(pd[head_ci])
    row[head_pos] = labels[-1]
    pd[head_ci] = tuple(row)
    return labels


def _remove_crossings(d, removed):
    """Delete crossings and glue the strands that passed through them."""
    uf = _UnionFind()
    for ci in removed:
        x = d.pd[ci]
        uf.union(x[UNDER_IN], x[UNDER_OUT])
        uf.union(x[OVER_B], x[OVER_D])
    kept = [x for ci, x in enumerate(d.pd) if ci not in removed]
    surviving = {uf.find(lab) for x in kept for lab in x}
    touched = {uf.find(lab) for ci in removed for lab in d.pd[ci]}
    new_loops = d.loops + len(touched - surviving)
    pd = [tuple(uf.find(lab) for lab in x) for x in kept]
    return pd, new_loops


def _kink(ein, eout, loop, hand, under_first):
    if under_first:
        if hand is Handedness.RIGHT:
            return (ein, eout, loop, loop)
        return (ein, loop, loop, eout)
    if hand is Handedness.RIGHT:
        return (loop, loop, eout, ein)
    return (loop, ein, eout, loop)


def _is_kink(x):
    return any(x[p] == x[(p + 1) % 4] for p in range(4))


def _bigon_pair(d, c1, c2):
    if c1 == c2:
        return None
    x1, x2 = d.pd[c1], d.pd[c2]
    if d.crossings[c1].handedness == d.crossings[c2].handedness:
        return None
    over_shared = {x1[OVER_B], x1[OVER_D]} & {x2[OVER_B], x2[OVER_D]}
    under_shared = {x1[UNDER_IN], x1[UNDER_OUT]} & {x2[UNDER_IN], x2[UNDER_OUT]}
    over_shared -= under_shared
    if not over_shared or not under_shared:
        return None
    return min(over_shared), min(under_shared)


def _triangle(d, sites):
    """Analyse three crossings as an R3 triangle; return the strand data."""
    c = list(sites)
    if len(set(c)) != 3:
        return None
    # strand slots: (crossing, in_pos, out_pos, over?)
    slots = []
    for ci in c:
        b_in = d.edge_head.get(d.pd[ci][OVER_B]) == (ci, OVER_B)
        over_in, over_out = (OVER_B, OVER_D) if b_in else (OVER_D, OVER_B)
        slots.append((ci, UNDER_IN, UNDER_OUT, False))
        slots.append((ci, over_in, over_out, True))
    # a strand runs from slot s to slot t when s's out label is t's in label
    links = {}
    for s in slots:
        for t in slots:
            if s[0] != t[0] and d.pd[s[0]][s[2]] == d.pd[t[0]][t[1]]:
                links.setdefault(s, []).append(t)
    strands = []
    for s, targets in links.items():
        for t in targets:
            strands.append((s, t))
    # pick three links that use all six slots exactly once
    for combo in itertools.combinations(strands, 3):
        flat = [slot for pair in combo for slot in pair]
        if len(set(flat)) != 6:
            continue
        pairs = [frozenset((s[0], t[0])) for s, t in combo]
        if len(set(pairs)) != 3:
            continue
        kinds = {}
        for s, t in combo:
            kinds[(s[3], t[3])] = (s, t)
        if (True, True) in kinds and (False, False) in kinds and len(kinds) == 3:
            top = kinds[(True, True)]
            bottom = kinds[(False, False)]
            middle = next(v for k, v in kinds.items() if k[0] != k[1])
            return top, middle, bottom
    return None


def _r3_signs_ok(d, top, middle, bottom):
    names = {"T": top, "M": middle, "B": bottom}
    crossing_of = {}
    for a, b in (("T", "M"), ("T", "B"), ("M", "B")):
        ca = {names[a][0][0], names[a][1][0]}
        cb = {names[b][0][0], names[b][1][0]}
        common = ca & cb
        if len(common) != 1:
            return False
        crossing_of[a + b] = common.pop()
    layouts = (
        {"TM": (0, 0), "TB": (1, 0), "MB": (0, 1)},
        {"TM": (0, 0), "TB": (0, 1), "MB": (1, 0)},
    )
    key_of = {v: k for k, v in crossing_of.items()}
    for layout in layouts:
        direction = {}
        for s, (first, second) in names.items():
            p = layout[key_of[first[0]]]
            q = layout[key_of[second[0]]]
            direction[s] = (q[0] - p[0], q[1] - p[1])
        ok = True
        for key, ci in crossing_of.items():
            over, under = direction[key[0]], direction[key[1]]
            cross = over[0] * under[1] - over[1] * under[0]
            want = Handedness.RIGHT if cross > 0 else Handedness.LEFT
            if d.crossings[ci].handedness is not want:
                ok = False
                break
        if ok:
            return True
    return False


def apply_reidemeister(d: LinkDiagram, move, site) -> LinkDiagram:
    """Apply one Reidemeister move and return the new diagram.

    Sites: ``KinkSite`` for R1+, a crossing index for R1-, ``BigonSite`` for
    R2+, a pair of crossing indices for R2-, three crossing indices for R3.
    Only combinatorial validity is checked.  The result carries default arc
    names.
    """
    move = Move(move if isinstance(move, str) else move.value)
    pd = list(d.pd)
    loops = d.loops

    if move is Move.R1_PLUS:
        if not isinstance(site, KinkSite):
            raise InvalidSite("R1+ needs a KinkSite")
        if site.loop is not None:
            if not 0 <= site.loop < loops:
                raise InvalidSite(f"no crossingless loop {site.loop}")
            e, lp = _fresh(pd), _fresh(pd) + 1
            pd.append(_kink(e, e, lp, site.handedness, site.under_first))
            loops -= 1
        else:
            if site.edge not in d.edge_head:
                raise InvalidSite(f"no edge {site.edge}")
            ein, eout = _split_edge(pd, d, site.edge, 2)
            lp = _fresh(pd)
            pd.append(_kink(ein, eout, lp, site.handedness, site.under_first))
        return _normalise(pd, loops)

    if move is Move.R1_MINUS:
        ci = site
        if not isinstance(ci, int) or not 0 <= ci < len(pd) or not _is_kink(pd[ci]):
            raise InvalidSite(f"crossing {site} is not a kink")
        pd, loops = _remove_crossings(d, {ci})
        return _normalise(pd, loops)

    if move is Move.R2_PLUS:
        if not isinstance(site, BigonSite):
            raise InvalidSite("R2+ needs a BigonSite")
        o, u = site.over_edge, site.under_edge
        if o == u or o not in d.edge_head or u not in d.edge_head:
            raise InvalidSite("R2+ needs two distinct existing edges")
        o1, o2, o3 = _split_edge(pd, d, o, 3)
        head_ci, head_pos = d.edge_head[u]
        start = max(_fresh(pd), o3 + 1)
        u1, u2, u3 = u, start, start + 1
        row = list(pd[head_ci])
        row[head_pos] = u3
        pd[head_ci] = tuple(row)
        if site.south_first:
            first, second = "S", "N"
        else:
            first, second = "N", "S"
        slots = {"S": {}, "N": {}}
        if site.from_west:
            slots[first].update(W=o1, E=o2)
            slots[second].update(E=o2, W=o3)
        else:
            slots[first].update(E=o1, W=o2)
            slots[second].update(W=o2, E=o3)
        pd.append((u1, slots["S"]["E"], u2, slots["S"]["W"]))
        pd.append((u2, slots["N"]["E"], u3, slots["N"]["W"]))
        return _normalise(pd, loops)

    if move is Move.R2_MINUS:
        try:
            c1, c2 = site
        except (TypeError, ValueError):
            raise InvalidSite("R2- needs a pair of crossings") from None
        if not (0 <= c1 < len(pd) and 0 <= c2 < len(pd)) or _bigon_pair(d, c1, c2) is None:
            raise InvalidSite(f"crossings {site} do not form a removable bigon")
        pd, loops = _remove_crossings(d, {c1, c2})
        return _normalise(pd, loops)

    if move is Move.R3:
        try:
            cs = tuple(site)
        except TypeError:
            raise InvalidSite("R3 needs three crossings") from None
        if len(cs) != 3 or not all(0 <= ci < len(pd) for ci in cs):
            raise InvalidSite("R3 needs three crossings")
        tri = _triangle(d, cs)
        if tri is None or not _r3_signs_ok(d, *tri):
            raise InvalidSite(f"crossings {site} do not form an R3 triangle")
        rows = [list(x) for x in pd]
        for first, second in tri:
            f_ci, f_in, f_out, _ = first
            g_ci, g_in, g_out, _ = second
            s_in = d.pd[f_ci][f_in]
            s_mid = d.pd[f_ci][f_out]
            s_out = d.pd[g_ci][g_out]
            rows[f_ci][f_in], rows[f_ci][f_out] = s_mid, s_out
            rows[g_ci][g_in], rows[g_ci][g_out] = s_in, s_mid
        return _normalise([tuple(r) for r in rows], loops)

    raise InvalidSite(f"unknown move {move}")


def reidemeister_sites(d: LinkDiagram, move) -> list:
    """Every site at which ``move`` applies to ``d``."""
    move = Move(move if isinstance(move, str) else move.value)
    edges = sorted(d.edge_head)
    if move is Move.R1_PLUS:
        sites = []
        for hand in Handedness:
            for under_first in (True, False):
                sites += [KinkSite(edge=e, handedness=hand, under_first=under_first) for e in edges]
                sites += [KinkSite(loop=k, handedness=hand, under_first=under_first)
                          for k in range(d.loops)]
        return sites
    if move is Move.R1_MINUS:
        return [ci for ci, x in enumerate(d.pd) if _is_kink(x)]
    if move is Move.R2_PLUS:
        return [BigonSite(o, u, w, s) for o in edges for u in edges if o != u
                for w in (True, False) for s in (True, False)]
    if move is Move.R2_MINUS:
        return [(c1, c2) for c1, c2 in itertools.combinations(range(len(d.pd)), 2)
                if _bigon_pair(d, c1, c2) is not None]
    sites = []
    for cs in itertools.combinations(range(len(d.pd)), 3):
        tri = _triangle(d, cs)
        if tri is not None and _r3_signs_ok(d, *tri):
            sites.append(cs)
    return sites

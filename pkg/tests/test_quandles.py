import itertools

import pytest
from hypothesis import given, strategies as st

from linkquandle.diagram import BUILTIN_NAMES, builtin
from linkquandle.errors import SearchSpaceTooLarge, SubsetNotClosed
from linkquandle.groups import FiniteGroup, cyclic_group, group_from_json, symmetric_group
from linkquandle.presentations import fundamental_quandle_presentation
from linkquandle.quandles import (
    act_right,
    adjoint_presentation,
    all_quandles,
    coloring_is_valid,
    count_group_homs,
    count_quandle_homs,
    enumerate_colorings,
    inner_group,
    is_tricolorable,
    make_conj,
    make_dihedral,
    make_eisermann,
    make_trivial,
    quandle_from_json,
    verify_quandle,
)

from conftest import small_quandles


def is_quandle_table(t):
    n = len(t)
    r = range(n)
    return (all(t[a][a] == a for a in r)
            and all(len({t[a][b] for a in r}) == n for b in r)
            and all(t[t[a][b]][c] == t[t[a][c]][t[b][c]] for a in r for b in r for c in r))


def brute_quandles(n):
    out = []
    for flat in itertools.product(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if is_quandle_table(t):
            out.append(tuple(map(tuple, t)))
    return out


@pytest.mark.parametrize("n", [1, 2, 3])
def test_all_quandles_against_brute_force(n):
    assert sorted(q.table for q in all_quandles(n)) == sorted(brute_quandles(n))


def canonical(table):
    n = len(table)
    best = None
    for p in itertools.permutations(range(n)):
        inv = {v: i for i, v in enumerate(p)}
        t = tuple(tuple(p[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        best = t if best is None or t < best else best
    return best


def test_quandle_counts_and_iso_classes():
    counts = [len(all_quandles(n)) for n in range(1, 5)]
    assert counts == [1, 1, 5, 36]
    classes = [len({canonical(q.table) for q in all_quandles(n)}) for n in range(1, 5)]
    assert classes == [1, 1, 3, 7]


def test_builtin_quandle_axioms():
    qs = small_quandles() + [make_dihedral(n) for n in range(1, 10)] + [make_trivial(7)]
    qs += [make_eisermann(m, n) for m in range(1, 4) for n in range(1, 4)]
    qs += [make_conj(symmetric_group(3), None, k) for k in (1, 2)]
    qs += [make_conj(cyclic_group(4)), make_conj(symmetric_group(3), [3, 4, 5])
           if is_conj_closed(symmetric_group(3), [3, 4, 5]) else make_conj(symmetric_group(3))]
    for q in qs:
        assert verify_quandle(q.table) == [], q.name
        assert is_quandle_table(q.table)


def is_conj_closed(g, subset):
    return all(g.mul(g.mul(g.inverse(h), s), h) in subset for s in subset for h in range(g.order))


def test_transpositions_subquandle():
    g = symmetric_group(3)
    # the conjugacy class of transpositions is the three-element dihedral quandle
    transpositions = [k for k in range(6) if g.power(k, 2) == g.identity and k != g.identity]
    q = make_conj(g, transpositions)
    assert q.n == 3 and canonical(q.table) == canonical(make_dihedral(3).table)


def test_conj_subset_not_closed():
    g = symmetric_group(3)
    t = next(k for k in range(6) if g.power(k, 2) == g.identity and k != g.identity)
    with pytest.raises(SubsetNotClosed):
        make_conj(g, [g.identity, t])


def test_verify_quandle_reports_violations():
    assert verify_quandle(((1, 1), (0, 0)))[0].axiom
    bad = [list(r) for r in make_dihedral(3).table]
    bad[0][1], bad[2][1] = bad[2][1], bad[0][1]
    assert verify_quandle(bad)


def test_json_round_trips():
    q = make_dihedral(5)
    assert quandle_from_json(q.to_json()).table == q.table
    g = symmetric_group(3)
    assert group_from_json(g.to_json()).table == g.table
    with pytest.raises(ValueError):
        FiniteGroup(((0, 0), (1, 1)))


def brute_colorings(d, q):
    out = []
    for colors in itertools.product(range(q.n), repeat=d.arc_count):
        if all(q.op(colors[c.under_in], colors[c.over]) == colors[c.under_out]
               if c.handedness.value == 1 else
               q.op(colors[c.under_out], colors[c.over]) == colors[c.under_in]
               for c in d.crossings):
            out.append(colors)
    return out


@pytest.mark.parametrize("name", BUILTIN_NAMES)
@pytest.mark.parametrize("q", [make_dihedral(3), make_dihedral(4), make_dihedral(5),
                               make_eisermann(2, 3), make_trivial(3)], ids=lambda q: q.name)
def test_colorings_against_brute_force(name, q):
    d = builtin(name)
    got = enumerate_colorings(d, q)
    assert sorted(got) == sorted(brute_colorings(d, q))
    assert all(coloring_is_valid(d, q, c) for c in got)
    # the same count through the presentation
    assert len(enumerate_colorings(fundamental_quandle_presentation(d), q)) == len(got)


@pytest.mark.parametrize("name,count,tri", [
    ("trefoil", 9, True), ("borromean", 3, False), ("unknot", 3, False),
    ("hopf", 3, False), ("borromean-mirror", 3, False),
])
def test_dihedral3_counts(name, count, tri):
    d = builtin(name)
    assert len(enumerate_colorings(d, make_dihedral(3))) == count
    assert is_tricolorable(d) is tri


def test_trivial_quandle_counts_components():
    for name in BUILTIN_NAMES:
        d = builtin(name)
        assert len(enumerate_colorings(d, make_trivial(4))) == 4 ** d.component_count


GROUPS = [cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3)]


@pytest.mark.parametrize("g", GROUPS, ids=["Z2", "Z3", "Z4", "S3"])
def test_hom_count_identity(g):
    for n in range(1, 5):
        for q in all_quandles(n):
            assert count_quandle_homs(q, g) == count_group_homs(adjoint_presentation(q), g), q.table


def test_search_limit():
    big = cyclic_group(60)
    with pytest.raises(SearchSpaceTooLarge):
        count_quandle_homs(make_trivial(5), big)


def test_inner_group_orders():
    assert len(inner_group(make_dihedral(3))) == 6
    assert len(inner_group(make_dihedral(4))) == 4
    assert len(inner_group(make_trivial(5))) == 1
    assert len(inner_group(make_dihedral(5))) == 10


def test_act_right_example():
    assert act_right(0, [(1, 1), (2, 1)], make_dihedral(5)) == 2


quandle_st = st.sampled_from(small_quandles())


@given(quandle_st, st.data())
def test_act_right_is_an_action(q, data):
    letter = st.tuples(st.integers(0, q.n - 1), st.sampled_from([1, -1]))
    w1 = data.draw(st.lists(letter, max_size=6))
    w2 = data.draw(st.lists(letter, max_size=6))
    x = data.draw(st.integers(0, q.n - 1))
    assert act_right(x, w1 + w2, q) == act_right(act_right(x, w1, q), w2, q)
    inverse = [(y, -e) for y, e in reversed(w1)]
    assert act_right(act_right(x, w1, q), inverse, q) == x


@given(quandle_st, st.data())
def test_inner_translation_identity(q, data):
    # the translation by x*y is the translation by x conjugated by the one by y
    x = data.draw(st.integers(0, q.n - 1))
    y = data.draw(st.integers(0, q.n - 1))
    for z in range(q.n):
        assert q.op(z, q.op(x, y)) == q.op(q.op(q.op_inv(z, y), x), y)
    inn = inner_group(q)
    rx = tuple(q.op(z, x) for z in range(q.n))
    assert rx in inn
    # closed under composition
    for p in list(inn)[:10]:
        assert tuple(rx[p[z]] for z in range(q.n)) in inn

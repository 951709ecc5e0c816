"""Coloring counts are unchanged by every applicable Reidemeister move."""

import pytest
from hypothesis import given, strategies as st

from linkquandle.diagram import BUILTIN_NAMES, builtin
from linkquandle.quandles import enumerate_colorings

from invariance_helpers import MOVES, QUANDLES, REPS, invariance_failures, moved_diagrams, sites_checked


def test_representatives_cover_iso_classes():
    assert sum(q.n <= 4 for q in REPS) == 12
    assert max(q.n for q in REPS) == 6


@pytest.mark.parametrize("name", BUILTIN_NAMES)
@pytest.mark.parametrize("move", MOVES)
def test_invariance(name, move):
    assert invariance_failures([name], [move]) == []


def test_every_move_kind_is_exercised():
    assert all(n > 0 for n in sites_checked().values())


@given(st.sampled_from(BUILTIN_NAMES), st.sampled_from(MOVES), st.sampled_from(QUANDLES), st.data())
def test_invariance_all_labelled_quandles(name, move, q, data):
    found = moved_diagrams(name, move)
    if not found:
        return
    e = data.draw(st.sampled_from(found))
    assert len(enumerate_colorings(e, q)) == len(enumerate_colorings(builtin(name), q))

from __future__ import annotations

import math
from collections import Counter, defaultdict
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import FIG2B_DRAWN, naive_w
from wiener_colorings.coloring import is_local_weak_max, make_coloring, swap, type_of, wiener_coloring
from wiener_colorings.errors import DomainError
from wiener_colorings.graph import build_cycle, build_path
from wiener_colorings.majorization import types
from wiener_colorings.paths import (
    block_partition,
    canonical_Ct_member,
    capacity_schedule,
    count_Ct,
    enumerate_Ct,
    is_in_Ct,
    is_weak_max_path,
    lr_counts,
    swap_delta_path,
)


def intervals(blocks):
    return [(b.start, b.stop) for b in blocks]


# [PAPER] worked schedule tables
def test_schedule_266():
    s = capacity_schedule((2, 6, 6))
    assert s.r == ((2, 6, 6), (2, 4, 4), (2, 2, 2), (0, 0, 0))
    assert s.m == (2, 2, 3) and s.i_star == 3 and s.last_max == 2


def test_schedule_356():
    s = capacity_schedule((3, 5, 6))
    assert s.r[:6] == ((3, 5, 6), (3, 5, 4), (3, 3, 4), (3, 3, 2), (1, 1, 2), (1, 1, 0))
    assert s.r[6] == (0, 0, 0)
    assert s.m == (1, 1, 1, 2, 1, 2) and s.i_star == 6 and s.last_max == 1


def test_schedule_trivial():
    s = capacity_schedule((1, 1))
    assert s.r == ((1, 1), (0, 0)) and s.m == (2,) and s.i_star == 1 and s.last_max == 1


def test_schedule_unsorted_input_is_normalized():
    assert capacity_schedule((6, 2, 6)) == capacity_schedule((2, 6, 6))


def test_blocks_266():
    p = block_partition((2, 6, 6))
    assert intervals(p.left()) == [(0, 1), (2, 3), (4, 6)]
    assert intervals(p.right()) == [(7, 9), (10, 11), (12, 13)]
    assert [b.index for b in p.right()] == [3, 2, 1]


# D_3^R follows the general interval formula, giving 11..11 rather than the
# duplicated 12..12 (0-based) of the worked table
def test_blocks_356():
    p = block_partition((3, 5, 6))
    assert intervals(p.left()) == [(0, 0), (1, 1), (2, 2), (3, 4), (5, 5), (6, 7)]
    assert intervals(p.right()) == [(8, 8), (9, 10), (11, 11), (12, 12), (13, 13)]
    assert p.block_of(11).index == 3 and p.block_of(11).side == "R"


def test_blocks_trivial():
    p = block_partition((1, 1))
    assert intervals(p.blocks) == [(0, 1)] and p.blocks[0].side == "L"
    with pytest.raises(DomainError):
        p.block_of(2)


@pytest.mark.parametrize("n", range(1, 21))
def test_blocks_tile_the_path(n):
    for k in range(1, n + 1):
        for t in types(n, k):
            p = block_partition(t)
            s = capacity_schedule(t)
            covered = [v for b in p.blocks for v in b.vertices]
            assert covered == list(range(n))
            for b in p.blocks:
                assert len(b) == s.m[b.index - 1] == len(b.allowed)
            assert (s.last_max == 1) == (len(p.right()) == s.i_star - 1)


@given(st.lists(st.integers(1, 9), min_size=1, max_size=6))
def test_schedule_conservation(parts):
    s = capacity_schedule(tuple(parts))
    n = sum(parts)
    assigned = 0
    for i, row in enumerate(s.r[:-1], start=1):
        assert sum(row) + assigned == n
        assert all(x >= 0 for x in row)
        both = i < s.i_star or s.last_max > 1
        assigned += s.m[i - 1] * (2 if both else 1)
    assert assigned == n
    for a, b in zip(s.r, s.r[1:]):
        assert all(y <= x for x, y in zip(a, b))


# [PAPER] the (2,6,6) figure lies in C_t
def test_figure_colorings_in_ct(fig2a, fig2b, fig2b_drawn):
    assert is_in_Ct(fig2a) and is_weak_max_path(fig2a)
    assert is_in_Ct(fig2b) and is_in_Ct(fig2b_drawn)


def test_ct_membership_small():
    p4 = build_path(4)
    assert is_in_Ct(make_coloring(p4, [1, 2, 2, 1]))
    assert not is_in_Ct(make_coloring(p4, [1, 1, 2, 2]))
    assert is_weak_max_path(make_coloring(build_path(1), [1]))


def test_ct_requires_path():
    with pytest.raises(DomainError):
        is_in_Ct(make_coloring(build_cycle(4), [1, 2, 1, 2]))


def test_labels_need_not_follow_size_order():
    # class sizes (6, 6, 2) carried by colors 3, 1, 2 instead of 1..3 sorted
    f = make_coloring(build_path(14), [1, 3, 1, 3, 1, 3, 2, 1, 3, 2, 3, 1, 3, 1])
    assert is_in_Ct(f)


def test_canonical_member():
    assert canonical_Ct_member((2, 2)).colors == (1, 2, 1, 2)
    f = canonical_Ct_member((1, 1, 1, 1))
    assert sorted(f.colors) == [1, 2, 3, 4] and wiener_coloring(f) == 0
    g = canonical_Ct_member((2, 6, 6))
    assert type_of(g) == (2, 6, 6) and is_in_Ct(g)


def test_enumerate_small():
    assert [f.colors for f in enumerate_Ct((2, 2))] == [(1, 2, 1, 2), (1, 2, 2, 1), (2, 1, 1, 2), (2, 1, 2, 1)]
    assert len(list(enumerate_Ct((1, 1)))) == 2


# [DERIVED] (2!)^2 (2!)^2 (3!)^2 from the schedule
def test_enumerate_266_count():
    members = list(enumerate_Ct((2, 6, 6)))
    assert len(members) == 576 == count_Ct((2, 6, 6))
    assert len({f.colors for f in members}) == 576
    assert [f.colors for f in members] == sorted(f.colors for f in members)
    assert len({wiener_coloring(f) for f in members}) == 1


# [PAPER] L/R counts and zero swap change at paper vertices 4 and 5
def test_lr_counts_worked_example(fig2b):
    assert lr_counts(fig2b, 3) == (0, 2)
    assert lr_counts(fig2b, 4) == (1, 3)
    assert swap_delta_path(fig2b, 3) == 0


def test_lr_counts_figure_as_drawn(fig2b_drawn):
    # the drawing has the two colors exchanged; the swap is still neutral
    assert lr_counts(fig2b_drawn, 3) == (1, 3)
    assert lr_counts(fig2b_drawn, 4) == (0, 2)
    assert swap_delta_path(fig2b_drawn, 3) == 0
    assert FIG2B_DRAWN[3] != FIG2B_DRAWN[4]


def test_swap_delta_examples():
    f = make_coloring(build_path(4), [1, 1, 2, 2])
    assert swap_delta_path(f, 1) == 2
    assert swap_delta_path(f, 0) == 0
    assert lr_counts(f, 0)[0] == 0
    with pytest.raises(DomainError):
        swap_delta_path(f, 3)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5))
def test_count_formula(parts):
    t = tuple(sorted(parts))
    if math.prod(math.factorial(p) for p in t) > 10**5:
        return
    s = capacity_schedule(t)
    expect = 1
    for i, mi in enumerate(s.m, start=1):
        expect *= math.factorial(mi) ** (1 if (i == s.i_star and s.last_max == 1) else 2)
    assert count_Ct(t) == expect
    if expect <= 5000:
        assert sum(1 for _ in enumerate_Ct(t)) == expect


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4), st.data())
def test_swaps_within_blocks_keep_w(parts, data):
    t = tuple(sorted(parts))
    f = canonical_Ct_member(t)
    w = wiener_coloring(f)
    for b in block_partition(t).blocks:
        for v in range(b.start, b.stop):
            assert wiener_coloring(swap(f, v, v + 1)) == w


def _brute_weak_maxima(n: int, k: int) -> set[tuple[int, ...]]:
    """Independent brute force: per-type maxima over every surjective array."""
    dist = build_path(n).dist
    best: dict[tuple, int] = defaultdict(lambda: -1)
    rows = []
    for colors in product(range(1, k + 1), repeat=n):
        if len(set(colors)) != k:
            continue
        t = tuple(sorted(Counter(colors).values()))
        w = naive_w(dist, colors)
        rows.append((colors, t, w))
        best[t] = max(best[t], w)
    return {c for c, t, w in rows if w == best[t]}


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 8) for k in range(1, min(n, 3) + 1)])
def test_triple_equivalence_small(n, k):
    wm = _brute_weak_maxima(n, k)
    g = build_path(n)
    for colors in product(range(1, k + 1), repeat=n):
        if len(set(colors)) != k:
            continue
        f = make_coloring(g, colors)
        assert is_in_Ct(f) == (colors in wm) == is_local_weak_max(f), colors


@given(st.integers(2, 40), st.data())
def test_swap_delta_matches_recomputation(n, data):
    k = data.draw(st.integers(1, n))
    raw = data.draw(st.lists(st.integers(1, k), min_size=n, max_size=n))
    raw[:k] = range(1, k + 1)
    f = make_coloring(build_path(n), raw)
    v = data.draw(st.integers(0, n - 2))
    assert swap_delta_path(f, v) == wiener_coloring(swap(f, v, v + 1)) - wiener_coloring(f)

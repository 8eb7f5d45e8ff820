from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wiener_colorings.errors import DomainError, OrderError
from wiener_colorings.majorization import (
    equitable_tuple,
    is_max_type_cycle,
    is_max_type_path,
    is_min_type_cycle,
    is_min_type_path,
    majorizes,
    r_closure,
    r_step,
    robin_hood,
    single_transfers,
    transfer_chain,
    types,
)


# [PAPER] chain from the definition and the C_6 example
def test_majorizes_examples():
    assert majorizes((2, 2, 3, 3), (1, 1, 3, 5))
    assert majorizes((1, 1, 3, 5), (1, 1, 1, 7))
    assert majorizes((2, 2, 2), (1, 2, 3))
    assert majorizes((1, 2, 3), (1, 2, 3))
    assert not majorizes((1, 4, 4), (2, 2, 5))
    assert not majorizes((2, 2, 5), (1, 4, 4))


def test_majorizes_contract():
    assert not majorizes((1, 2), (1, 3))
    with pytest.raises(DomainError):
        majorizes((1, 2), (3,))


def test_robin_hood_examples():
    assert robin_hood((2, 2, 3), 1, 3) == (1, 2, 4)
    assert robin_hood((1, 2, 4), 2, 3) == (1, 1, 5)
    assert robin_hood((2, 3, 3), 2, 2) == (2, 3, 3)
    with pytest.raises(DomainError):
        robin_hood((1, 2, 3), 1, 2)
    with pytest.raises(DomainError):
        robin_hood((1, 2, 3), 3, 1)


def test_transfer_chain_examples():
    c = transfer_chain((2, 2, 3), (1, 1, 5))
    assert c.steps == ((1, 3), (2, 3))
    assert transfer_chain((2, 3), (2, 3)).steps == ()
    c = transfer_chain((2, 3, 3), (1, 1, 6))
    assert len(c.steps) == 3
    seq = c.replay()
    assert seq[-1] == (1, 1, 6)
    assert all(majorizes((2, 3, 3), x) for x in seq)
    with pytest.raises(OrderError):
        transfer_chain((1, 4, 4), (2, 2, 5))


def test_equitable_tuple_examples():
    assert equitable_tuple(8, 3) == (2, 3, 3)
    assert equitable_tuple(14, 3) == (4, 5, 5)
    assert equitable_tuple(6, 3) == (2, 2, 2)
    with pytest.raises(DomainError):
        equitable_tuple(3, 4)


def test_r_step_examples():
    assert r_step({(4, 4)}) == {(4, 4), (3, 5)}
    assert r_step({(2, 3, 3)}) == {(2, 3, 3)}
    assert r_step({(2, 2, 4)}) == {(2, 2, 4), (1, 3, 4)}


def test_r_closure_examples():
    assert r_closure({(4, 4)}) == {(4, 4), (3, 5)}
    assert r_closure({(2, 3, 3)}) == {(2, 3, 3)}
    assert r_closure({(2, 2, 4)}) == {(2, 2, 4), (1, 3, 4)}
    # closure keeps going when a transfer creates a new equal-even pair
    assert (1, 3, 4, 4) in r_closure({(2, 2, 4, 4)})
    assert (1, 3, 3, 5) in r_closure({(2, 2, 4, 4)})


def test_path_extreme_predicates():
    assert is_min_type_path((4, 5, 5))
    assert is_max_type_path((1, 1, 12))
    assert not is_min_type_path((2, 6, 6)) and not is_max_type_path((2, 6, 6))


def test_cycle_min_predicates():
    assert is_min_type_cycle(8, 2, (4, 4)) and is_min_type_cycle(8, 2, (3, 5))
    assert is_min_type_cycle(7, 3, (2, 2, 3)) and not is_min_type_cycle(7, 3, (1, 3, 3))
    assert is_min_type_cycle(8, 3, (2, 3, 3)) and not is_min_type_cycle(8, 3, (1, 3, 4))
    with pytest.raises(DomainError):
        is_min_type_cycle(8, 3, (4, 4))


def test_cycle_max_predicates():
    assert is_max_type_cycle(6, 4, (1, 1, 2, 2)) and is_max_type_cycle(6, 4, (1, 1, 1, 3))
    assert is_max_type_cycle(8, 3, (1, 1, 6)) and not is_max_type_cycle(8, 3, (1, 2, 5))
    assert is_max_type_cycle(7, 3, (1, 1, 5))


def test_types_enumeration():
    assert list(types(6, 3)) == [(1, 1, 4), (1, 2, 3), (2, 2, 2)]
    assert list(types(3, 4)) == []
    # partition counts p(n, k) for n = 10
    assert [len(list(types(10, k))) for k in range(1, 11)] == [1, 5, 8, 9, 7, 5, 3, 2, 1, 1]


def test_single_transfers_stay_positive():
    out = list(single_transfers((1, 2, 3)))
    assert out == [(2, 3, (1, 1, 4))]


@pytest.mark.parametrize("n", range(1, 13))
def test_partial_order_laws(n):
    for k in range(1, min(n, 4) + 1):
        ts = list(types(n, k))
        eq = equitable_tuple(n, k)
        for x in ts:
            assert majorizes(x, x)
            assert majorizes(eq, x)
            for y in ts:
                if x != y and majorizes(x, y):
                    assert not majorizes(y, x)
                    for z in ts:
                        if majorizes(y, z):
                            assert majorizes(x, z)


@st.composite
def comparable(draw):
    n = draw(st.integers(2, 14))
    k = draw(st.integers(1, min(n, 5)))
    ts = list(types(n, k))
    x = draw(st.sampled_from(ts))
    y = draw(st.sampled_from([t for t in ts if majorizes(x, t)]))
    return x, y


@given(comparable())
def test_transfer_chain_soundness(pair):
    x, y = pair
    c = transfer_chain(x, y)
    seq = c.replay()
    assert seq[0] == x and seq[-1] == y
    for a, b in zip(seq, seq[1:]):
        assert majorizes(a, b) and a != b
    assert all(j <= jp for j, jp in c.steps)
    assert len(c.steps) <= len(x) * max(y)


@given(st.lists(st.integers(1, 8), min_size=1, max_size=5), st.data())
def test_robin_hood_majorizes_input(parts, data):
    t = tuple(sorted(parts))
    moves = list(single_transfers(t))
    if not moves:
        return
    j, jp, s = data.draw(st.sampled_from(moves))
    assert sum(s) == sum(t) and majorizes(t, s) and s != t


@given(st.lists(st.integers(1, 8), min_size=1, max_size=5))
def test_closure_is_fixpoint(parts):
    c = r_closure({tuple(parts)})
    assert r_step(c) == c

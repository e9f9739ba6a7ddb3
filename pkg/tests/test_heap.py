import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mowsp import AddressableHeap, InputError, LogicError, StateError, heap_delete, heap_insert, heap_is_empty, heap_pop_min


def test_insert_and_min():
    h = AddressableHeap()
    heap_insert(h, 5.0, "a")
    assert h.peek_min() == (5.0, "a")
    heap_insert(h, 3.0, "b")
    assert h.peek_min() == (3.0, "b")


@pytest.mark.parametrize("bad", [math.nan, math.inf])
def test_insert_non_finite(bad):
    with pytest.raises(InputError):
        AddressableHeap().insert(bad, "x")


def test_pop_order_and_fifo_ties():
    h = AddressableHeap()
    h.insert(5, "a")
    h.insert(3, "b")
    assert heap_pop_min(h) == (3, "b")
    h = AddressableHeap()
    h.insert(3, "b")
    h.insert(3, "c")
    assert heap_pop_min(h) == (3, "b")
    with pytest.raises(StateError):
        heap_pop_min(AddressableHeap())


def test_delete():
    h = AddressableHeap()
    hb = h.insert(3, "b")
    h.insert(5, "a")
    heap_delete(h, hb)
    assert h.peek_min() == (5, "a")
    with pytest.raises(LogicError):
        heap_delete(h, hb)
    h2 = AddressableHeap()
    only = h2.insert(1, "x")
    h2.delete(only)
    assert heap_is_empty(h2)


def test_is_empty():
    h = AddressableHeap()
    assert heap_is_empty(h)
    h.insert(1, 1)
    assert not heap_is_empty(h)
    h.pop_min()
    assert heap_is_empty(h)


def test_foreign_handle():
    a, b = AddressableHeap(), AddressableHeap()
    ha = a.insert(1, "x")
    with pytest.raises(LogicError):
        b.delete(ha)


ops = st.lists(st.one_of(
    st.tuples(st.just("ins"), st.integers(0, 20)),
    st.tuples(st.just("pop"), st.just(0)),
    st.tuples(st.just("del"), st.integers(0, 1000)),
), max_size=200)


@given(ops)
def test_matches_sorted_list_reference(script):
    h = AddressableHeap()
    ref = []  # (key, seq) kept sorted
    handles = {}
    seq = 0
    for op, arg in script:
        if op == "ins":
            handles[seq] = h.insert(arg, seq)
            ref.append((arg, seq))
            ref.sort()
            seq += 1
        elif op == "pop":
            if not ref:
                with pytest.raises(StateError):
                    h.pop_min()
                continue
            k, item = h.pop_min()
            assert (k, item) == ref.pop(0)
            del handles[item]
        elif handles:
            key = sorted(handles)[arg % len(handles)]
            h.delete(handles.pop(key))
            ref = [r for r in ref if r[1] != key]
        assert len(h) == len(ref)
        assert h.is_empty() == (not ref)
        if ref:
            assert h.peek_min() == ref[0]

"""Addressable min-heap (pairing heap).

Amortized O(1) insert and O(log n) pop-min / delete.  Equal keys pop in
insertion order, which keeps every solver run deterministic.
"""
import math

from .errors import InputError, LogicError, StateError


class HeapHandle:
    """Heap slot returned by :meth:`AddressableHeap.insert`.

    Valid until its item is popped or deleted.
    """

    __slots__ = ("key", "seq", "item", "child", "sibling", "prev", "heap")

    def __init__(self, key, seq, item, heap):
        self.key = key
        self.seq = seq
        self.item = item
        self.child = None
        self.sibling = None
        self.prev = None
        self.heap = heap

    @property
    def alive(self):
        return self.heap is not None

    def __repr__(self):
        state = "live" if self.heap is not None else "stale"
        return f"<HeapHandle key={self.key!r} seq={self.seq} {state}>"


def _link(a, b):
    """Meld two detached roots; returns the new root."""
    if b.key < a.key or (b.key == a.key and b.seq < a.seq):
        a, b = b, a
    # b becomes the leftmost child of a
    c = a.child
    b.sibling = c
    if c is not None:
        c.prev = b
    b.prev = a
    a.child = b
    a.sibling = None
    a.prev = None
    return a


def _merge_pairs(first):
    """Standard two-pass combine of a sibling list starting at ``first``."""
    if first is None:
        return None
    pairs = []
    a = first
    while a is not None:
        b = a.sibling
        if b is None:
            a.prev = a.sibling = None
            pairs.append(a)
            break
        nxt = b.sibling
        a.prev = a.sibling = None
        b.prev = b.sibling = None
        pairs.append(_link(a, b))
        a = nxt
    root = pairs.pop()
    while pairs:
        root = _link(pairs.pop(), root)
    return root


class AddressableHeap:
    """Pairing heap keyed by floats, with handles for arbitrary deletion.

    >>> h = AddressableHeap()
    >>> _ = h.insert(5.0, "a"); _ = h.insert(3.0, "b")
    >>> h.pop_min()
    (3.0, 'b')
    """

    __slots__ = ("_root", "_size", "_seq", "ops")

    def __init__(self):
        self._root = None
        self._size = 0
        self._seq = 0
        self.ops = 0

    def __len__(self):
        return self._size

    def is_empty(self):
        return self._root is None

    def insert(self, key, item=None):
        key = float(key)
        if not math.isfinite(key):
            raise InputError(f"heap key must be finite, got {key!r}")
        node = HeapHandle(key, self._seq, item, self)
        self._seq += 1
        self._size += 1
        self.ops += 1
        self._root = node if self._root is None else _link(self._root, node)
        return node

    def peek_min(self):
        if self._root is None:
            raise StateError("peek on an empty heap")
        return self._root.key, self._root.item

    def pop_min(self):
        root = self._root
        if root is None:
            raise StateError("pop from an empty heap")
        self.ops += 1
        self._root = _merge_pairs(root.child)
        self._size -= 1
        root.child = root.heap = None
        return root.key, root.item

    def delete(self, h):
        if not isinstance(h, HeapHandle) or h.heap is not self:
            raise LogicError("stale or foreign heap handle")
        self.ops += 1
        if h is self._root:
            self.pop_min()
            self.ops -= 1
            return
        # detach h's subtree from its sibling list
        prev, nxt = h.prev, h.sibling
        if prev.child is h:
            prev.child = nxt
        else:
            prev.sibling = nxt
        if nxt is not None:
            nxt.prev = prev
        h.prev = h.sibling = None
        sub = _merge_pairs(h.child)
        h.child = None
        h.heap = None
        self._size -= 1
        if sub is not None:
            self._root = _link(self._root, sub)

    def clear(self):
        # handles still held by callers become stale
        stack = [self._root] if self._root is not None else []
        while stack:
            n = stack.pop()
            if n.child is not None:
                stack.append(n.child)
            if n.sibling is not None:
                stack.append(n.sibling)
            n.heap = None
            n.child = n.sibling = n.prev = None
        self._root = None
        self._size = 0


# functional aliases mirroring the operation names used in the docs
def heap_insert(heap, key, item=None):
    return heap.insert(key, item)


def heap_pop_min(heap):
    return heap.pop_min()


def heap_delete(heap, handle):
    heap.delete(handle)


def heap_is_empty(heap):
    return heap.is_empty()

"""Nearest-marked-ancestor queries over a dynamic rooted forest.

The DAWG keeps its suffix-link tree mirrored in one of these forests. Two
backends share the same interface:

``NaiveForest``
    parent pointers only; ``nma_query`` walks up, O(depth).
``LinkCutForest``
    Sleator-Tarjan link-cut trees. Each splay node carries the number of
    marked nodes in its splay subtree, so the nearest marked proper ancestor
    is the rightmost marked node left of the query node after ``access``.
    Every operation (attach, detach, relink, mark, query) is O(log t)
    amortized for a forest of t nodes.

``nma_query`` never reports the queried node itself.
"""
from __future__ import annotations

from typing import Hashable, Optional

from .errors import CycleCreated, RedundantMark

Key = Hashable


class _Forest:
    """Bookkeeping shared by both backends: membership, child counts, marks."""

    def __init__(self) -> None:
        self._nchildren: dict[Key, int] = {}
        self._marked: set[Key] = set()

    def __contains__(self, key: Key) -> bool:
        return key in self._nchildren

    def __len__(self) -> int:
        return len(self._nchildren)

    @property
    def marked_count(self) -> int:
        return len(self._marked)

    def is_marked(self, key: Key) -> bool:
        return key in self._marked

    def attach(self, key: Key, parent: Optional[Key] = None) -> None:
        """Add ``key`` as a new leaf under ``parent`` (or as a new root)."""
        if key in self._nchildren:
            raise KeyError(f"node {key!r} already present")
        if parent is not None:
            self._nchildren[parent] += 1
        self._nchildren[key] = 0
        self._attach(key, parent)

    def detach(self, key: Key) -> None:
        """Remove the leaf ``key``, dropping its mark if any."""
        if self._nchildren[key]:
            raise ValueError(f"node {key!r} is not a leaf")
        parent = self.parent(key)
        self._detach(key)
        del self._nchildren[key]
        self._marked.discard(key)
        if parent is not None:
            self._nchildren[parent] -= 1

    def relink(self, key: Key, new_parent: Optional[Key]) -> None:
        """Move the subtree rooted at ``key`` under ``new_parent``."""
        self._nchildren[key]  # existence check
        if new_parent is not None:
            self._nchildren[new_parent]
        old = self.parent(key)
        if old == new_parent:
            return
        self._relink(key, new_parent)
        if old is not None:
            self._nchildren[old] -= 1
        if new_parent is not None:
            self._nchildren[new_parent] += 1

    def set_mark(self, key: Key, marked: bool = True) -> None:
        self._nchildren[key]
        if (key in self._marked) == marked:
            raise RedundantMark(f"node {key!r} already {'marked' if marked else 'unmarked'}")
        if marked:
            self._marked.add(key)
        else:
            self._marked.discard(key)
        self._set_mark(key, marked)

    def nma_query(self, key: Key) -> Optional[Key]:
        self._nchildren[key]
        return self._query(key)

    # backend hooks
    def parent(self, key: Key) -> Optional[Key]:
        raise NotImplementedError

    def _attach(self, key, parent):
        raise NotImplementedError

    def _detach(self, key):
        raise NotImplementedError

    def _relink(self, key, new_parent):
        raise NotImplementedError

    def _set_mark(self, key, marked):
        pass

    def _query(self, key):
        raise NotImplementedError


class NaiveForest(_Forest):
    """Reference backend: explicit parent map, queries walk towards the root."""

    def __init__(self) -> None:
        super().__init__()
        self._parent: dict[Key, Optional[Key]] = {}

    def parent(self, key):
        return self._parent[key]

    def _attach(self, key, parent):
        self._parent[key] = parent

    def _detach(self, key):
        del self._parent[key]

    def _relink(self, key, new_parent):
        p = new_parent
        while p is not None:
            if p == key:
                raise CycleCreated(f"{new_parent!r} lies below {key!r}")
            p = self._parent[p]
        self._parent[key] = new_parent

    def _query(self, key):
        p = self._parent[key]
        while p is not None and p not in self._marked:
            p = self._parent[p]
        return p


class _Splay:
    __slots__ = ("key", "left", "right", "up", "marked", "count")

    def __init__(self, key):
        self.key = key
        self.left: Optional[_Splay] = None
        self.right: Optional[_Splay] = None
        # splay parent, or path-parent when this node roots its splay tree
        self.up: Optional[_Splay] = None
        self.marked = False
        self.count = 0


def _is_splay_root(x: _Splay) -> bool:
    u = x.up
    return u is None or (u.left is not x and u.right is not x)


def _pull(x: _Splay) -> None:
    c = 1 if x.marked else 0
    if x.left is not None:
        c += x.left.count
    if x.right is not None:
        c += x.right.count
    x.count = c


def _rotate(x: _Splay) -> None:
    p = x.up
    g = p.up
    if p.left is x:
        b = x.right
        p.left = b
        x.right = p
    else:
        b = x.left
        p.right = b
        x.left = p
    if b is not None:
        b.up = p
    if g is not None:
        if g.left is p:
            g.left = x
        elif g.right is p:
            g.right = x
    x.up = g
    p.up = x
    _pull(p)
    _pull(x)


def _splay(x: _Splay) -> None:
    while not _is_splay_root(x):
        p = x.up
        if not _is_splay_root(p):
            g = p.up
            if (g.left is p) == (p.left is x):
                _rotate(p)
            else:
                _rotate(x)
        _rotate(x)


def _access(x: _Splay) -> None:
    last = None
    y = x
    while y is not None:
        _splay(y)
        y.right = last
        _pull(y)
        last = y
        y = y.up
    _splay(x)


class LinkCutForest(_Forest):
    """Accelerated backend on link-cut trees (O(log t) amortized per operation)."""

    def __init__(self) -> None:
        super().__init__()
        self._nodes: dict[Key, _Splay] = {}

    def parent(self, key):
        x = self._nodes[key]
        _access(x)
        y = x.left
        if y is None:
            return None
        while y.right is not None:
            y = y.right
        _splay(y)
        return y.key

    def _root_of(self, x: _Splay) -> _Splay:
        _access(x)
        while x.left is not None:
            x = x.left
        _splay(x)
        return x

    def _attach(self, key, parent):
        x = _Splay(key)
        self._nodes[key] = x
        if parent is not None:
            x.up = self._nodes[parent]

    def _cut(self, x: _Splay) -> None:
        _access(x)
        if x.left is not None:
            x.left.up = None
            x.left = None
            _pull(x)

    def _detach(self, key):
        x = self._nodes.pop(key)
        self._cut(x)

    def _relink(self, key, new_parent):
        x = self._nodes[key]
        old = self.parent(key)
        self._cut(x)
        if new_parent is not None:
            p = self._nodes[new_parent]
            if self._root_of(p) is x:
                if old is not None:
                    self._link(x, self._nodes[old])
                raise CycleCreated(f"{new_parent!r} lies below {key!r}")
            self._link(x, p)

    def _link(self, x: _Splay, p: _Splay) -> None:
        # x must root its represented tree
        _access(x)
        x.up = p

    def _set_mark(self, key, marked):
        x = self._nodes[key]
        _access(x)
        x.marked = marked
        _pull(x)

    def _query(self, key):
        x = self._nodes[key]
        _access(x)
        y = x.left
        if y is None or y.count == 0:
            return None
        while True:
            if y.right is not None and y.right.count:
                y = y.right
            elif y.marked:
                break
            else:
                y = y.left
        _splay(y)
        return y.key


BACKENDS = {"naive": NaiveForest, "linkcut": LinkCutForest}


def make_forest(kind: str = "linkcut") -> _Forest:
    try:
        return BACKENDS[kind]()
    except KeyError:
        raise ValueError(f"unknown NMA backend {kind!r}") from None

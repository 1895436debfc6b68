"""DAWG of a dynamic pattern set.

Nodes are end-position equivalence classes of the substrings of the current
dictionary. Insertion is the generalized online construction: for each
symbol of the new pattern we either follow a primary edge, extend with a new
sink, or split the target of a secondary edge. Deletion undoes the insertion
one symbol at a time, from the last symbol back to the first. Undoing one
symbol c of a prefix ``wc`` removes the single end position the prefix
contributed; at most one node disappears (the class of ``wc`` when nothing
else ends there) and at most one node merges into its only child in the
suffix-link tree (the class of ``wc`` or its suffix-link parent).

Every node records where its longest member can be read (``src`` and
``end``); the longest member never changes while the node lives, which makes
suffix-link labels O(1) to compute.

The suffix-link tree is mirrored into an NMA forest (see :mod:`dyndict.nma`),
whose marked nodes are the classes holding a whole pattern.
"""
from __future__ import annotations

from typing import Iterator, Optional

from .dictionary import as_bytes
from .errors import DuplicatePattern, EmptyPattern, UnknownPattern
from .nma import make_forest
from .stats import UpdateStats
from .symbolmap import SymbolMap


class DawgNode:
    __slots__ = (
        "id", "max_len", "edges", "slink", "isuf", "weight",
        "src", "end", "pattern_id", "ac_state", "visit",
    )

    def __init__(self, id: int, max_len: int, src: bytes, end: int):
        self.id = id
        self.max_len = max_len
        self.edges: SymbolMap[DawgNode] = SymbolMap()
        self.slink: Optional[DawgNode] = None
        self.isuf: SymbolMap[DawgNode] = SymbolMap()
        # number of patterns (plus the one being inserted/deleted) having the
        # longest member as a prefix
        self.weight = 0
        self.src = src
        self.end = end
        self.pattern_id: Optional[int] = None
        self.ac_state = None
        self.visit = 0

    @property
    def longest(self) -> bytes:
        return self.src[self.end - self.max_len:self.end]

    @property
    def prefix_count(self) -> int:
        return 1 if self.weight > 0 else 0

    @property
    def slink_label(self) -> Optional[int]:
        if self.slink is None:
            return None
        return self.src[self.end - self.slink.max_len - 1]

    def is_primary(self, target: "DawgNode") -> bool:
        return target.max_len == self.max_len + 1

    def __repr__(self) -> str:
        return f"DawgNode({self.id}, {self.longest!r})"


class Dawg:
    """DAWG(D) with labeled inverse suffix links and trunk bookkeeping.

    ``nma`` selects the forest backend: ``"linkcut"`` or ``"naive"``.
    """

    def __init__(self, nma: str = "linkcut"):
        self._next_id = 0
        self.nodes: dict[int, DawgNode] = {}
        self.forest = make_forest(nma)
        self.source = self._new_node(0, b"", 0, None, UpdateStats())
        self.source.weight = 1  # the empty prefix is always present
        self._patterns: dict[bytes, Optional[int]] = {}
        self._epoch = 0
        self.last_stats = UpdateStats()

    # -- queries ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, pattern) -> bool:
        return as_bytes(pattern) in self._patterns

    @property
    def patterns(self) -> list[bytes]:
        return list(self._patterns)

    def node(self, node_id: int) -> DawgNode:
        return self.nodes[node_id]

    def transition(self, node: DawgNode, c: int) -> Optional[tuple[DawgNode, bool]]:
        target = node.edges.get(c)
        if target is None:
            return None
        return target, node.is_primary(target)

    def isuf(self, node: DawgNode) -> list[tuple[int, DawgNode]]:
        return node.isuf.items()

    def is_trunk(self, node: DawgNode) -> bool:
        return node.weight > 0

    def is_marked(self, node: DawgNode) -> bool:
        return self.forest.is_marked(node.id)

    def nma_query(self, node: DawgNode) -> Optional[DawgNode]:
        key = self.forest.nma_query(node.id)
        return None if key is None else self.nodes[key]

    def walk(self, s) -> Optional[DawgNode]:
        """Node of the class containing ``s``, or None if ``s`` is no substring."""
        v = self.source
        for c in as_bytes(s):
            v = v.edges.get(c)
            if v is None:
                return None
        return v

    def edge_count(self) -> int:
        return sum(len(v.edges) for v in self.nodes.values())

    def total_length(self) -> int:
        return sum(len(p) for p in self._patterns)

    def new_epoch(self) -> int:
        self._epoch += 1
        return self._epoch

    # -- structural plumbing ---------------------------------------------

    def _new_node(self, max_len, src, end, slink, stats) -> DawgNode:
        v = DawgNode(self._next_id, max_len, src, end)
        self._next_id += 1
        self.nodes[v.id] = v
        stats.nodes_created += 1
        self.forest.attach(v.id, None)
        if slink is not None:
            self._set_slink(v, slink)
        return v

    def _set_slink(self, v: DawgNode, parent: DawgNode) -> None:
        old = v.slink
        if old is not None:
            del old.isuf[v.slink_label]
        v.slink = parent
        label = v.slink_label
        assert label not in parent.isuf, "suffix-link labels must be distinct"
        parent.isuf[label] = v
        self.forest.relink(v.id, parent.id)

    def _drop_node(self, v: DawgNode, stats: UpdateStats) -> None:
        if v.slink is not None:
            del v.slink.isuf[v.slink_label]
            v.slink = None
        self.forest.detach(v.id)
        del self.nodes[v.id]
        stats.nodes_deleted += 1

    def _split(self, t: DawgNode, c: int, q: DawgNode, src: bytes, end: int,
               stats: UpdateStats) -> DawgNode:
        """Split q so that t.c becomes the longest member of a new class."""
        clone = self._new_node(t.max_len + 1, src, end, None, stats)
        stats.nodes_split += 1
        for sym, target in q.edges.items():
            clone.edges[sym] = target
        stats.edges_copied += len(q.edges)
        parent = q.slink
        # q vacates its label under parent before clone takes it over
        self._set_slink(q, clone)
        self._set_slink(clone, parent)
        while t is not None and t.edges.get(c) is q:
            t.edges[c] = clone
            t = t.slink
            stats.slinks_traversed += 1
        return clone

    # -- updates ---------------------------------------------------------

    def insert(self, pattern, pattern_id: Optional[int] = None) -> UpdateStats:
        """Add a pattern; returns the work counters of this update."""
        p = as_bytes(pattern)
        if not p:
            raise EmptyPattern("patterns must be nonempty")
        if p in self._patterns:
            raise DuplicatePattern(p)
        stats = UpdateStats()
        last = self.source
        self.last_path = [last]
        for i, c in enumerate(p, 1):
            q = last.edges.get(c)
            if q is not None:
                if q.max_len != last.max_len + 1:
                    q = self._split(last, c, q, p, i, stats)
                last = q
            else:
                cur = self._new_node(last.max_len + 1, p, i, None, stats)
                t = last
                while t is not None and c not in t.edges:
                    t.edges[c] = cur
                    stats.edges_created += 1
                    t = t.slink
                    stats.slinks_traversed += 1
                if t is None:
                    self._set_slink(cur, self.source)
                else:
                    q = t.edges[c]
                    if q.max_len != t.max_len + 1:
                        q = self._split(t, c, q, p, i, stats)
                    self._set_slink(cur, q)
                last = cur
            last.weight += 1
            assert last.weight >= 1
            self.last_path.append(last)
        last.pattern_id = pattern_id
        self.forest.set_mark(last.id, True)
        self._patterns[p] = pattern_id
        self.last_stats = stats
        return stats

    def prefix_path(self, pattern) -> list[DawgNode]:
        """Nodes of the classes of every prefix of ``pattern``, shortest first."""
        nodes = [self.source]
        v = self.source
        for c in as_bytes(pattern):
            v = v.edges[c]
            nodes.append(v)
        return nodes

    def delete(self, pattern) -> UpdateStats:
        """Remove a pattern; returns the work counters of this update."""
        p = as_bytes(pattern)
        if p not in self._patterns:
            raise UnknownPattern(p)
        stats = UpdateStats()
        path = self.prefix_path(p)
        self.forest.set_mark(path[-1].id, False)
        path[-1].pattern_id = None
        del self._patterns[p]
        for i in range(len(p), 0, -1):
            self._undo_symbol(path[i - 1], p[i - 1], path[i], stats)
        self.last_stats = stats
        return stats

    def _undo_symbol(self, w: DawgNode, c: int, v: DawgNode, stats: UpdateStats) -> None:
        """Drop the end position contributed by the prefix ``wc`` (class ``v``)."""
        v.weight -= 1
        t = w
        if v.weight == 0 and not v.isuf:
            assert not v.edges
            while t is not None and t.edges.get(c) is v:
                del t.edges[c]
                stats.edges_deleted += 1
                t = t.slink
                stats.slinks_traversed += 1
            cand = v.slink
            self._drop_node(v, stats)
        else:
            cand = v
        if cand is self.source or cand.weight > 0 or len(cand.isuf) != 1:
            return
        # cand's longest member lost its last distinguishing left context:
        # fold it into its single child
        (child,) = cand.isuf.values()
        while t is not None and t.edges.get(c) is cand:
            t.edges[c] = child
            t = t.slink
            stats.slinks_traversed += 1
        stats.edges_deleted += len(cand.edges)
        cand.edges.clear()
        parent = cand.slink
        del parent.isuf[cand.slink_label]
        cand.slink = None
        self._set_slink(child, parent)
        self._drop_node(cand, stats)

    # -- debugging -------------------------------------------------------

    def dump(self) -> str:
        lines = []
        for nid in sorted(self.nodes):
            v = self.nodes[nid]
            edges = ",".join(
                f"{format_symbol(c)}:{u.id}:{'P' if v.is_primary(u) else 'S'}"
                for c, u in v.edges.items()
            )
            slink = "" if v.slink is None else str(v.slink.id)
            lines.append(f"{v.id}\t{v.max_len}\t{int(self.is_trunk(v))}\t{edges}\t{slink}")
        return "\n".join(lines)

    def iter_nodes(self) -> Iterator[DawgNode]:
        return iter(list(self.nodes.values()))


def format_symbol(c: int) -> str:
    if 0x21 <= c < 0x7F and chr(c) not in ":,\\":
        return chr(c)
    return f"\\x{c:02x}"


def check_invariants(dawg: Dawg) -> None:
    """Raise AssertionError if any structural invariant of ``dawg`` is broken."""
    primary_in: dict[int, int] = {v: 0 for v in dawg.nodes}
    trunks = 0
    for v in dawg.nodes.values():
        assert v.prefix_count in (0, 1)
        assert v.weight >= 0
        if dawg.is_trunk(v):
            trunks += 1
        for c, u in v.edges.items():
            assert u.id in dawg.nodes, "dangling edge"
            assert u.max_len > v.max_len
            if v.is_primary(u):
                primary_in[u.id] += 1
                assert u.longest == v.longest + bytes([c])
        if v is dawg.source:
            assert v.slink is None
            assert dawg.forest.parent(v.id) is None
        else:
            assert v.slink is not None and v.slink.id in dawg.nodes
            assert v.slink.max_len < v.max_len
            assert v.slink.isuf.get(v.slink_label) is v
            assert v.longest.endswith(v.slink.longest)
            assert dawg.forest.parent(v.id) == v.slink.id
        labels = v.isuf.keys()
        assert len(labels) == len(set(labels)) and len(labels) <= 256
        for label, child in v.isuf.items():
            assert child.slink is v and child.slink_label == label
        if not dawg.is_trunk(v):
            assert len(v.isuf) >= 2, f"non-trunk {v!r} has < 2 incoming suffix links"
        assert dawg.is_marked(v) == (v.longest in dawg._patterns)
    for nid, count in primary_in.items():
        if dawg.nodes[nid] is not dawg.source:
            assert count == 1, f"node {nid} has {count} incoming primary edges"
    prefixes = {p[:i] for p in dawg._patterns for i in range(1, len(p) + 1)}
    assert trunks == len(prefixes) + 1
    assert dawg.forest.marked_count == len(dawg._patterns)
    assert len(dawg.forest) == len(dawg.nodes)

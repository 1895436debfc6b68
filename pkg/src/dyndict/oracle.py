"""Brute-force references used to check the incremental structures.

Nothing here shares code with the online algorithms:

* ``brute_match`` compares every pattern at every text position;
* ``ReferenceDawg`` partitions Substr(D) by explicit end-position sets;
* ``ReferenceAC`` is the textbook trie + BFS failure construction;
* ``structures_equal`` walks two structures in lockstep from their roots and
  checks that the pairing of nodes is a bijection preserving every label,
  flag and link.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .dictionary import Occurrence, as_bytes
from .errors import CapExceeded

DEFAULT_CAP = 500


def brute_match(patterns: Iterable, text) -> set[tuple[bytes, int]]:
    """All (pattern, end_pos) pairs with end_pos 1-based."""
    text = as_bytes(text)
    found = set()
    for p in {as_bytes(p) for p in patterns}:
        m = len(p)
        for j in range(m, len(text) + 1):
            if text[j - m:j] == p:
                found.add((p, j))
    return found


def brute_occurrences(dictionary, text) -> set[Occurrence]:
    """Same as :func:`brute_match`, with ids taken from a ``Dictionary``."""
    return {Occurrence(dictionary.id_of(p), j) for p, j in brute_match(dictionary, text)}


# -- DAWG --------------------------------------------------------------------


@dataclass
class RefNode:
    members: list[bytes]
    epos: frozenset
    edges: dict[int, "RefNode"] = field(default_factory=dict)
    slink: Optional["RefNode"] = None
    trunk: bool = False
    marked: bool = False

    @property
    def longest(self) -> bytes:
        return self.members[-1]

    @property
    def max_len(self) -> int:
        return len(self.members[-1])

    def __repr__(self) -> str:
        return f"RefNode({self.longest!r})"


class ReferenceDawg:
    """DAWG(D) from the definition: nodes are classes of equal end-position sets."""

    def __init__(self, patterns: Iterable, cap: int = DEFAULT_CAP):
        pats = sorted({as_bytes(p) for p in patterns})
        d = sum(len(p) for p in pats)
        if d > cap:
            raise CapExceeded(f"total length {d} exceeds cap {cap}")
        self.patterns = pats
        epos: dict[bytes, set] = {b"": set()}
        for i, p in enumerate(pats):
            for j in range(len(p) + 1):
                epos[b""].add((i, j))
                for k in range(j):
                    epos.setdefault(p[k:j], set()).add((i, j))
        classes: dict[frozenset, list[bytes]] = {}
        for x, e in epos.items():
            classes.setdefault(frozenset(e), []).append(x)
        self.cls: dict[bytes, RefNode] = {}
        for e, members in classes.items():
            members.sort(key=len)
            node = RefNode(members, e)
            for x in members:
                self.cls[x] = node
        self.nodes = list({id(n): n for n in self.cls.values()}.values())
        prefixes = {b""} | {p[:j] for p in pats for j in range(len(p) + 1)}
        alphabet = sorted(set(b"".join(pats)))
        for node in self.nodes:
            x = node.longest
            node.trunk = x in prefixes
            node.marked = x in pats
            for c in alphabet:
                xc = x + bytes([c])
                if xc in self.cls:
                    node.edges[c] = self.cls[xc]
            shortest = node.members[0]
            if shortest:
                node.slink = self.cls[shortest[1:]]
        self.source = self.cls[b""]

    def __len__(self) -> int:
        return len(self.nodes)

    # view interface shared with Dawg
    def out_edges(self, node):
        return [(c, u, u.max_len == node.max_len + 1) for c, u in sorted(node.edges.items())]

    def slink_of(self, node):
        return node.slink

    def slink_label_of(self, node):
        if node.slink is None:
            return None
        x = node.longest
        return x[len(x) - node.slink.max_len - 1]

    def trunk_of(self, node):
        return node.trunk

    def marked_of(self, node):
        return node.marked

    def max_len_of(self, node):
        return node.max_len


class DawgView:
    """Adapter exposing an incremental :class:`~dyndict.dawg.Dawg` to the checker."""

    def __init__(self, dawg):
        self.dawg = dawg
        self.source = dawg.source

    def out_edges(self, node):
        return [(c, u, node.is_primary(u)) for c, u in node.edges.items()]

    def slink_of(self, node):
        return node.slink

    def slink_label_of(self, node):
        return node.slink_label

    def trunk_of(self, node):
        return self.dawg.is_trunk(node)

    def marked_of(self, node):
        return self.dawg.is_marked(node)

    def max_len_of(self, node):
        return node.max_len


# -- AC ----------------------------------------------------------------------


@dataclass(eq=False)
class RefState:
    string: bytes
    goto: dict[int, "RefState"] = field(default_factory=dict)
    flink: Optional["RefState"] = None
    output: set = field(default_factory=set)
    weight: int = 0


class ReferenceAC:
    """Textbook AC automaton; ``output`` holds pattern strings."""

    def __init__(self, patterns: Iterable, cap: int = DEFAULT_CAP):
        pats = sorted({as_bytes(p) for p in patterns})
        if sum(len(p) for p in pats) > cap:
            raise CapExceeded("dictionary exceeds cap")
        self.root = RefState(b"")
        self.states = [self.root]
        for p in pats:
            s = self.root
            s.weight += 1
            for i, c in enumerate(p):
                if c not in s.goto:
                    t = RefState(p[: i + 1])
                    s.goto[c] = t
                    self.states.append(t)
                s = s.goto[c]
                s.weight += 1
            s.output.add(p)
        queue = deque()
        for t in self.root.goto.values():
            t.flink = self.root
            queue.append(t)
        while queue:
            s = queue.popleft()
            s.output |= s.flink.output
            for c, t in sorted(s.goto.items()):
                f = s.flink
                while f is not self.root and c not in f.goto:
                    f = f.flink
                t.flink = f.goto[c] if c in f.goto else self.root
                queue.append(t)

    def __len__(self) -> int:
        return len(self.states)

    def out_edges(self, s):
        return sorted(s.goto.items())

    def flink_of(self, s):
        return s.flink

    def output_of(self, s):
        return frozenset(s.output)

    def weight_of(self, s):
        return s.weight


class ACView:
    """Adapter exposing an incremental AC automaton (ids resolved to strings)."""

    def __init__(self, ac):
        self.ac = ac
        self.root = ac.root

    def out_edges(self, s):
        return s.goto.items()

    def flink_of(self, s):
        return s.flink

    def output_of(self, s):
        return frozenset(self.ac.pattern(pid) for pid in s.output)

    def weight_of(self, s):
        return s.weight


def reference(patterns, kind: str, cap: int = DEFAULT_CAP):
    kind = kind.lower()
    if kind == "dawg":
        return ReferenceDawg(patterns, cap)
    if kind == "ac":
        return ReferenceAC(patterns, cap)
    raise ValueError(f"unknown kind {kind!r}")


build_reference = reference


# -- isomorphism -------------------------------------------------------------


def _show(s: bytes) -> str:
    return repr(s)[1:]


def structures_equal(a, b, kind: str) -> tuple[bool, Optional[str]]:
    """Check two DAWGs or two AC automata for isomorphism.

    ``a`` and ``b`` are views (``ReferenceDawg``/``DawgView`` or
    ``ReferenceAC``/``ACView``). Returns ``(True, None)`` or ``(False,
    witness)`` where the witness names the first divergence in BFS order by
    spelled string.
    """
    if kind.lower() == "dawg":
        return _dawg_equal(a, b)
    return _ac_equal(a, b)


def _pair(fwd, bwd, x, y, where):
    if id(x) in fwd:
        if fwd[id(x)] is not y:
            return f"{where}: left node maps to two different right nodes"
        return None
    if id(y) in bwd:
        return f"{where}: two left nodes map to one right node"
    fwd[id(x)] = y
    bwd[id(y)] = x
    return None


def _dawg_equal(a, b):
    fwd: dict[int, object] = {}
    bwd: dict[int, object] = {}
    queue = deque([(a.source, b.source, b"")])
    _pair(fwd, bwd, a.source, b.source, "source")
    seen = {id(a.source)}
    pending_slinks = []
    while queue:
        x, y, spelled = queue.popleft()
        where = f"node reached by {_show(spelled)}"
        if a.max_len_of(x) != b.max_len_of(y):
            return False, f"{where}: max_len {a.max_len_of(x)} != {b.max_len_of(y)}"
        if a.trunk_of(x) != b.trunk_of(y):
            return False, f"{where}: trunk {a.trunk_of(x)} != {b.trunk_of(y)}"
        if a.marked_of(x) != b.marked_of(y):
            return False, f"{where}: marked {a.marked_of(x)} != {b.marked_of(y)}"
        if a.slink_label_of(x) != b.slink_label_of(y):
            return False, f"{where}: slink label differs"
        pending_slinks.append((x, y, where))
        ea, eb = list(a.out_edges(x)), list(b.out_edges(y))
        if [c for c, _, _ in ea] != [c for c, _, _ in eb]:
            return False, f"{where}: edge labels {[c for c, _, _ in ea]} != {[c for c, _, _ in eb]}"
        for (c, u, pu), (_, v, pv) in zip(ea, eb):
            w = f"{where}, edge {chr(c)!r}"
            if pu != pv:
                return False, f"{w}: primary flag {pu} != {pv}"
            err = _pair(fwd, bwd, u, v, w)
            if err:
                return False, err
            if id(u) not in seen:
                seen.add(id(u))
                queue.append((u, v, spelled + bytes([c])))
    for x, y, where in pending_slinks:
        sx, sy = a.slink_of(x), b.slink_of(y)
        if (sx is None) != (sy is None) or (sx is not None and fwd.get(id(sx)) is not sy):
            return False, f"{where}: suffix links disagree"
    return True, None


def _ac_equal(a, b):
    fwd: dict[int, object] = {}
    bwd: dict[int, object] = {}
    _pair(fwd, bwd, a.root, b.root, "root")
    queue = deque([(a.root, b.root, b"")])
    visited = []
    while queue:
        x, y, s = queue.popleft()
        visited.append((x, y, s))
        where = f"state {_show(s)}"
        if a.weight_of(x) != b.weight_of(y):
            return False, f"{where}: weight {a.weight_of(x)} != {b.weight_of(y)}"
        if a.output_of(x) != b.output_of(y):
            return False, f"{where}: output {sorted(a.output_of(x))} != {sorted(b.output_of(y))}"
        ea, eb = list(a.out_edges(x)), list(b.out_edges(y))
        if [c for c, _ in ea] != [c for c, _ in eb]:
            return False, f"{where}: goto labels {[c for c, _ in ea]} != {[c for c, _ in eb]}"
        for (c, u), (_, v) in zip(ea, eb):
            err = _pair(fwd, bwd, u, v, where)
            if err:
                return False, err
            queue.append((u, v, s + bytes([c])))
    for x, y, s in visited:
        fx, fy = a.flink_of(x), b.flink_of(y)
        if x is a.root:
            continue
        if fx is None or fy is None or fwd.get(id(fx)) is not fy:
            return False, f"state {_show(s)}: failure links disagree"
    return True, None

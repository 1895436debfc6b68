"""Aho-Corasick automaton kept in sync with a DAWG of the same dictionary.

Every AC state corresponds to one trunk node of the DAWG (the class whose
longest member is the state's string), and the failure link of a state is
the first trunk node on the suffix-link chain of its node. Updates use the
DAWG *before* it is modified: the states whose failure links or outputs have
to change are found by descending inverse suffix links from the classes of
the affected prefixes, which visits at most twice as many nodes as states it
reports (every non-trunk node has at least two suffix-link children).
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Optional

from .dictionary import Dictionary, Occurrence, as_bytes
from .dawg import Dawg, DawgNode
from .stats import UpdateStats
from .symbolmap import SymbolMap


class AcState:
    __slots__ = ("id", "depth", "parent", "label", "goto", "flink", "output", "weight", "dawg_node")

    def __init__(self, id: int, depth: int, parent: Optional["AcState"], label: Optional[int]):
        self.id = id
        self.depth = depth
        self.parent = parent
        self.label = label
        self.goto: SymbolMap[AcState] = SymbolMap()
        self.flink: Optional[AcState] = None
        self.output: set[int] = set()
        self.weight = 0
        self.dawg_node: Optional[DawgNode] = None

    @property
    def string(self) -> bytes:
        out = []
        s = self
        while s.parent is not None:
            out.append(s.label)
            s = s.parent
        return bytes(reversed(out))

    def __repr__(self) -> str:
        return f"AcState({self.id}, {self.string!r})"


def _trunk_before(node: DawgNode) -> bool:
    return node.ac_state is not None


def _trunk_after_delete(node: DawgNode) -> bool:
    # states about to be deleted already carry weight 0
    return node.ac_state is not None and node.ac_state.weight > 0


def get_out_states(dawg: Dawg, p: bytes,
                   is_trunk: Callable[[DawgNode], bool] = _trunk_before) -> list[AcState]:
    """States having ``p`` as a suffix: trunk nodes below the class of ``p``."""
    node = dawg.walk(p)
    if node is None:
        return []
    out = []
    queue = deque([node])
    while queue:
        v = queue.popleft()
        if is_trunk(v):
            out.append(v.ac_state)
        queue.extend(v.isuf.values())
    return out


def get_fail_states(dawg: Dawg, p: bytes, start: int,
                    is_trunk: Callable[[DawgNode], bool] = _trunk_before) -> list[tuple[AcState, int]]:
    """States whose failure link must move to the prefix of ``p`` of some length >= start.

    Returns a stack of ``(state, i)``: pop from the end. A state may appear
    twice; the entry pushed earlier carries the deeper prefix and is popped
    last, so it wins.
    """
    roots = []
    v: Optional[DawgNode] = dawg.source
    for i, c in enumerate(p, 1):
        v = v.edges.get(c)
        if v is None:
            break
        if i >= start:
            roots.append((v, i))
    epoch = dawg.new_epoch()
    fail_states: list[tuple[AcState, int]] = []
    while roots:
        root, i = roots.pop()
        queue = deque([root])
        while queue:
            v = queue.popleft()
            trunk = is_trunk(v)
            if trunk:
                fail_states.append((v.ac_state, i))
            if v.visit != epoch:
                v.visit = epoch
                if not trunk:
                    queue.extend(v.isuf.values())
    return fail_states


class AcAutomaton:
    """AC(D) maintained through a shared :class:`Dawg`.

    The automaton does not own the dictionary; ``DynamicDictionary`` drives
    the AC update first and then the DAWG update, as one transaction.
    """

    def __init__(self, dawg: Dawg, dictionary: Dictionary):
        self.dawg = dawg
        self.dictionary = dictionary
        self._next_id = 0
        self.states: dict[int, AcState] = {}
        self.root = self._new_state(0, None, None)
        self.root.flink = None
        self.root.dawg_node = dawg.source
        dawg.source.ac_state = self.root

    def _new_state(self, depth, parent, label) -> AcState:
        s = AcState(self._next_id, depth, parent, label)
        self._next_id += 1
        self.states[s.id] = s
        return s

    def __len__(self) -> int:
        return len(self.states)

    def pattern(self, pid: int) -> bytes:
        return self.dictionary.pattern(pid)

    def state_of(self, s) -> Optional[AcState]:
        st = self.root
        for c in as_bytes(s):
            st = st.goto.get(c)
            if st is None:
                return None
        return st

    # -- insertion ---------------------------------------------------------

    def insert(self, p: bytes, pid: int) -> tuple[UpdateStats, list[AcState]]:
        """Update the automaton for a new pattern; the DAWG must not include it yet.

        Returns the stats (``u_f``, ``u_o``) and the new states by depth.
        """
        stats = UpdateStats()
        m = len(p)
        active = self.root
        active.weight += 1
        new_states: list[AcState] = []
        for i, c in enumerate(p, 1):
            nxt = active.goto.get(c)
            if nxt is None:
                nxt = self._new_state(i, active, c)
                active.goto[c] = nxt
                new_states.append(nxt)
            active = nxt
            active.weight += 1
        if new_states:
            active.output.add(pid)
        t = len(new_states)
        offset = m - t

        # existing states whose failure link moves to a new state
        fail_states = get_fail_states(self.dawg, p, offset + 1)
        changed = set()
        while fail_states:
            s, i = fail_states.pop()
            target = new_states[i - offset - 1]
            assert target.depth == i
            s.flink = target
            changed.add(s.id)
        stats.u_f = len(changed)

        # failure links and outputs of the new states, shallowest first
        for s in new_states:
            c = s.label
            f = s.parent.flink
            while f is not None and c not in f.goto:
                f = f.flink
            s.flink = self.root if f is None else f.goto[c]
            s.output |= s.flink.output

        out_states = get_out_states(self.dawg, p)
        for s in out_states:
            s.output.add(pid)
        stats.u_o = len(out_states)
        return stats, new_states

    def link_new_states(self, new_states: list[AcState], path: list[DawgNode]) -> None:
        """Attach freshly created states to their trunk nodes once the DAWG knows ``p``."""
        for s in new_states:
            node = path[s.depth]
            assert node.ac_state is None and node.max_len == s.depth
            node.ac_state = s
            s.dawg_node = node

    # -- deletion ----------------------------------------------------------

    def delete(self, p: bytes, pid: int) -> UpdateStats:
        """Update the automaton for a removed pattern; the DAWG must still include it."""
        stats = UpdateStats()
        m = len(p)
        active = self.root
        active.weight -= 1
        doomed: list[AcState] = []
        for c in p:
            active = active.goto[c]
            active.weight -= 1
            if active.weight == 0:
                doomed.append(active)
        t = len(doomed)
        offset = m - t
        doomed_ids = {s.id for s in doomed}

        fail_states = get_fail_states(self.dawg, p, offset + 1, _trunk_after_delete)
        changed = set()
        while fail_states:
            s, i = fail_states.pop()
            gone = doomed[i - offset - 1]
            assert gone.depth == i and s.flink is gone
            f = gone.flink
            while f.id in doomed_ids:
                f = f.flink
            s.flink = f
            changed.add(s.id)
        stats.u_f = len(changed)

        out_states = get_out_states(self.dawg, p)
        touched = 0
        for s in out_states:
            s.output.discard(pid)
            if s.id not in doomed_ids:
                touched += 1
        stats.u_o = touched

        for s in reversed(doomed):
            del s.parent.goto[s.label]
            del self.states[s.id]
            if s.dawg_node is not None:
                s.dawg_node.ac_state = None
                s.dawg_node = None
            s.parent = None
        return stats

    # -- matching ----------------------------------------------------------

    def match(self, text) -> list[Occurrence]:
        """Classical AC scan; per position, longer patterns first."""
        out = []
        s = self.root
        root = self.root
        pattern = self.dictionary.pattern
        for j, c in enumerate(as_bytes(text), 1):
            while s is not root and c not in s.goto:
                s = s.flink
            s = s.goto.get(c, root)
            if s.output:
                for pid in sorted(s.output, key=lambda q: -len(pattern(q))):
                    out.append(Occurrence(pid, j))
        return out

    def dump(self) -> str:
        from .dawg import format_symbol

        lines = []
        for sid in sorted(self.states):
            s = self.states[sid]
            goto = ",".join(f"{format_symbol(c)}:{t.id}" for c, t in s.goto.items())
            flink = "" if s.flink is None else str(s.flink.id)
            output = ",".join(str(x) for x in sorted(s.output))
            lines.append(f"{s.id}\t{s.depth}\t{s.weight}\t{goto}\t{flink}\t{output}")
        return "\n".join(lines)


def check_ac_invariants(ac: AcAutomaton) -> None:
    """Check every state against the definitions computed from the pattern set."""
    pats = set(ac.dictionary)
    prefixes = {b""} | {p[:i] for p in pats for i in range(len(p) + 1)}
    strings = {}
    for s in ac.states.values():
        x = s.string
        assert x in prefixes, f"state {x!r} is no prefix"
        strings[x] = s
    assert len(strings) == len(prefixes)
    for x, s in strings.items():
        assert s.weight == sum(1 for p in pats if p.startswith(x))
        assert s.output == {ac.dictionary.id_of(p) for p in pats if x.endswith(p)}
        if s is ac.root:
            continue
        best = max((x[k:] for k in range(1, len(x) + 1) if x[k:] in prefixes), key=len)
        assert s.flink is strings[best], f"flink({x!r}) should be {best!r}"


def check_correspondence(ac: AcAutomaton) -> None:
    """Trunk nodes and states are in bijection, and flinks follow suffix-link chains."""
    dawg = ac.dawg
    trunks = [v for v in dawg.nodes.values() if dawg.is_trunk(v)]
    assert len(trunks) == len(ac.states)
    seen = set()
    for v in trunks:
        s = v.ac_state
        assert s is not None and s.dawg_node is v and s.id in ac.states
        assert s.weight == v.weight or v is dawg.source
        assert s.id not in seen
        seen.add(s.id)
        if v is dawg.source:
            continue
        u = v.slink
        while not dawg.is_trunk(u):
            u = u.slink
        assert s.flink is u.ac_state
    for v in dawg.nodes.values():
        if not dawg.is_trunk(v):
            assert v.ac_state is None

"""Dictionary matching on the DAWG alone.

The scan only moves along primary edges between trunk nodes, which mirrors
the goto function of the AC automaton; on a mismatch it climbs suffix links,
which skips non-trunk nodes and so mirrors failure links. Occurrences ending
at a position are the marked classes on the suffix-link path of the current
node: the node itself, then one NMA query per reported ancestor.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dawg import Dawg, DawgNode
from .dictionary import Occurrence, as_bytes


def chk(dawg: Dawg, node: DawgNode, c: int) -> bool:
    """True iff ``node`` is trunk and has a primary ``c``-edge to a trunk node."""
    if not dawg.is_trunk(node):
        return False
    target = node.edges.get(c)
    if target is None or not node.is_primary(target):
        return False
    return dawg.is_trunk(target)


@dataclass
class MatchCounters:
    symbols: int = 0
    occurrences: int = 0
    nma_queries: int = 0
    slinks_followed: int = 0


class DawgMatcher:
    def __init__(self, dawg: Dawg):
        self.dawg = dawg
        self.counters = MatchCounters()

    def match(self, text) -> list[Occurrence]:
        dawg = self.dawg
        source = dawg.source
        nma = dawg.forest.nma_query
        nodes = dawg.nodes
        counters = self.counters
        out: list[Occurrence] = []
        active = source
        for j, c in enumerate(as_bytes(text), 1):
            counters.symbols += 1
            while active is not source and not chk(dawg, active, c):
                active = active.slink
                counters.slinks_followed += 1
            if chk(dawg, active, c):
                active = active.edges[c]
            node = active
            if dawg.is_marked(node):
                out.append(Occurrence(node.pattern_id, j))
            while True:
                counters.nma_queries += 1
                key = nma(node.id)
                if key is None:
                    break
                node = nodes[key]
                out.append(Occurrence(node.pattern_id, j))
        counters.occurrences += len(out)
        return out


def match_text(dawg: Dawg, text) -> list[Occurrence]:
    return DawgMatcher(dawg).match(text)

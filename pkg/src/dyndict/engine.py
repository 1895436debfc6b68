"""One dictionary, three views: the DAWG, its NMA forest and the AC automaton."""
from __future__ import annotations

from .ac import AcAutomaton
from .dawg import Dawg
from .dictionary import Dictionary, Occurrence
from .matcher import DawgMatcher
from .stats import UpdateStats


class DynamicDictionary:
    """Dynamic dictionary matcher supporting insertion and deletion of patterns.

    Each update first repairs the AC automaton with the help of the current
    DAWG, then updates the DAWG (and its NMA forest). ``last_stats`` holds the
    merged counters of the latest update and ``total_stats`` their running sum.

    >>> dd = DynamicDictionary()
    >>> for p in (b"abba", b"aca", b"cbb"):
    ...     _ = dd.insert(p)
    >>> dd.insert(b"bac").u_f
    5
    >>> sorted((o.end_pos, dd.pattern(o.pattern_id)) for o in dd.match_ac(b"acabbacbb"))
    [(3, b'aca'), (6, b'abba'), (7, b'bac'), (9, b'cbb')]
    """

    def __init__(self, nma: str = "linkcut"):
        self.dictionary = Dictionary()
        self.dawg = Dawg(nma=nma)
        self.ac = AcAutomaton(self.dawg, self.dictionary)
        self.matcher = DawgMatcher(self.dawg)
        self.last_stats = UpdateStats()
        self.total_stats = UpdateStats()

    def __contains__(self, pattern) -> bool:
        return pattern in self.dictionary

    def __len__(self) -> int:
        return len(self.dictionary)

    @property
    def patterns(self) -> list[bytes]:
        return list(self.dictionary)

    def pattern(self, pid: int) -> bytes:
        return self.dictionary.pattern(pid)

    def insert(self, pattern) -> UpdateStats:
        p = self.dictionary.check_new(pattern)
        pid = self.dictionary.add(p)
        stats, new_states = self.ac.insert(p, pid)
        stats += self.dawg.insert(p, pid)
        self.ac.link_new_states(new_states, self.dawg.last_path)
        return self._record(stats)

    def delete(self, pattern) -> UpdateStats:
        p = self.dictionary.check_known(pattern)
        pid = self.dictionary.id_of(p)
        stats = self.ac.delete(p, pid)
        stats += self.dawg.delete(p)
        self.dictionary.remove(p)
        return self._record(stats)

    def _record(self, stats: UpdateStats) -> UpdateStats:
        self.last_stats = stats
        self.total_stats += stats
        return stats

    def match_dawg(self, text) -> list[Occurrence]:
        return self.matcher.match(text)

    def match_ac(self, text) -> list[Occurrence]:
        return self.ac.match(text)

    match = match_ac

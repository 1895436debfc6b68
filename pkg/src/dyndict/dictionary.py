from __future__ import annotations

from typing import Iterator, NamedTuple

from .errors import DuplicatePattern, EmptyPattern, UnknownPattern


class Occurrence(NamedTuple):
    """A pattern occurrence; ``end_pos`` is the 1-based index of its last symbol."""

    pattern_id: int
    end_pos: int


def as_bytes(s) -> bytes:
    if isinstance(s, str):
        return s.encode("latin-1")
    return bytes(s)


class Dictionary:
    """The current pattern set. Ids are handed out once and never reused."""

    def __init__(self) -> None:
        self._by_id: dict[int, bytes] = {}
        self._by_pattern: dict[bytes, int] = {}
        self._next_id = 0

    def add(self, pattern) -> int:
        pattern = as_bytes(pattern)
        if not pattern:
            raise EmptyPattern("patterns must be nonempty")
        if pattern in self._by_pattern:
            raise DuplicatePattern(pattern)
        pid = self._next_id
        self._next_id += 1
        self._by_id[pid] = pattern
        self._by_pattern[pattern] = pid
        return pid

    def remove(self, pattern) -> int:
        pattern = as_bytes(pattern)
        try:
            pid = self._by_pattern.pop(pattern)
        except KeyError:
            raise UnknownPattern(pattern) from None
        del self._by_id[pid]
        return pid

    def check_new(self, pattern) -> bytes:
        pattern = as_bytes(pattern)
        if not pattern:
            raise EmptyPattern("patterns must be nonempty")
        if pattern in self._by_pattern:
            raise DuplicatePattern(pattern)
        return pattern

    def check_known(self, pattern) -> bytes:
        pattern = as_bytes(pattern)
        if pattern not in self._by_pattern:
            raise UnknownPattern(pattern)
        return pattern

    def id_of(self, pattern) -> int:
        return self._by_pattern[as_bytes(pattern)]

    def pattern(self, pid: int) -> bytes:
        return self._by_id[pid]

    def __contains__(self, pattern) -> bool:
        return as_bytes(pattern) in self._by_pattern

    def __len__(self) -> int:
        return len(self._by_id)

    def __iter__(self) -> Iterator[bytes]:
        return iter(list(self._by_pattern))

    def total_length(self) -> int:
        return sum(len(p) for p in self._by_pattern)

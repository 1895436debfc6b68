"""Small symbol-ordered map used for DAWG edges, inverse suffix links and goto."""
from __future__ import annotations

from bisect import bisect_left
from typing import Generic, Iterator, TypeVar

V = TypeVar("V")


class SymbolMap(Generic[V]):
    """Map from byte symbols to values, kept in ascending symbol order.

    Lookups are binary searches over at most 256 keys.
    """

    __slots__ = ("_keys", "_vals")

    def __init__(self) -> None:
        self._keys: list[int] = []
        self._vals: list[V] = []

    def get(self, sym: int, default=None):
        keys = self._keys
        i = bisect_left(keys, sym)
        if i < len(keys) and keys[i] == sym:
            return self._vals[i]
        return default

    def __contains__(self, sym: int) -> bool:
        keys = self._keys
        i = bisect_left(keys, sym)
        return i < len(keys) and keys[i] == sym

    def __getitem__(self, sym: int) -> V:
        keys = self._keys
        i = bisect_left(keys, sym)
        if i < len(keys) and keys[i] == sym:
            return self._vals[i]
        raise KeyError(sym)

    def __setitem__(self, sym: int, value: V) -> None:
        keys = self._keys
        i = bisect_left(keys, sym)
        if i < len(keys) and keys[i] == sym:
            self._vals[i] = value
        else:
            keys.insert(i, sym)
            self._vals.insert(i, value)

    def __delitem__(self, sym: int) -> None:
        keys = self._keys
        i = bisect_left(keys, sym)
        if i == len(keys) or keys[i] != sym:
            raise KeyError(sym)
        del keys[i]
        del self._vals[i]

    def pop(self, sym: int) -> V:
        value = self[sym]
        del self[sym]
        return value

    def __len__(self) -> int:
        return len(self._keys)

    def __bool__(self) -> bool:
        return bool(self._keys)

    def __iter__(self) -> Iterator[int]:
        return iter(list(self._keys))

    def keys(self) -> list[int]:
        return list(self._keys)

    def values(self) -> list[V]:
        return list(self._vals)

    def items(self) -> list[tuple[int, V]]:
        return list(zip(self._keys, self._vals))

    def copy(self) -> "SymbolMap[V]":
        other: SymbolMap[V] = SymbolMap()
        other._keys = list(self._keys)
        other._vals = list(self._vals)
        return other

    def clear(self) -> None:
        self._keys.clear()
        self._vals.clear()

    def __repr__(self) -> str:
        inner = ", ".join(f"{k!r}: {v!r}" for k, v in zip(self._keys, self._vals))
        return f"SymbolMap({{{inner}}})"

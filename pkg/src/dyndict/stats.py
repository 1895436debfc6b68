from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass
class UpdateStats:
    """Work counters for one update (or a running total of several)."""

    nodes_created: int = 0
    nodes_split: int = 0
    nodes_deleted: int = 0
    edges_created: int = 0
    edges_copied: int = 0
    edges_deleted: int = 0
    slinks_traversed: int = 0
    # filled in by the AC layer only
    u_f: int = 0
    u_o: int = 0

    def reset(self) -> None:
        for f in fields(self):
            setattr(self, f.name, 0)

    def __add__(self, other: "UpdateStats") -> "UpdateStats":
        return UpdateStats(
            **{f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)}
        )

    def __iadd__(self, other: "UpdateStats") -> "UpdateStats":
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))
        return self

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def format(self) -> str:
        return "\t".join(f"{k}={v}" for k, v in self.as_dict().items())

"""Script-driven update/match sessions over any of the engines.

A script holds one command per line; lines starting with ``#`` and empty
lines are skipped. The argument is the raw bytes after the command and one
space::

    + pattern      insert
    - pattern      delete (U+2212 MINUS SIGN is accepted too)
    ? text         match inline text
    ?f path        match the contents of a file (relative to the script)
    !              print last-op and cumulative counters
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO, Iterable, Optional

from .dawg import Dawg
from .dictionary import Dictionary
from .engine import DynamicDictionary
from .errors import DuplicatePattern, DyndictError, EmptyPattern, ParseError, UnknownPattern
from .matcher import DawgMatcher
from .oracle import brute_match
from .stats import UpdateStats

ENGINES = ("dawg", "ac", "oracle", "all")
_MINUS = "−".encode()


@dataclass
class ScriptCommand:
    op: str  # one of "+", "-", "?", "?f", "!"
    argument: bytes
    lineno: int


def parse_script(data: bytes) -> list[ScriptCommand]:
    commands = []
    for lineno, line in enumerate(data.split(b"\n"), 1):
        if not line or line.startswith(b"#"):
            continue
        if line == b"!":
            commands.append(ScriptCommand("!", b"", lineno))
            continue
        if line.startswith(b"?f "):
            commands.append(ScriptCommand("?f", line[3:], lineno))
            continue
        if line == b"?":
            commands.append(ScriptCommand("?", b"", lineno))
            continue
        for prefix, op in ((b"+", "+"), (b"-", "-"), (_MINUS, "-"), (b"?", "?")):
            if line.startswith(prefix):
                rest = line[len(prefix):]
                if rest[:1] != b" " and rest:
                    raise ParseError(lineno, f"expected a space after {op!r}")
                commands.append(ScriptCommand(op, rest[1:], lineno))
                break
        else:
            raise ParseError(lineno, f"unknown command {line[:10]!r}")
    return commands


Hits = list[tuple[int, bytes]]


def _sorted_hits(hits: Iterable[tuple[int, bytes]]) -> Hits:
    return sorted(set(hits), key=lambda h: (h[0], -len(h[1]), h[1]))


class Session:
    """Applies script commands to one engine, or to all of them in lockstep."""

    def __init__(self, engine: str = "all", nma: str = "linkcut", out: Optional[BinaryIO] = None):
        if engine not in ENGINES:
            raise ValueError(f"unknown engine {engine!r}")
        self.engine = engine
        self.out = out if out is not None else sys.stdout.buffer
        self.divergences: list[str] = []
        self.oracle_patterns: set[bytes] = set()
        self.dd: Optional[DynamicDictionary] = None
        self.dawg: Optional[Dawg] = None
        if engine in ("ac", "all"):
            self.dd = DynamicDictionary(nma=nma)
        elif engine == "dawg":
            self.dawg = Dawg(nma=nma)
            self.dictionary = Dictionary()
            self.matcher = DawgMatcher(self.dawg)
        self.last_stats = UpdateStats()
        self.total_stats = UpdateStats()
        self._lineno = 0

    # -- updates -----------------------------------------------------------

    def insert(self, p: bytes) -> None:
        if self.dd is not None:
            st = self.dd.insert(p)
        elif self.dawg is not None:
            self.dictionary.check_new(p)
            st = self.dawg.insert(p, self.dictionary.add(p))
        else:
            if not p:
                raise EmptyPattern("patterns must be nonempty")
            if p in self.oracle_patterns:
                raise DuplicatePattern(p)
            st = UpdateStats()
        self.oracle_patterns.add(p)
        self._record(st)

    def delete(self, p: bytes) -> None:
        if self.dd is not None:
            st = self.dd.delete(p)
        elif self.dawg is not None:
            self.dictionary.check_known(p)
            st = self.dawg.delete(p)
            self.dictionary.remove(p)
        else:
            if p not in self.oracle_patterns:
                raise UnknownPattern(p)
            st = UpdateStats()
        self.oracle_patterns.discard(p)
        self._record(st)

    def _record(self, st: UpdateStats) -> None:
        self.last_stats = st
        self.total_stats += st

    # -- matching ----------------------------------------------------------

    def match(self, text: bytes) -> Hits:
        oracle = _sorted_hits((j, p) for p, j in brute_match(self.oracle_patterns, text))
        if self.engine == "oracle":
            return oracle
        if self.engine == "dawg":
            pat = self.dictionary.pattern
            return _sorted_hits((o.end_pos, pat(o.pattern_id)) for o in self.matcher.match(text))
        pat = self.dd.pattern
        ac = _sorted_hits((o.end_pos, pat(o.pattern_id)) for o in self.dd.match_ac(text))
        if self.engine == "ac":
            return ac
        dawg = _sorted_hits((o.end_pos, pat(o.pattern_id)) for o in self.dd.match_dawg(text))
        if not (ac == dawg == oracle):
            self.divergences.append(
                f"line {self._lineno}: text {text[:40]!r}: "
                f"dawg={len(dawg)} ac={len(ac)} oracle={len(oracle)} hits"
            )
        return oracle

    # -- driver ------------------------------------------------------------

    def write(self, line: bytes) -> None:
        self.out.write(line + b"\n")

    def emit_hits(self, hits: Hits) -> None:
        for j, p in hits:
            self.write(str(j).encode() + b"\t" + p)

    def emit_stats(self) -> None:
        self.write(b"stats\tlast\t" + self.last_stats.format().encode())
        self.write(b"stats\ttotal\t" + self.total_stats.format().encode())

    def execute(self, cmd: ScriptCommand, base: Path = Path(".")) -> None:
        self._lineno = cmd.lineno
        try:
            if cmd.op == "+":
                self.insert(cmd.argument)
            elif cmd.op == "-":
                self.delete(cmd.argument)
            elif cmd.op == "?":
                self.emit_hits(self.match(cmd.argument))
            elif cmd.op == "?f":
                path = base / Path(cmd.argument.decode())
                self.emit_hits(self.match(path.read_bytes()))
            elif cmd.op == "!":
                self.emit_stats()
        except DyndictError as exc:
            raise ParseError(cmd.lineno, f"{type(exc).__name__}: {exc}") from exc
        except OSError as exc:
            raise ParseError(cmd.lineno, str(exc)) from exc

    def run(self, commands: list[ScriptCommand], base: Path = Path(".")) -> int:
        for cmd in commands:
            self.execute(cmd, base)
        return 1 if self.divergences else 0


def run_script(path, engine: str = "all", nma: str = "linkcut", out=None) -> tuple[int, Session]:
    """Run a script file; returns the exit code (0 ok, 1 divergence) and the session."""
    path = Path(path)
    session = Session(engine, nma, out)
    code = session.run(parse_script(path.read_bytes()), path.parent)
    return code, session

"""Adversarial update families with counter tables.

``lemma2``
    D = {(ab)^i a^j c : 1 <= i <= m/2, j in {0, 1}, c not in {a, b}} and the
    pattern (ba)^(m/2), inserted and deleted repeatedly. Every symbol of the
    pattern splits a node carrying sigma - 2 edges, in both directions, so
    the cost does not amortize across rounds.
``theorem3``
    D = {c_i a^k : 1 <= i <= x}, then a^1, ..., a^k inserted in order.
    Inserting a^j moves the failure links of x(k - j + 1) states, for a total
    of xk(k + 1)/2.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .engine import DynamicDictionary
from .errors import BadParams
from .stats import UpdateStats

A, B = ord("a"), ord("b")


def _others(n: int, exclude=(A, B)) -> list[int]:
    """``n`` byte symbols outside ``exclude``, printable ones first."""
    pool = [c for c in list(range(ord("b"), 256)) + list(range(A)) if c not in exclude]
    if n > len(pool):
        raise BadParams("alphabet too large")
    return pool[:n]


@dataclass
class BenchResult:
    family: str
    params: dict
    columns: list[str]
    rows: list[list] = field(default_factory=list)
    total: dict = field(default_factory=dict)

    def to_tsv(self) -> str:
        lines = ["\t".join(self.columns)]
        lines += ["\t".join(str(x) for x in row) for row in self.rows]
        if self.total:
            lines.append("\t".join(["total"] + [str(self.total.get(c, "")) for c in self.columns[1:]]))
        return "\n".join(lines)


def lemma2_dictionary(sigma: int, m: int) -> tuple[list[bytes], bytes]:
    others = _others(sigma - 2)
    dictionary = [
        b"ab" * i + b"a" * j + bytes([c])
        for i in range(1, m // 2 + 1)
        for j in (0, 1)
        for c in others
    ]
    return dictionary, b"ba" * (m // 2)


def bench_lemma2(sigma: int = 5, m: int = 6, rounds: int = 3, nma: str = "linkcut") -> BenchResult:
    if sigma < 3 or m < 2 or m % 2 or rounds < 1:
        raise BadParams("lemma2 needs sigma >= 3, even m >= 2, rounds >= 1")
    dictionary, p = lemma2_dictionary(sigma, m)
    dd = DynamicDictionary(nma=nma)
    for q in dictionary:
        dd.insert(q)
    cols = ["round", "op", "nodes_split", "nodes_deleted", "edges_copied", "edges_deleted",
            "edges_created", "u_f", "u_o"]
    res = BenchResult("lemma2", {"sigma": sigma, "m": m, "rounds": rounds}, cols)
    for r in range(1, rounds + 1):
        for op in ("insert", "delete"):
            st = dd.insert(p) if op == "insert" else dd.delete(p)
            res.rows.append([r, op] + [getattr(st, c) for c in cols[2:]])
    return res


def bench_theorem3(x: int = 3, k: int = 3, sigma: int | None = None, nma: str = "linkcut") -> BenchResult:
    if x < 1 or k < 1:
        raise BadParams("theorem3 needs x >= 1 and k >= 1")
    if sigma is not None and sigma < x + 1:
        raise BadParams("theorem3 needs sigma >= x + 1")
    heads = _others(x, exclude=(A,))
    dd = DynamicDictionary(nma=nma)
    for c in heads:
        dd.insert(bytes([c]) + b"a" * k)
    cols = ["j", "u_f", "u_o"]
    res = BenchResult("theorem3", {"x": x, "k": k}, cols)
    total = UpdateStats()
    for j in range(1, k + 1):
        st = dd.insert(b"a" * j)
        total += st
        res.rows.append([j, st.u_f, st.u_o])
    res.total = {"u_f": total.u_f, "u_o": total.u_o}
    return res


def bench_family(family: str, **params) -> BenchResult:
    if family == "lemma2":
        return bench_lemma2(**params)
    if family == "theorem3":
        return bench_theorem3(**params)
    raise BadParams(f"unknown family {family!r}")

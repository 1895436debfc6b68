import random

from dyndict import CycleCreated, DynamicDictionary, make_forest
from dyndict.nma import BACKENDS
from dyndict.oracle import ACView, DawgView, ReferenceAC, ReferenceDawg, structures_equal

SIGMAS = (2, 4, 26)


def alphabet(sigma: int) -> bytes:
    return bytes(range(ord("a"), ord("a") + sigma))


def random_text(rng: random.Random, alpha: bytes, patterns, n: int) -> bytes:
    """Random text salted with pattern copies so that matches actually occur."""
    out = bytearray()
    while len(out) < n:
        if patterns and rng.random() < 0.3:
            out += rng.choice(patterns)
        else:
            out.append(rng.choice(alpha))
    return bytes(out[:n])


def random_session(rng: random.Random, max_patterns=8, max_len=12, max_ops=20, max_text=200):
    """Yield (sigma, op, pattern, dictionary-after, text) for one random session."""
    sigma = rng.choice(SIGMAS)
    alpha = alphabet(sigma)
    pool = list({bytes(rng.choice(alpha) for _ in range(rng.randint(1, max_len)))
                 for _ in range(2 * max_patterns)})
    present: list[bytes] = []
    steps = []
    for _ in range(rng.randint(1, max_ops)):
        if present and (len(present) >= max_patterns or rng.random() < 0.35):
            p = rng.choice(present)
            present.remove(p)
            op = "delete"
        else:
            candidates = [q for q in pool if q not in present]
            if not candidates:
                continue
            p = rng.choice(candidates)
            present.append(p)
            op = "insert"
        text = random_text(rng, alpha, present, rng.randint(0, max_text))
        steps.append((op, p, list(present), text))
    return sigma, steps


def assert_isomorphic(dd: DynamicDictionary):
    ok, witness = structures_equal(ReferenceDawg(dd.patterns), DawgView(dd.dawg), "dawg")
    assert ok, witness
    ok, witness = structures_equal(ReferenceAC(dd.patterns), ACView(dd.ac), "ac")
    assert ok, witness


def random_steps(seed, steps):
    """Drive both backends with the same random operations; compare every answer.

    Returns the forests and the number of queries compared.
    """
    rng = random.Random(seed)
    fs = [make_forest(k) for k in sorted(BACKENDS)]
    keys = []
    nxt = 0
    queries = 0
    for _ in range(steps):
        r = rng.random()
        if not keys or r < 0.2:
            parent = rng.choice(keys) if keys and rng.random() < 0.9 else None
            for f in fs:
                f.attach(nxt, parent)
            keys.append(nxt)
            nxt += 1
        elif r < 0.3:
            k = rng.choice(keys)
            for f in fs:
                f.set_mark(k, not f.is_marked(k))
        elif r < 0.4:
            leaves = [k for k in rng.sample(keys, min(5, len(keys))) if fs[0]._nchildren[k] == 0]
            if leaves:
                for f in fs:
                    f.detach(leaves[0])
                keys.remove(leaves[0])
        elif r < 0.55:
            k = rng.choice(keys)
            p = rng.choice(keys + [None])
            outcome = []
            for f in fs:
                try:
                    f.relink(k, p)
                    outcome.append(True)
                except CycleCreated:
                    outcome.append(False)
            assert len(set(outcome)) == 1
        else:
            queries += 1
            k = rng.choice(keys)
            answers = {f.nma_query(k) for f in fs}
            assert len(answers) == 1, (k, answers)
    return fs, queries


# one line per acceptance criterion, printed in the terminal summary
REPORT: list[str] = []


def report(number: int, ok: bool, detail: str) -> None:
    REPORT.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")

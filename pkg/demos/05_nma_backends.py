"""Compare the two nearest-marked-ancestor backends on a random forest workload."""
import random
import time

from dyndict import make_forest

rng = random.Random(1)
n = 3000
ops = []
for i in range(1, n):
    ops.append(("attach", i, rng.randrange(max(0, i - 5), i)))  # deep, path-like tree
for _ in range(n):
    ops.append(("mark", rng.randrange(n), None))
    ops.append(("query", rng.randrange(n), None))

for kind in ("naive", "linkcut"):
    f = make_forest(kind)
    f.attach(0)
    answers = []
    t0 = time.perf_counter()
    for op, a, b in ops:
        if op == "attach":
            f.attach(a, b)
        elif op == "mark":
            f.set_mark(a, not f.is_marked(a))
        else:
            answers.append(f.nma_query(a))
    elapsed = time.perf_counter() - t0
    print(f"{kind:>8}: {elapsed * 1000:7.1f} ms, checksum {hash(tuple(answers)) & 0xffff:04x}")

"""Counter tables for two adversarial update families.

In the first, one pattern is inserted and deleted repeatedly and every round
costs the same number of edge copies, so the work does not amortize. In the
second, inserting a, aa, ..., a^k into {c_i a^k} moves xk(k+1)/2 failure
links in total.
"""
from dyndict.bench import bench_lemma2, bench_theorem3

print(bench_lemma2(sigma=5, m=6, rounds=3).to_tsv())
print()
for x, k in ((3, 3), (2, 5)):
    res = bench_theorem3(x, k)
    print(res.to_tsv())
    print(f"expected total u_f = {x * k * (k + 1) // 2}\n")

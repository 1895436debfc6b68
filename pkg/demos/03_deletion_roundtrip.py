"""Insert and delete patterns at random and compare against rebuilt references.

After each update the incremental DAWG and AC automaton are checked for
isomorphism with structures computed from scratch for the current set.
"""
import random

from dyndict import DynamicDictionary
from dyndict.oracle import ACView, DawgView, ReferenceAC, ReferenceDawg, structures_equal

rng = random.Random(7)
dd = DynamicDictionary()
present = []
for step in range(12):
    if present and rng.random() < 0.4:
        p = present.pop(rng.randrange(len(present)))
        dd.delete(p)
        op = "-"
    else:
        p = bytes(rng.choice(b"ab") for _ in range(rng.randint(2, 6)))
        if p in present:
            continue
        dd.insert(p)
        present.append(p)
        op = "+"
    dawg_ok, _ = structures_equal(ReferenceDawg(present), DawgView(dd.dawg), "dawg")
    ac_ok, _ = structures_equal(ReferenceAC(present), ACView(dd.ac), "ac")
    st = dd.last_stats
    print(f"{op} {p.decode():<7} nodes={len(dd.dawg):<3} states={len(dd.ac):<3} "
          f"split={st.nodes_split} deleted={st.nodes_deleted} "
          f"dawg_ok={dawg_ok} ac_ok={ac_ok}")

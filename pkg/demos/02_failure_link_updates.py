"""Watch which failure links move when a pattern is inserted, then deleted.

Only the states reached through inverse suffix links from the classes of
the new prefixes are touched; every other state keeps its failure link.
"""
from dyndict import DynamicDictionary


def flinks(dd):
    return {s.string: s.flink.string for s in dd.ac.states.values() if s.flink is not None}


def show(s):
    return s.decode() or "root"


dd = DynamicDictionary()
for p in (b"abba", b"aca", b"cbb"):
    dd.insert(p)
before = flinks(dd)

st = dd.insert(b"bac")
after = flinks(dd)
print("insert bac")
for s in sorted(before):
    if before[s] != after[s]:
        print(f"  flink({show(s)}): {show(before[s])} -> {show(after[s])}")
for s in sorted(set(after) - set(before)):
    print(f"  new state {show(s)} with flink {show(after[s])}")
print(f"  u_f={st.u_f} u_o={st.u_o}")

st = dd.delete(b"bac")
print("delete bac")
print("  failure links restored:", flinks(dd) == before, f"(u_f={st.u_f})")

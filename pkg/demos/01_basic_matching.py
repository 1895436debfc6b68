"""Build a small dictionary and scan a text with both matchers.

The DAWG matcher and the Aho-Corasick matcher see the same dictionary and
must report the same occurrences; the brute-force scan is shown alongside.
"""
from dyndict import DynamicDictionary
from dyndict.oracle import brute_match

dd = DynamicDictionary()
for p in (b"abba", b"aca", b"cbb"):
    dd.insert(p)

text = b"acabbacbb"
print("text:", text.decode())
for name, occ in (("dawg", dd.match_dawg(text)), ("ac", dd.match_ac(text))):
    found = sorted((o.end_pos, dd.pattern(o.pattern_id).decode()) for o in occ)
    print(f"{name:>6}: {found}")
print(" brute:", sorted((j, p.decode()) for p, j in brute_match(dd.patterns, text)))

c = dd.matcher.counters
print(f"\nDAWG scan: {c.symbols} symbols, {c.slinks_followed} suffix links, "
      f"{c.nma_queries} nearest-marked-ancestor queries")

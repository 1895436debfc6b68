import random

import pytest

from dyndict import DynamicDictionary, get_fail_states, get_out_states
from dyndict.ac import check_ac_invariants, check_correspondence
from dyndict.oracle import ACView, ReferenceAC, brute_match, structures_equal

from support import assert_isomorphic


def build(*patterns):
    dd = DynamicDictionary()
    for p in patterns:
        dd.insert(p)
    return dd


def flinks(dd):
    return {s.string: s.flink.string for s in dd.ac.states.values() if s.flink is not None}


def test_out_states():
    dd = build(b"baaaac")
    assert [s.string for s in get_out_states(dd.dawg, b"c")] == [b"baaaac"]


def test_out_states_examples(three_patterns):
    assert get_out_states(three_patterns.dawg, b"bac") == []
    assert [s.string for s in get_out_states(three_patterns.dawg, b"ba")] == [b"abba"]


def test_fail_states_examples(three_patterns):
    got = {(s.string, i) for s, i in get_fail_states(three_patterns.dawg, b"bac", 1)}
    assert got == {(b"abba", 2), (b"ab", 1), (b"abb", 1), (b"cb", 1), (b"cbb", 1)}
    assert get_fail_states(build(b"aaa").dawg, b"b", 1) == []
    got = [(s.string, i) for s, i in get_fail_states(build(b"baaaac").dawg, b"c", 1)]
    assert got == [(b"baaaac", 1)]


def test_insert_bac(three_patterns):
    before = flinks(three_patterns)
    st = three_patterns.insert(b"bac")
    after = flinks(three_patterns)
    changed = {s: after[s] for s in before if before[s] != after[s]}
    assert changed == {b"ab": b"b", b"abb": b"b", b"cb": b"b", b"cbb": b"b", b"abba": b"ba"}
    assert (st.u_f, st.u_o) == (5, 0)
    assert after[b"b"] == b"" and after[b"ba"] == b"a" and after[b"bac"] == b"ac"
    assert_isomorphic(three_patterns)


def test_insert_into_empty():
    dd = DynamicDictionary()
    st = dd.insert(b"abc")
    assert len(dd.ac) == 4
    assert all(f == b"" for f in flinks(dd).values())
    assert (st.u_f, st.u_o) == (0, 0)


def test_delete_bac_reverts(three_patterns):
    reference = flinks(three_patterns)
    three_patterns.insert(b"bac")
    three_patterns.delete(b"bac")
    assert flinks(three_patterns) == reference
    ok, witness = structures_equal(ReferenceAC([b"abba", b"aca", b"cbb"]), ACView(three_patterns.ac), "ac")
    assert ok, witness


def test_delete_sole_pattern():
    dd = build(b"abc")
    dd.delete(b"abc")
    assert list(dd.ac.states.values()) == [dd.ac.root]
    assert not dd.ac.root.goto


def test_delete_keeps_shared_prefix():
    dd = build(b"ab", b"abc")
    dd.delete(b"abc")
    assert dd.ac.state_of(b"a").weight == 1
    assert dd.ac.state_of(b"ab").weight == 1
    assert dd.ac.state_of(b"abc") is None


def test_insertion_of_existing_prefix_updates_outputs():
    dd = build(b"abc", b"xab")
    st = dd.insert(b"ab")
    assert st.u_o == 2  # "ab" and "xab"
    assert_isomorphic(dd)


def test_match_examples(three_patterns):
    def occ(text):
        return {(three_patterns.pattern(o.pattern_id), o.end_pos) for o in three_patterns.match_ac(text)}

    assert occ(b"acabbacbb") == {(b"aca", 3), (b"abba", 6), (b"cbb", 9)}
    three_patterns.insert(b"bac")
    assert occ(b"abacab") == {(b"bac", 4), (b"aca", 5)}
    assert DynamicDictionary().match_ac(b"anything") == []


@pytest.mark.parametrize("seed", range(30))
def test_random_updates(seed):
    rng = random.Random(seed)
    alpha = b"ab" if seed % 3 == 0 else b"abc"
    dd = DynamicDictionary(nma="naive" if seed % 2 else "linkcut")
    present = []
    for _ in range(25):
        if present and rng.random() < 0.4:
            p = present.pop(rng.randrange(len(present)))
            dd.delete(p)
        else:
            p = bytes(rng.choice(alpha) for _ in range(rng.randint(1, 7)))
            if p in present:
                continue
            dd.insert(p)
            present.append(p)
        check_ac_invariants(dd.ac)
        check_correspondence(dd.ac)
        assert_isomorphic(dd)
        text = bytes(rng.choice(alpha) for _ in range(30))
        expect = brute_match(present, text)
        assert {(dd.pattern(o.pattern_id), o.end_pos) for o in dd.match_ac(text)} == expect
        assert {(dd.pattern(o.pattern_id), o.end_pos) for o in dd.match_dawg(text)} == expect


def test_dump(three_patterns):
    lines = three_patterns.ac.dump().splitlines()
    assert len(lines) == 10
    root = lines[0].split("\t")
    assert root[:3] == ["0", "0", "3"] and root[4] == ""

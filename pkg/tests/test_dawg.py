import random

import pytest
from hypothesis import given, settings, strategies as st

from dyndict import Dawg, DuplicatePattern, EmptyPattern, UnknownPattern
from dyndict.bench import lemma2_dictionary
from dyndict.dawg import check_invariants
from dyndict.oracle import DawgView, ReferenceDawg, structures_equal


def build(*patterns, nma="linkcut"):
    dawg = Dawg(nma=nma)
    for p in patterns:
        dawg.insert(p)
    return dawg


def same_as_reference(dawg):
    return structures_equal(ReferenceDawg(dawg.patterns), DawgView(dawg), "dawg")


def test_single_symbol():
    dawg = build(b"a")
    assert len(dawg) == 2
    assert [(c, u.longest) for c, u in dawg.source.edges.items()] == [(ord("a"), b"a")]
    a = dawg.walk(b"a")
    assert dawg.source.is_primary(a)
    assert a.slink is dawg.source
    check_invariants(dawg)


@pytest.fixture
def abba():
    return build(b"abba")


def test_abba_shape(abba):
    assert len(abba) == 6
    non_trunk = [v for v in abba.nodes.values() if not abba.is_trunk(v)]
    assert [v.longest for v in non_trunk] == [b"b"]
    secondary = sorted(
        (v.longest, chr(c), u.longest)
        for v in abba.nodes.values()
        for c, u in v.edges.items()
        if not v.is_primary(u)
    )
    assert secondary == [(b"b", "a", b"abba"), (b"b", "b", b"abb")]
    assert abba.edge_count() == 7
    check_invariants(abba)


def test_abba_transitions(abba):
    src = abba.source
    a, b = abba.walk(b"a"), abba.walk(b"b")
    assert abba.transition(src, ord("a")) == (a, True)
    target, primary = abba.transition(b, ord("b"))
    assert target is abba.walk(b"bb") is abba.walk(b"abb")
    assert target.longest == b"abb" and not primary
    assert abba.transition(abba.walk(b"ab"), ord("a")) is None


def test_abba_inverse_suffix_links(abba):
    a, b = abba.walk(b"a"), abba.walk(b"b")
    assert abba.isuf(abba.source) == [(ord("a"), a), (ord("b"), b)]
    assert abba.isuf(b) == [(ord("a"), abba.walk(b"ab")), (ord("b"), abba.walk(b"abb"))]
    assert abba.isuf(abba.walk(b"ba")) == []
    assert abba.walk(b"ba") is abba.walk(b"abba")


def test_errors(abba):
    with pytest.raises(EmptyPattern):
        abba.insert(b"")
    with pytest.raises(DuplicatePattern):
        abba.insert("abba")
    with pytest.raises(UnknownPattern):
        abba.delete(b"ab")


def test_insert_delete_single():
    dawg = build(b"a")
    dawg.delete(b"a")
    assert list(dawg.nodes.values()) == [dawg.source]
    assert not dawg.source.edges and not dawg.source.isuf
    check_invariants(dawg)


def test_delete_restores_smaller_dictionary():
    dawg = build(b"abba", b"aca")
    dawg.delete(b"aca")
    ok, witness = structures_equal(ReferenceDawg([b"abba"]), DawgView(dawg), "dawg")
    assert ok, witness
    check_invariants(dawg)


def test_insert_then_delete_is_identity():
    dawg = build(b"abba", b"aca", b"cbb")
    before = same_as_reference(dawg)
    dawg.insert(b"bac")
    dawg.delete(b"bac")
    assert before == same_as_reference(dawg) == (True, None)


def test_lemma2_family_splits():
    d, p = lemma2_dictionary(5, 6)
    dawg = build(*d)
    ins = dawg.insert(p)
    assert ins.nodes_split >= 3
    assert ins.edges_copied >= (5 - 2) * 3
    dele = dawg.delete(p)
    assert dele.edges_deleted >= (5 - 2) * 3
    check_invariants(dawg)


def test_witness_survives_deletion_of_source_pattern():
    # "ab" is first read from "abc"; after deleting "abc" the class of "ab"
    # must still report its longest member and labels correctly
    dawg = build(b"abc", b"xab")
    dawg.delete(b"abc")
    check_invariants(dawg)
    assert dawg.walk(b"ab").longest == b"xab"
    assert same_as_reference(dawg) == (True, None)


def test_suffix_link_tree_is_reversed_suffix_tree():
    pats = [b"abba", b"aca", b"cbb", b"bac"]
    dawg = build(*pats)
    rev = {p[::-1] for p in pats}
    for v in dawg.nodes.values():
        r = v.longest[::-1]
        # every node spells a substring of a reversed pattern read from the root
        assert any(r in q for q in rev) or v is dawg.source
        for label, child in v.isuf.items():
            rc = child.longest[::-1]
            assert rc.startswith(r) and rc[len(r)] == label


@pytest.mark.parametrize("nma", ["linkcut", "naive"])
@pytest.mark.parametrize("seed", range(20))
def test_random_sequences_match_reference(seed, nma):
    rng = random.Random(seed)
    alpha = b"ab" if seed % 2 else b"abcd"
    dawg = Dawg(nma=nma)
    present = []
    for _ in range(30):
        if present and rng.random() < 0.4:
            p = present.pop(rng.randrange(len(present)))
            dawg.delete(p)
        else:
            p = bytes(rng.choice(alpha) for _ in range(rng.randint(1, 8)))
            if p in present:
                continue
            dawg.insert(p)
            present.append(p)
        check_invariants(dawg)
        assert same_as_reference(dawg) == (True, None)


patterns = st.lists(st.binary(min_size=1, max_size=7).map(lambda b: bytes(x % 3 + 97 for x in b)),
                    max_size=6, unique=True)


@settings(max_examples=80, deadline=None)
@given(patterns, st.randoms(use_true_random=False))
def test_any_deletion_order(pats, rnd):
    dawg = build(*pats)
    rnd.shuffle(pats)
    while pats:
        dawg.delete(pats.pop())
        check_invariants(dawg)
        assert same_as_reference(dawg) == (True, None)
    assert len(dawg) == 1


@settings(max_examples=80, deadline=None)
@given(patterns)
def test_size_bounds(pats):
    dawg = build(*pats)
    d = dawg.total_length()
    assert len(dawg) <= 2 * d + 1
    if d >= 3:
        assert dawg.edge_count() <= 4 * d


@settings(max_examples=50, deadline=None)
@given(patterns)
def test_reference_counts_distinct_epos_sets(pats):
    ref = ReferenceDawg(pats)
    substrings = {p[i:j] for p in pats for i in range(len(p) + 1) for j in range(i, len(p) + 1)}
    substrings.add(b"")
    epos = {frozenset((k, j) for k, p in enumerate(sorted(set(pats)))
                      for j in range(len(x), len(p) + 1) if p[j - len(x):j] == x)
            for x in substrings}
    assert len(ref) == len(epos)


def test_dump_format(abba):
    lines = abba.dump().splitlines()
    assert len(lines) == 6
    assert lines[0].split("\t")[:3] == ["0", "0", "1"]
    assert "b:" in lines[0] and ":P" in lines[0]

import pytest

from dyndict import BadParams
from dyndict.bench import bench_family, bench_lemma2, bench_theorem3


@pytest.mark.parametrize("x,k,expected", [(1, 1, 1), (3, 3, 18), (2, 4, 20)])
def test_theorem3_total(x, k, expected):
    res = bench_theorem3(x, k)
    assert res.total["u_f"] == expected
    assert [row[1] for row in res.rows] == [x * (k - j + 1) for j in range(1, k + 1)]


def test_lemma2_rounds_identical():
    res = bench_lemma2(5, 6, 3)
    inserts = [row[2:] for row in res.rows if row[1] == "insert"]
    deletes = [row[2:] for row in res.rows if row[1] == "delete"]
    assert len(inserts) == len(deletes) == 3
    assert inserts[0] == inserts[1] == inserts[2]
    assert deletes[0] == deletes[1] == deletes[2]
    copied = res.columns.index("edges_copied")
    assert all(row[copied] >= 9 for row in res.rows if row[1] == "insert")


@pytest.mark.parametrize("family,params", [
    ("lemma2", {"sigma": 2}),
    ("lemma2", {"m": 5}),
    ("theorem3", {"x": 0}),
    ("theorem3", {"x": 3, "sigma": 3}),
    ("other", {}),
])
def test_bad_params(family, params):
    with pytest.raises(BadParams):
        bench_family(family, **params)


def test_tsv():
    tsv = bench_theorem3(1, 2).to_tsv().splitlines()
    assert tsv[0] == "j\tu_f\tu_o"
    assert tsv[-1].startswith("total\t3")

import pytest
from hypothesis import given, strategies as st

from genus3.bounds import (
    ATTRIBUTION,
    KNOWN,
    applicable_items,
    best_upper_bound,
    known_table,
    serre_lemma_bound,
    serre_lemma_bound_unguarded,
    serre_m,
)
from genus3.errors import NotPrimePower


def test_serre_m_examples():
    assert [serre_m(4), serre_m(8), serre_m(97)] == [4, 5, 19]


@given(st.integers(2, 10**6))
def test_serre_m_floor(q):
    m = serre_m(q)
    assert m * m <= 4 * q < (m + 1) ** 2


def test_serre_m_exhaustive_small():
    for q in range(2, 20000):
        m = serre_m(q)
        assert m * m <= 4 * q < (m + 1) ** 2


def test_items_examples():
    assert applicable_items(37)["d"] == 72
    assert applicable_items(23)["g"] == 48
    items = applicable_items(8)
    assert "b" not in items and items["c"] == 24
    assert "b" not in applicable_items(9)
    with pytest.raises(NotPrimePower):
        applicable_items(6)


def test_item_conditions():
    assert "e" in applicable_items(11)  # 3^2 + 2
    assert "e" not in applicable_items(3)  # 1^2 + 2, needs a >= 2
    assert "f" in applicable_items(7)  # 2^2 + 2 + 1
    assert "f" in applicable_items(3)  # 1 + 1 + 1
    assert "g" in applicable_items(59)  # 7^2 + 7 + 3
    assert "g" not in applicable_items(5)  # 1 + 1 + 3, needs a >= 3


def test_lemma():
    assert serre_lemma_bound(32) == 64
    assert serre_lemma_bound(9) is None
    assert serre_lemma_bound(2) == 7
    assert serre_lemma_bound(8) is None
    # the unguarded formula undercuts the attained values at squares and q = 8
    for q in (8, 9, 25, 49, 64, 81):
        raw = serre_lemma_bound_unguarded(q)
        assert raw is not None and raw < KNOWN[q]


def test_best_examples():
    r = best_upper_bound(32)
    assert r.best == 64 and r.achieved_by == ("lemma",)
    assert r.items["c"] == 66
    r = best_upper_bound(19)
    assert r.best == 44 and set(r.achieved_by) == {"b", "c"}
    r = best_upper_bound(2)
    assert r.best == 7 and set(r.achieved_by) == {"a", "d", "lemma"}
    with pytest.raises(NotPrimePower):
        best_upper_bound(100)


def test_known_table():
    t = known_table()
    assert len(t) == 35 and t[29] == 60 and t[83] == 136 and 6 not in t
    assert all(q < 100 for q in t)


@pytest.mark.parametrize("q", sorted(KNOWN))
def test_table_matches_best_bound(q):
    r = best_upper_bound(q)
    assert r.best == r.known == KNOWN[q]
    assert all(r.best <= v for v in r.items.values())
    m = r.m
    assert m * m <= 4 * q < (m + 1) ** 2


@pytest.mark.parametrize("q", sorted(ATTRIBUTION))
def test_attribution(q):
    r = best_upper_bound(q)
    for label in ATTRIBUTION[q]:
        assert label in r.achieved_by
    if not ATTRIBUTION[q]:
        assert r.achieved_by == ("lemma",)


def test_refined_items_never_exceed_c():
    for q in range(2, 2000):
        try:
            items = applicable_items(q)
        except NotPrimePower:
            continue
        for label in "defg":
            if label in items:
                assert items[label] <= items["c"]
